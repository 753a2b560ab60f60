#pragma once

#include <stdexcept>
#include <string>

namespace qgt {

enum class ErrorKind {
  DegenerateEnclosure,
  LevelMismatch,
  Explosion,
  EntryOutOfRange,
  RepeatedPoint,
  ZeroPoint,
  NegativeCoordinate,
  MissingGridValue,
  NegativeNu,
  CapTooSmall,
  NegativeMass,
  LevelOutOfRange,
  IndexOutOfRange,
  TailHit,
  InvalidArgument,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qgt
