#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qgt/exact.hpp"

namespace qgt {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string witness;  // exact counterexample or note
};

struct VerifyConfig {
  QParam q{Rational(1, 2)};
  std::uint64_t seed = 1;
  long long budget_ms = 0;  // 0: unlimited
};

std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg);
// Runs one suite or "all", prints a table, returns 0 when every check passed.
int run_verify(const std::string& suite, const VerifyConfig& cfg, std::ostream& out);

}  // namespace qgt
