#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qgt/exact.hpp"

namespace qgt {

// Weakly decreasing integer tuple; level = number of coordinates.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> coords);
  Signature(std::initializer_list<int> coords) : Signature(std::vector<int>(coords)) {}

  static Signature zeros(int level) { return Signature(std::vector<int>(level, 0)); }

  int level() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }  // zero-based
  const std::vector<int>& coords() const { return c_; }
  long size() const;  // |lambda|
  bool nonnegative() const { return c_.empty() || c_.back() >= 0; }
  Signature padded(int level) const;

  // Young diagrams of the positive part and of the negated negative part.
  std::vector<int> plus_part() const;
  std::vector<int> minus_part() const;

  std::string str() const;

  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<int> c_;
};

// Graded order: |mu| first, then lexicographic. Refines containment.
bool graded_less(const Signature& a, const Signature& b);

struct Path {
  std::vector<Signature> levels;  // levels[k-1] has level k
  int top() const { return static_cast<int>(levels.size()); }
  const Signature& at(int k) const { return levels[k - 1]; }
};

Path make_path(std::vector<Signature> levels);

struct Tableau {
  std::vector<int> shape;                 // row lengths (a partition)
  std::vector<std::vector<int>> entries;  // entries[i][j], zero-based box coords
  bool empty() const { return shape.empty(); }
  bool semistandard() const;
};

struct DiagramStats {
  long size = 0;
  long n = 0;        // sum (i-1) lambda_i
  long n_prime = 0;  // n of the transpose
  std::vector<int> transpose;
  std::vector<std::vector<int>> hooks;  // hooks[i][j]
  std::vector<std::vector<int>> contents;
};

// Partition from any container of nonneg weakly decreasing ints; trailing zeros dropped.
std::vector<int> as_partition(const std::vector<int>& parts);
std::vector<int> transpose(const std::vector<int>& partition);
DiagramStats diagram_stats(const std::vector<int>& partition);
DiagramStats diagram_stats(const Signature& lam);

bool interlaces(const Signature& mu, const Signature& lam);
std::vector<Signature> enumerate_below(const Signature& lam);
std::vector<Path> enumerate_paths_to(const Signature& lam, std::size_t cap = 10'000'000);
Rational path_weight(const Path& p, const QParam& q);
std::pair<Tableau, Tableau> tableaux_of_path(const Path& p);
Path path_from_tableaux(const Tableau& plus, const Tableau& minus, int N);
long volume(const Tableau& t, int N);
Signature shift(const Signature& lam, int l);
std::vector<std::pair<int, int>> tiling_coords(const Path& p);

// mu inside lam coordinatewise (same level after zero padding).
bool contained(const Signature& mu, const Signature& lam);
// Coordinatewise mu >= lower.
bool dominates(const Signature& mu, const Signature& lower);

// Nonneg signatures at a level with first coordinate <= width, in graded order.
std::vector<Signature> partitions_in_box(int level, int width);
// Nonneg signatures at a level with lower <= mu (coordinatewise) and mu_1 <= width, graded order.
std::vector<Signature> signatures_above(const Signature& lower, int width);
// All signatures at a level with coordinates in [lo, hi], lexicographic.
std::vector<Signature> signatures_in_range(int level, int lo, int hi);

}  // namespace qgt
