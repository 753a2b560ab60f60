#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "qgt/exact.hpp"
#include "qgt/gt.hpp"

namespace qgt {

namespace detail {

// Sum over all Gelfand-Tsetlin patterns with top row lam (nonnegative) of
// prod over boxes (i,j) added at level n of weight(n, j - i).
// This is the tableau sum of a factorial Schur function reorganized by levels.
template <class S, class Weight>
S gt_pattern_sum(const Signature& lam, Weight&& weight) {
  const int N = lam.level();
  if (N == 0) return S(1);
  if (!lam.nonnegative()) throw Error(ErrorKind::NegativeCoordinate, "pattern sum needs " + lam.str() + " >= 0");
  const int lo_d = -N, hi_d = lam[0];
  // table[n][d - lo_d] = weight(n, d)
  std::vector<std::vector<S>> table(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int d = lo_d; d <= hi_d; ++d) table[n].push_back(weight(n, d));
  auto row_product = [&](int n, int i, int from, int to) {  // columns from+1..to of row i
    S p(1);
    for (int j = from + 1; j <= to; ++j) p *= table[n][j - i - lo_d];
    return p;
  };

  std::map<std::vector<int>, S> memo;
  std::function<S(const std::vector<int>&)> value = [&](const std::vector<int>& mu) -> S {
    const int n = static_cast<int>(mu.size());
    if (n == 1) return row_product(1, 1, 0, mu[0]);
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    S total(0);
    std::vector<int> nu(n - 1);
    const S last_row = row_product(n, n, 0, mu[n - 1]);
    std::function<void(int, const S&)> choose = [&](int i, const S& acc) {
      if (i == n - 1) {
        total += acc * value(nu);
        return;
      }
      for (int v = mu[i + 1]; v <= mu[i]; ++v) {
        nu[i] = v;
        choose(i + 1, acc * row_product(n, i + 1, v, mu[i]));
      }
    };
    choose(0, last_row);
    memo.emplace(mu, total);
    return total;
  };
  return value(lam.coords());
}

}  // namespace detail

// Branching-rule evaluation of s_lambda at any point (repeated points allowed).
// Negative coordinates are shifted away using homogeneity.
template <class S>
S schur_dp(const Signature& lam, std::span<const S> x) {
  const int N = lam.level();
  if (static_cast<int>(x.size()) != N)
    throw Error(ErrorKind::LevelMismatch, "point has " + std::to_string(x.size()) + " coordinates for " + lam.str());
  if (N == 0) return S(1);
  int l = lam[N - 1] < 0 ? -lam[N - 1] : 0;
  S factor(1);
  if (l > 0) {
    for (const auto& xi : x) {
      if (is_zero(xi)) throw Error(ErrorKind::ZeroPoint, "negative exponent at a zero coordinate for " + lam.str());
      factor *= xi;
    }
    factor = ipow(factor, -static_cast<long>(l));
  }
  Signature base = shift(lam, l);
  return factor * detail::gt_pattern_sum<S>(base, [&](int n, int) { return x[n - 1]; });
}

Rational schur_branching_dp(const Signature& lam, std::span<const Rational> x);
Rational schur_bialternant(const Signature& lam, std::span<const Rational> x);
// Bialternant when the points are distinct, branching DP otherwise.
Rational schur_eval(const Signature& lam, std::span<const Rational> x);

enum class Direction { ascending, descending };

Rational principal_spec(const Signature& lam, const QParam& q, Direction dir);
Rational dim_q(const Signature& lam, const QParam& q);
Rational hook_content_limit(const Signature& mu, const QParam& q);

// (1, q, ..., q^{N-1}) or (1, q^{-1}, ..., q^{1-N})
std::vector<Rational> principal_point(int N, const QParam& q, Direction dir);

}  // namespace qgt
