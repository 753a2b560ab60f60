#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "qgt/exact.hpp"
#include "qgt/gt.hpp"
#include "qgt/schur.hpp"

namespace qgt {

// a_1, a_2, ... (any integer index is accepted; shifted sequences reach past the start).
template <class S>
using FactorialSequence = std::function<S(long)>;

// a_i = -base^{i-N}: the interpolation sequence with parameter `base` in N variables.
FactorialSequence<Rational> interp_sequence(const Rational& base, int N);
// a_i = -q^{1-i}
FactorialSequence<Rational> hat_sequence(const QParam& q);

template <class S>
FactorialSequence<S> shifted(FactorialSequence<S> a, long j) {
  return [a = std::move(a), j](long i) { return a(i + j); };
}

// Tableau-sum evaluation of s_lambda(x | a), organized level by level.
template <class S>
S factorial_schur(const Signature& lam, std::span<const S> x, const FactorialSequence<S>& a) {
  if (lam.level() != static_cast<int>(x.size()))
    throw Error(ErrorKind::LevelMismatch, "point has " + std::to_string(x.size()) + " coordinates for " + lam.str());
  return detail::gt_pattern_sum<S>(lam, [&](int n, int d) { return x[n - 1] + a(n + d); });
}

// Ratio of alternants; needs distinct points.
Rational factorial_schur_det(const Signature& lam, std::span<const Rational> x, const FactorialSequence<Rational>& a);

// s*_mu(x; base) with a_i = -base^{i-N}, N = length of x. base is q or 1/q.
template <class S>
S interp_schur(const Signature& mu, std::span<const S> x, const Rational& base) {
  const int N = static_cast<int>(x.size());
  Signature m = mu.level() < N ? mu.padded(N) : mu;
  auto a = interp_sequence(base, N);
  return detail::gt_pattern_sum<S>(m, [&](int n, int d) { return x[n - 1] + scalar_from<S>(a(n + d)); });
}

// (base^{lam_1}, base^{lam_2 - 1}, ..., base^{lam_N - N + 1})
std::vector<Rational> grid_point(const Signature& lam, const Rational& base);

Rational interp_at_grid(const Signature& mu, const Signature& lam, const Rational& base);
// Closed form of s*_mu at its own grid point: base^{n(mu')-2n(mu)} prod (base^h - 1).
Rational interp_diagonal(const Signature& mu, const Rational& base);
// s*_mu(0,...,0; q^{-1}) in N variables, closed form.
Rational interp_at_zero(const Signature& mu, int N, const QParam& q);

using Coefficients = std::map<Signature, Rational>;

// s_lam = sum_mu C_mu s*_mu(.; base), mu inside lam.
Coefficients binomial_expand(const Signature& lam, const Rational& base);
// s*_lam(.; base) = sum_mu D_mu s_mu, mu inside lam.
Coefficients binomial_expand_schur(const Signature& lam, const Rational& base);

// Newton-type solve of F = sum a_mu s*_mu(.; base) from values on the grid.
// The support must be closed under taking smaller diagrams.
Coefficients grid_triangular_solve(const std::map<Signature, Rational>& values, const Rational& base);
// Same forward substitution, given that a_mu vanishes off `support`.
// support must be listed in graded order.
Coefficients grid_solve_on(const std::vector<Signature>& support,
                           const std::function<Rational(const Signature&)>& value, const Rational& base);

// e_k(y | tau^j a) = s_{1^k}(y | tau^j a)
Rational factorial_elementary(int k, std::span<const Rational> y, const FactorialSequence<Rational>& a, long j);
// det[e_{lam'_i - i + j}(y | tau^{j-1} a)] of size `size` (>= lam_1).
Rational factorial_schur_by_elementary(const Signature& lam, std::span<const Rational> y,
                                       const FactorialSequence<Rational>& a, int size);

struct DualCauchy {
  Rational product;  // prod_{i,j} (y_j - x_i)
  Rational sum;      // sum over lam in m^N of (-1)^{|lam|} s_lam(x|a) s_hat(y|a)
};
DualCauchy dual_cauchy(std::span<const Rational> x, std::span<const Rational> y, const FactorialSequence<Rational>& a);

}  // namespace qgt
