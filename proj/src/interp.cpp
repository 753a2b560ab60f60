#include "qgt/interp.hpp"

#include <algorithm>

#include "qgt/linalg.hpp"

namespace qgt {

FactorialSequence<Rational> interp_sequence(const Rational& base, int N) {
  return [base, N](long i) { return Rational(-rpow(base, i - N)); };
}

FactorialSequence<Rational> hat_sequence(const QParam& q) {
  Rational base = q.value();
  return [base](long i) { return Rational(-rpow(base, 1 - i)); };
}

Rational factorial_schur_det(const Signature& lam, std::span<const Rational> x, const FactorialSequence<Rational>& a) {
  const int N = lam.level();
  if (static_cast<int>(x.size()) != N)
    throw Error(ErrorKind::LevelMismatch, "point has " + std::to_string(x.size()) + " coordinates for " + lam.str());
  if (!lam.nonnegative()) throw Error(ErrorKind::NegativeCoordinate, "factorial Schur of " + lam.str());
  Rational vandermonde = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      if (x[i] == x[j]) throw Error(ErrorKind::RepeatedPoint, "alternant ratio at a repeated point");
      vandermonde *= x[i] - x[j];
    }
  Matrix<Rational> m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Rational p = 1;
      for (int r = 1; r <= lam[j] + N - 1 - j; ++r) p *= x[i] + a(r);
      m(i, j) = p;
    }
  return determinant(m) / vandermonde;
}

std::vector<Rational> grid_point(const Signature& lam, const Rational& base) {
  std::vector<Rational> x;
  for (int i = 0; i < lam.level(); ++i) x.push_back(rpow(base, lam[i] - i));
  return x;
}

Rational interp_at_grid(const Signature& mu, const Signature& lam, const Rational& base) {
  auto x = grid_point(lam, base);
  return interp_schur<Rational>(mu, x, base);
}

Rational interp_diagonal(const Signature& mu, const Rational& base) {
  auto d = diagram_stats(mu);
  Rational v = rpow(base, d.n_prime - 2 * d.n);
  for (const auto& row : d.hooks)
    for (int h : row) v *= rpow(base, h) - 1;
  return v;
}

Rational interp_at_zero(const Signature& mu, int N, const QParam& q) {
  Signature m = mu.padded(N);
  Rational v = principal_spec(m, q, Direction::ascending);
  auto d = diagram_stats(m);
  for (const auto& row : d.contents)
    for (int c : row) v *= -q_pow(q, -c);
  return v;
}

Coefficients binomial_expand(const Signature& lam, const Rational& base) {
  const int k = lam.level();
  auto desc = [&](const Signature& s) {
    std::vector<Rational> x;
    for (int i = 0; i < k; ++i) x.push_back(rpow(base, -i));
    return schur_branching_dp(s, x);
  };
  const Rational top = desc(lam);
  Coefficients out;
  for (const auto& mu : partitions_in_box(k, lam.level() ? lam[0] : 0)) {
    if (!contained(mu, lam)) continue;
    out[mu] = interp_at_grid(mu, lam, base) / interp_diagonal(mu, base) * top / desc(mu);
  }
  return out;
}

Coefficients binomial_expand_schur(const Signature& lam, const Rational& base) {
  const int k = lam.level();
  const Rational inv = 1 / base;
  std::vector<Rational> zero(k, Rational(0));
  auto at_zero = [&](const Signature& s) { return interp_schur<Rational>(s, zero, base); };
  const Rational top = at_zero(lam);
  Coefficients out;
  for (const auto& mu : partitions_in_box(k, lam.level() ? lam[0] : 0)) {
    if (!contained(mu, lam)) continue;
    out[mu] = interp_at_grid(mu, lam, inv) / interp_diagonal(mu, inv) * top / at_zero(mu);
  }
  return out;
}

Coefficients grid_solve_on(const std::vector<Signature>& support,
                           const std::function<Rational(const Signature&)>& value, const Rational& base) {
  Coefficients a;
  std::vector<std::pair<Signature, Rational>> solved;
  for (const auto& lam : support) {
    auto x = grid_point(lam, base);
    Rational rhs = value(lam);
    for (const auto& [mu, coeff] : solved) {
      if (coeff == 0 || !contained(mu, lam)) continue;
      rhs -= coeff * interp_schur<Rational>(mu, x, base);
    }
    Rational c = rhs / interp_diagonal(lam, base);
    solved.emplace_back(lam, c);
    a[lam] = c;
  }
  return a;
}

Coefficients grid_triangular_solve(const std::map<Signature, Rational>& values, const Rational& base) {
  std::vector<Signature> support;
  for (const auto& [lam, v] : values) {
    if (!lam.nonnegative()) throw Error(ErrorKind::NegativeCoordinate, "grid node " + lam.str());
    for (const auto& mu : partitions_in_box(lam.level(), lam.level() ? lam[0] : 0))
      if (contained(mu, lam) && !values.count(mu)) throw Error(ErrorKind::MissingGridValue, mu.str());
    support.push_back(lam);
  }
  std::stable_sort(support.begin(), support.end(), graded_less);
  return grid_solve_on(support, [&](const Signature& s) { return values.at(s); }, base);
}

Rational factorial_elementary(int k, std::span<const Rational> y, const FactorialSequence<Rational>& a, long j) {
  const int m = static_cast<int>(y.size());
  if (k < 0 || k > m) return 0;
  if (k == 0) return 1;
  std::vector<int> c(m, 0);
  std::fill(c.begin(), c.begin() + k, 1);
  return factorial_schur<Rational>(Signature(c), y, shifted(a, j));
}

Rational factorial_schur_by_elementary(const Signature& lam, std::span<const Rational> y,
                                       const FactorialSequence<Rational>& a, int size) {
  auto lt = transpose(lam.coords());
  if (size < static_cast<int>(lt.size()))
    throw Error(ErrorKind::InvalidArgument, "determinant size below the first row length");
  lt.resize(size, 0);
  Matrix<Rational> m(size, size);
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) m(i - 1, j - 1) = factorial_elementary(lt[i - 1] - i + j, y, a, j - 1);
  return determinant(m);
}

DualCauchy dual_cauchy(std::span<const Rational> x, std::span<const Rational> y, const FactorialSequence<Rational>& a) {
  const int N = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  DualCauchy out{1, 0};
  for (const auto& xi : x)
    for (const auto& yj : y) out.product *= yj - xi;
  for (const auto& lam : partitions_in_box(N, m)) {
    auto lt = transpose(lam.coords());
    lt.resize(m, 0);
    std::vector<int> hat(m);
    for (int i = 0; i < m; ++i) hat[i] = N - lt[m - 1 - i];
    Rational term = factorial_schur<Rational>(lam, x, a) * factorial_schur<Rational>(Signature(hat), y, a);
    out.sum += (lam.size() % 2 ? -term : term);
  }
  return out;
}

}  // namespace qgt
