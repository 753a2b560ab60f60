#include "qgt/schur.hpp"

#include "qgt/linalg.hpp"

namespace qgt {

Rational schur_branching_dp(const Signature& lam, std::span<const Rational> x) { return schur_dp<Rational>(lam, x); }

Rational schur_bialternant(const Signature& lam, std::span<const Rational> x) {
  const int N = lam.level();
  if (static_cast<int>(x.size()) != N)
    throw Error(ErrorKind::LevelMismatch, "point has " + std::to_string(x.size()) + " coordinates for " + lam.str());
  Rational vandermonde = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      if (x[i] == x[j]) throw Error(ErrorKind::RepeatedPoint, "bialternant at a repeated point");
      vandermonde *= x[i] - x[j];
    }
  Matrix<Rational> m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      long e = lam[j] + N - 1 - j;
      if (e < 0 && x[i] == 0) throw Error(ErrorKind::ZeroPoint, "negative exponent at a zero coordinate");
      m(i, j) = rpow(x[i], e);
    }
  return determinant(m) / vandermonde;
}

Rational schur_eval(const Signature& lam, std::span<const Rational> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return schur_branching_dp(lam, x);
  return schur_bialternant(lam, x);
}

Rational principal_spec(const Signature& lam, const QParam& q, Direction dir) {
  const int N = lam.level();
  long n = 0;
  for (int i = 0; i < N; ++i) n += static_cast<long>(i) * lam[i];
  Rational v = q_pow(q, n);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) v *= (1 - q_pow(q, lam[i] - lam[j] + j - i)) / (1 - q_pow(q, j - i));
  if (dir == Direction::descending) v *= q_pow(q, -static_cast<long>(N - 1) * lam.size());
  return v;
}

Rational dim_q(const Signature& lam, const QParam& q) { return principal_spec(lam, q, Direction::ascending); }

Rational hook_content_limit(const Signature& mu, const QParam& q) {
  if (!mu.nonnegative()) throw Error(ErrorKind::NegativeCoordinate, "hook-content limit of " + mu.str());
  auto d = diagram_stats(mu);
  Rational v = q_pow(q, d.n);
  for (const auto& row : d.hooks)
    for (int h : row) v /= 1 - q_pow(q, h);
  return v;
}

std::vector<Rational> principal_point(int N, const QParam& q, Direction dir) {
  std::vector<Rational> x;
  for (int i = 0; i < N; ++i) x.push_back(q_pow(q, dir == Direction::ascending ? i : -i));
  return x;
}

}  // namespace qgt
