#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "qgt/schur.hpp"

using namespace qgt;

TEST_CASE("branching DP and bialternant match the tableau oracle") {
  std::mt19937_64 g(11);
  for (int N = 1; N <= 4; ++N)
    for (const auto& lam : partitions_in_box(N, 3)) {
      auto x = oracle::random_distinct_nonzero(g, N);
      Rational ref = oracle::schur(lam, x);
      CHECK(schur_branching_dp(lam, x) == ref);
      CHECK(schur_bialternant(lam, x) == ref);
      CHECK(schur_eval(lam, x) == ref);
    }
}

TEST_CASE("negative signatures through homogeneity") {
  std::mt19937_64 g(12);
  auto x = oracle::random_distinct_nonzero(g, 3);
  Signature lam{1, 0, -2};
  Rational prod = x[0] * x[1] * x[2];
  Rational expect = oracle::schur(Signature{3, 2, 0}, x) / (prod * prod);
  CHECK(schur_branching_dp(lam, x) == expect);
  CHECK(schur_bialternant(lam, x) == expect);
  std::vector<Rational> with_zero{Rational(0), Rational(1), Rational(2)};
  CHECK_THROWS_AS(schur_branching_dp(lam, with_zero), Error);
  CHECK_THROWS_AS(schur_bialternant(lam, with_zero), Error);
}

TEST_CASE("repeated points and size mismatches") {
  std::vector<Rational> rep{Rational(1), Rational(1)};
  CHECK_THROWS_AS(schur_bialternant(Signature{1, 0}, rep), Error);
  CHECK(schur_eval(Signature{1, 0}, rep) == 2);
  CHECK_THROWS_AS(schur_branching_dp(Signature{1, 0}, std::vector<Rational>{Rational(1)}), Error);
}

TEST_CASE("q-dimension") {
  QParam half(Rational(1, 2));
  CHECK(dim_q(Signature{2, 0}, half) == Rational(7, 4));
  CHECK(dim_q(Signature{0}, half) == 1);
  // product formula q^{n(lam)} prod_{i<j} (1 - q^{lam_i - lam_j + j - i}) / (1 - q^{j - i})
  QParam q(Rational(2, 5));
  for (int N = 1; N <= 4; ++N)
    for (const auto& lam : partitions_in_box(N, 3)) {
      long n = 0;
      for (int i = 0; i < N; ++i) n += static_cast<long>(i) * lam[i];
      Rational v = q_pow(q, n);
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) v *= (1 - q_pow(q, lam[i] - lam[j] + j - i)) / (1 - q_pow(q, j - i));
      CHECK(dim_q(lam, q) == v);
      CHECK(dim_q(lam, q) == oracle::weighted_path_count(lam.coords(), q));
    }
}

TEST_CASE("q-dimension is shift covariant and approaches the hook-content limit") {
  QParam q(Rational(1, 2));
  Signature lam{2, 0, -1};
  CHECK(dim_q(shift(lam, 1), q) == q_pow(q, 3) * dim_q(lam, q));
  Signature mu{2, 1};
  Rational limit = hook_content_limit(mu, q);
  Rational gap = limit - dim_q(mu.padded(30), q);
  CHECK(gap >= 0);
  CHECK(gap < Rational(1, 1000000));
}

TEST_CASE("principal specializations in both directions") {
  QParam q(Rational(1, 3));
  Signature lam{3, 1, 0};
  CHECK(principal_spec(lam, q, Direction::ascending) == dim_q(lam, q));
  CHECK(principal_spec(lam, q, Direction::descending) ==
        schur_branching_dp(lam, principal_point(3, q, Direction::descending)));
  CHECK(principal_spec(lam, q, Direction::descending) == q_pow(q, -2 * lam.size()) * dim_q(lam, q));
}

TEST_CASE("complex evaluation agrees with exact evaluation at a rational point") {
  std::vector<Rational> x{Rational(1, 2), Rational(-2, 3), Rational(3)};
  std::vector<std::complex<double>> z;
  for (const auto& v : x) z.emplace_back(to_double(v), 0.0);
  Signature lam{2, 1, 0};
  auto c = schur_dp<std::complex<double>>(lam, z);
  CHECK(c.real() == doctest::Approx(to_double(schur_branching_dp(lam, x))));
  CHECK(c.imag() == doctest::Approx(0.0));
}
