#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "qgt/interp.hpp"
#include "qgt/measures.hpp"
#include "qgt/schur.hpp"

using namespace qgt;

TEST_CASE("boundary parameter sequences") {
  auto nu = NuSeq::parse("0 1;3");
  CHECK(nu(1) == 0);
  CHECK(nu(2) == 1);
  CHECK(nu(3) == 3);
  CHECK(nu(50) == 3);
  CHECK(nu.reversed_head(3) == Signature{3, 1, 0});
  CHECK(nu.str() == "0 1;3");
  CHECK(NuSeq::parse(nu.str()).str() == nu.str());
  CHECK(NuSeq::parse("2").str() == "2;2");
  CHECK(NuSeq::constant_tail({0, 2}).str() == "0 2;2");
  CHECK(nu.shifted(2).reversed_head(2) == Signature{3, 2});
  CHECK_THROWS_AS(nu(0), Error);
  for (auto bad : {"1 0;2", "0 2;1", "0;", "", "0;1;2", "a;1"}) CHECK_THROWS_AS(NuSeq::parse(bad), Error);
}

TEST_CASE("H^nu and its roots") {
  QParam q(Rational(1, 2));
  auto H = h_nu(NuSeq::parse("0;1"), q);
  CHECK(H.x_set == std::vector<int>{1});
  CHECK(H.poly == std::vector<Rational>{Rational(1), Rational(-1, 2)});
  auto H2 = h_nu(NuSeq::parse("0 2;2"), q);  // hits 0 and 3 and everything from 4 on
  CHECK(H2.x_set == std::vector<int>{1, 2});
  CHECK(H2(Rational(2)) == 0);
  CHECK(H2(Rational(4)) == 0);
  CHECK_THROWS_AS(h_nu(NuSeq::parse("-1;0"), q), Error);
}

TEST_CASE("specialization values") {
  QParam q(Rational(2, 5));
  auto nu = NuSeq::parse("0 1 3;3");
  auto spec = spec_nu(nu, q);
  const auto& H = spec.generating();
  for (int k = 1; k <= 5; ++k) {
    Rational direct = 0;
    for (int x : H.x_set) direct -= q_pow(q, static_cast<long>(k) * x);
    CHECK(spec.p(k) == direct);
  }
  CHECK(spec.p(1) == spec.h(1));
  CHECK(spec.h(0) == 1);
  CHECK(spec.h(H.degree() + 1) == 0);
  CHECK(spec.schur(Signature{1}) == spec.h(1));
  CHECK(spec.schur(Signature{H.degree() + 1}) == 0);
}

TEST_CASE("cotransition kernel") {
  QParam q(Rational(1, 2));
  for (const auto& lam : signatures_in_range(3, -1, 2)) {
    Rational s = 0;
    for (const auto& [mu, p] : cotransition_row(lam, q)) {
      CHECK(p > 0);
      CHECK(p == cotransition(lam, mu, q));
      s += p;
    }
    CHECK(s == 1);
  }
  CHECK(cotransition(Signature{2, 0}, Signature{3}, q) == 0);
  CHECK(cotransition(Signature{2, 0}, Signature{1}, q) == Rational(2, 7));
}

TEST_CASE("finite measures validate their invariants") {
  FiniteMeasure m = FiniteMeasure::delta(Signature{1, 0});
  CHECK_NOTHROW(m.validate());
  m.mass[Signature{1, 0}] = Rational(1, 2);
  CHECK_THROWS_AS(m.validate(), Error);
  m.tail = Rational(1, 2);
  CHECK_NOTHROW(m.validate());
  m.mass[Signature{2, 0}] = Rational(-1, 4);
  m.tail = Rational(3, 4);
  CHECK_THROWS_AS(m.validate(), Error);
  FiniteMeasure wrong = FiniteMeasure::delta(Signature{1});
  wrong.level = 2;
  CHECK_THROWS_AS(wrong.validate(), Error);
}

TEST_CASE("primitive systems") {
  QParam q(Rational(1, 2));
  Signature lam{2, 0, -1};
  auto P1 = primitive_system(lam, 1, q);
  CHECK(P1.total() == 1);
  CHECK(coherence_check(primitive_system(lam, 2, q), P1, q) == 0);
  CHECK_THROWS_AS(primitive_system(lam, 4, q), Error);
  CHECK_THROWS_AS(primitive_system(lam, 0, q), Error);
  CHECK_THROWS_AS(pushdown(P1, q), Error);
}

TEST_CASE("extreme projection of the two-point example") {
  for (auto qv : {Rational(1, 2), Rational(2, 5)}) {
    QParam q(qv);
    auto E = extreme_projection(NuSeq::parse("0;1"), 1, q, {Rational(1, 1000)});
    CHECK(E.mass.size() == 2);
    CHECK(E.at(Signature{0}) == 1 - qv);
    CHECK(E.at(Signature{1}) == qv);
    CHECK(E.tail == 0);
  }
}

TEST_CASE("extreme projections are coherent, supported and multiplicative") {
  QParam q(Rational(1, 2));
  auto nu = NuSeq::constant_tail({0, 1, 3});
  auto E2 = extreme_projection(nu, 2, q);
  auto E3 = extreme_projection(nu, 3, q);
  CHECK(coherence_check(E3, E2, q) <= Rational(2, 10000));
  for (const auto& [mu, v] : E3.mass) CHECK(dominates(mu, Signature{3, 1, 0}));
  CHECK(E3.at(Signature{3, 1, 0}) > 0);
  std::vector<Rational> x{Rational(1, 3), Rational(-2), Rational(5, 7)};
  auto H = h_nu(nu, q);
  Rational prod = H(x[0]) * H(x[1]) * H(x[2]);
  CHECK(abs(sgen_eval(E3, x, Flavor::q_interpolation, q) - prod) <= sgen_tail_bound(E3, nu, x, q));

  ExtremeOptions tight{Rational(1, 10000), 0};
  CHECK_THROWS_AS(extreme_projection(NuSeq::parse("0 1;1"), 2, q, tight), Error);
  CHECK_THROWS_AS(extreme_projection(nu, 0, q), Error);
}

TEST_CASE("q-Schur generating function of a primitive system") {
  // S(x; P) for P = delta at lam is s_lam(x) / s_lam(1, 1/q, ...)
  QParam q(Rational(1, 2));
  Signature lam{2, 1};
  auto P = primitive_system(lam, 2, q);
  std::vector<Rational> x{Rational(3), Rational(-1, 2)};
  CHECK(sgen_eval(P, x, Flavor::q_schur, q) == schur_branching_dp(lam, x) / principal_spec(lam, q, Direction::descending));
  CHECK(sgen_eval(P, principal_point(2, q, Direction::descending), Flavor::q_schur, q) == 1);
}

TEST_CASE("prelimit coefficients approach the limit") {
  QParam q(Rational(1, 2));
  auto nu = NuSeq::constant_tail({0, 2});
  Signature mu{1, 0};
  Rational lim = limit_coefficient(mu, nu, q);
  Rational d4 = abs(prelimit_coefficient(mu, nu.reversed_head(4), q) - lim);
  Rational d8 = abs(prelimit_coefficient(mu, nu.reversed_head(8), q) - lim);
  CHECK(d8 < d4);
  CHECK(prelimit_coefficient(Signature{3, 0}, Signature{2, 0}, q) == 0);
  CHECK_THROWS_AS(prelimit_coefficient(Signature{1, 0, 0}, Signature{2, 0}, q), Error);
}

TEST_CASE("truncated complex boundary function in one variable") {
  // one variable: G(t^j) = (1 - t)(1 - t/q)...(1 - t q^{1-j})
  QParam q(Rational(1, 2));
  auto nu = NuSeq::constant_tail({0, 1});
  auto spec = spec_nu(nu, q);
  std::complex<double> t(0.3, -0.2);
  std::complex<double> expect = 0.0;
  for (int j = 0; j <= spec.generating().degree(); ++j) {
    std::complex<double> term = to_double(spec.h(j));
    for (int i = 0; i < j; ++i) term *= 1.0 - t * std::pow(2.0, i);
    expect += term;
  }
  std::vector<std::complex<double>> x{t};
  auto r = q_k_nu_truncated(nu, 1, x, 10, q);
  CHECK(r.value.real() == doctest::Approx(expect.real()));
  CHECK(r.value.imag() == doctest::Approx(expect.imag()));
  CHECK(r.tail_estimate == 0.0);
  CHECK(q_k_nu_truncated(nu, 1, x, 0, q).tail_estimate > 0.0);
}
