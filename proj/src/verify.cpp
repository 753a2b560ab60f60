#include "qgt/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <random>

#include "qgt/gt.hpp"
#include "qgt/interp.hpp"
#include "qgt/measures.hpp"
#include "qgt/qtoeplitz.hpp"
#include "qgt/sampling.hpp"
#include "qgt/schur.hpp"

namespace qgt {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& g, int span = 9, int den = 7) {
  std::uniform_int_distribution<int> n(-span, span), d(1, den);
  return Rational(n(g)) / Rational(d(g));
}

Rational random_nonzero(Rng& g) {
  Rational r;
  do r = random_rational(g);
  while (r == 0);
  return r;
}

std::vector<Rational> random_point(Rng& g, int n, bool nonzero = false) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(nonzero ? random_nonzero(g) : random_rational(g));
  return x;
}

std::vector<Rational> distinct_point(Rng& g, int n, bool nonzero) {
  for (;;) {
    auto x = random_point(g, n, nonzero);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = x[i] != x[j];
    if (ok) return x;
  }
}

Signature random_signature(Rng& g, int N, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> c(N);
  for (int& v : c) v = d(g);
  std::sort(c.rbegin(), c.rend());
  return Signature(c);
}

// Random path ending at a random top signature, built by uniform choices going down.
Path random_path(Rng& g, int N, int lo, int hi) {
  std::vector<Signature> levels(N);
  levels[N - 1] = random_signature(g, N, lo, hi);
  for (int k = N - 1; k >= 1; --k) {
    auto below = enumerate_below(levels[k]);
    levels[k - 1] = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(g)];
  }
  return make_path(levels);
}

FactorialSequence<Rational> random_sequence(Rng& g) {
  auto cache = std::make_shared<std::map<long, Rational>>();
  auto gen = std::make_shared<Rng>(g());
  return [cache, gen](long i) {
    auto it = cache->find(i);
    if (it == cache->end()) it = cache->emplace(i, random_rational(*gen)).first;
    return it->second;
  };
}

const std::vector<std::vector<int>> kNuPrefixes = {{0}, {1}, {0, 1}, {0, 2}, {1, 3}, {0, 1, 3}};

// Accumulates cases; keeps the first failure as witness.
struct Check {
  CheckResult r;
  Check(std::string suite, std::string name) {
    r.suite = std::move(suite);
    r.name = std::move(name);
  }
  void expect(bool ok, const std::function<std::string()>& witness) {
    ++r.cases;
    if (!ok && r.passed) {
      r.passed = false;
      r.witness = witness();
    }
  }
  void note(const std::string& s) {
    if (r.passed && r.witness.empty()) r.witness = s;
  }
};

std::string pt_str(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

// ---- suites ----

std::vector<CheckResult> suite_branching(const VerifyConfig& cfg) {
  Rng g(cfg.seed);
  Check branch("branching", "branching rule of the DP evaluator");
  Check agree("branching", "bialternant equals branching DP");
  Check homog("branching", "homogeneity under shifts");
  Check sym("branching", "symmetry under permuting the point");
  for (int t = 0; t < 60; ++t) {
    int N = 2 + t % 4;
    auto lam = random_signature(g, N, -3, 3);
    auto x = random_point(g, N, true);
    Rational lhs = schur_branching_dp(lam, x), rhs = 0;
    std::vector<Rational> head(x.begin(), x.end() - 1);
    for (const auto& mu : enumerate_below(lam)) rhs += schur_branching_dp(mu, head) * rpow(x.back(), lam.size() - mu.size());
    branch.expect(lhs == rhs, [&] { return lam.str() + " at " + pt_str(x); });

    auto l = std::uniform_int_distribution<int>(-2, 2)(g);
    Rational prod = 1;
    for (const auto& v : x) prod *= v;
    homog.expect(schur_branching_dp(shift(lam, l), x) == rpow(prod, l) * lhs, [&] { return lam.str(); });

    auto y = x;
    std::shuffle(y.begin(), y.end(), g);
    sym.expect(schur_branching_dp(lam, y) == lhs, [&] { return lam.str() + " at " + pt_str(x); });
  }
  for (int t = 0; t < 100; ++t) {
    int N = 1 + t % 4;
    auto lam = random_signature(g, N, -4, 4);
    auto x = distinct_point(g, N, true);
    agree.expect(schur_bialternant(lam, x) == schur_branching_dp(lam, x), [&] { return lam.str() + " at " + pt_str(x); });
  }
  return {branch.r, agree.r, homog.r, sym.r};
}

std::vector<CheckResult> suite_dimq(const VerifyConfig& cfg) {
  Check c("dimq", "Dim_q equals the weighted path count (N<=4, coords in [-3,3])");
  Check d("dimq", "descending specialization equals q^{-(N-1)|lam|} times ascending");
  for (int N = 1; N <= 4; ++N)
    for (const auto& lam : signatures_in_range(N, -3, 3)) {
      Rational brute = 0;
      for (const auto& p : enumerate_paths_to(lam)) brute += path_weight(p, cfg.q);
      Rational dq = dim_q(lam, cfg.q);
      c.expect(dq == brute, [&] { return lam.str() + ": " + to_string(dq) + " vs " + to_string(brute); });
      Rational desc = schur_branching_dp(lam, principal_point(N, cfg.q, Direction::descending));
      d.expect(principal_spec(lam, cfg.q, Direction::descending) == desc &&
                   desc == q_pow(cfg.q, -static_cast<long>(N - 1) * lam.size()) * dq,
               [&] { return lam.str(); });
    }
  return {c.r, d.r};
}

std::vector<CheckResult> suite_volume(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 1);
  Check vol("volume", "V(T+) - V(T-) equals the summed sizes below the top");
  Check wt("volume", "path weight is q^(V(T+) - V(T-))");
  Check rt("volume", "tableaux determine the path");
  for (int t = 0; t < 200; ++t) {
    int N = 1 + t % 6;
    auto p = random_path(g, N, -3, 3);
    auto [tp, tm] = tableaux_of_path(p);
    long sum = 0;
    for (int k = 1; k < N; ++k) sum += p.at(k).size();
    long v = volume(tp, N) - volume(tm, N);
    vol.expect(v == sum && tp.semistandard() && tm.semistandard(), [&] { return p.at(N).str(); });
    wt.expect(path_weight(p, cfg.q) == q_pow(cfg.q, v), [&] { return p.at(N).str(); });
    rt.expect(path_from_tableaux(tp, tm, N).levels == p.levels, [&] { return p.at(N).str(); });
  }
  return {vol.r, wt.r, rt.r};
}

std::vector<CheckResult> suite_interpolation(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 2);
  const Rational& q = cfg.q.value();
  Check van("interpolation", "s*_mu vanishes at grid points of lam not containing mu (4x4 box, N<=4)");
  Check diag("interpolation", "diagonal value equals q^{n(mu')-2n(mu)} prod (q^h - 1)");
  Check stab("interpolation", "stability under appending a zero row and the point q^{-N}");
  Check one("interpolation", "one-variable case (x-1)(x-q)...(x-q^{k-1})");
  Check det("interpolation", "tableau sum equals the alternant ratio");
  Check zero("interpolation", "closed form at the zero point");
  Check top("interpolation", "top-degree part equals the ordinary Schur function");
  for (int N = 1; N <= 4; ++N) {
    auto box = partitions_in_box(N, 4);
    for (const auto& lam : box) {
      auto x = grid_point(lam, q);
      for (const auto& mu : box) {
        Rational v = interp_schur<Rational>(mu, x, q);
        if (!contained(mu, lam)) van.expect(v == 0, [&] { return mu.str() + " at " + lam.str(); });
        if (mu == lam) diag.expect(v == interp_diagonal(mu, q), [&] { return mu.str() + ": " + to_string(v); });
      }
    }
  }
  for (int t = 0; t < 30; ++t) {
    int N = 1 + t % 3;
    auto mu = random_signature(g, N, 0, 3);
    auto x = random_point(g, N);
    auto y = x;
    y.push_back(q_pow(cfg.q, -N));
    stab.expect(interp_schur<Rational>(mu.padded(N + 1), y, q) == interp_schur<Rational>(mu, x, q),
                [&] { return mu.str() + " at " + pt_str(x); });
    auto xd = distinct_point(g, N, false);
    det.expect(factorial_schur_det(mu, xd, interp_sequence(q, N)) == interp_schur<Rational>(mu, xd, q),
               [&] { return mu.str(); });
    zero.expect(interp_at_zero(mu, N, cfg.q) == interp_schur<Rational>(mu, std::vector<Rational>(N, Rational(0)), cfg.q.inverse()),
                [&] { return mu.str(); });
    int k = t % 5;
    Rational s = random_rational(g), prod = 1;
    for (int j = 0; j < k; ++j) prod *= s - q_pow(cfg.q, j);
    one.expect(interp_schur<Rational>(Signature{k}, std::vector<Rational>{s}, q) == prod, [&] { return std::to_string(k); });
    // s*(Tx)/T^{|mu|} -> s(x) as T grows
    const Rational T = rpow(Rational(10), 12);
    std::vector<Rational> tx;
    for (const auto& v : x) tx.push_back(T * v);
    Rational lead = interp_schur<Rational>(mu, tx, q) / rpow(T, mu.size()) - schur_branching_dp(mu, x);
    top.expect(abs(lead) < Rational(1, 1000000), [&] { return mu.str() + " residual " + to_string(lead); });
  }
  return {van.r, diag.r, stab.r, one.r, det.r, zero.r, top.r};
}

std::vector<CheckResult> suite_binomial(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 3);
  const Rational& q = cfg.q.value();
  Check s2i("binomial", "Schur in the interpolation basis reconstructs exactly (3x3 box, k<=3)");
  Check i2s("binomial", "interpolation polynomial in the Schur basis reconstructs exactly");
  Check gg("binomial", "the two basis maps agree on s*_mu(q^{k-1}x; 1/q)/s*_mu(0; 1/q) (2x2 box)");
  for (int k = 1; k <= 3; ++k)
    for (const auto& lam : partitions_in_box(k, 3)) {
      auto A = binomial_expand(lam, q);
      auto B = binomial_expand_schur(lam, q);
      for (int t = 0; t < 20; ++t) {
        auto x = random_point(g, k);
        Rational sa = 0, sb = 0;
        for (const auto& [mu, c] : A) sa += c * interp_schur<Rational>(mu, x, q);
        for (const auto& [mu, c] : B) sb += c * schur_branching_dp(mu, x);
        s2i.expect(sa == schur_branching_dp(lam, x), [&] { return lam.str() + " at " + pt_str(x); });
        i2s.expect(sb == interp_schur<Rational>(lam, x, q), [&] { return lam.str() + " at " + pt_str(x); });
      }
    }
  // G maps s_nu/s_nu(1,1/q,..) to s*_nu(.;q)/s*_nu(0;q); G' maps s*_mu(q^{k-1}x;1/q)/s*_mu(0;1/q) to s_mu/s_mu(1,1/q,..).
  const int k = 2;
  auto desc = [&](const Signature& s) { return principal_spec(s, cfg.q, Direction::descending); };
  std::vector<Rational> zero(k, Rational(0));
  for (const auto& mu : partitions_in_box(k, 2)) {
    auto B = binomial_expand_schur(mu, cfg.q.inverse());  // s*_mu(y; 1/q) in Schur polynomials of y
    Rational z = interp_at_zero(mu, k, cfg.q);
    std::map<Signature, Rational> lhs;
    for (const auto& [nu, b] : B)
      lhs[nu] = b * q_pow(cfg.q, static_cast<long>(k - 1) * nu.size()) * desc(nu) / z /
                interp_schur<Rational>(nu, zero, q);
    auto C = binomial_expand(mu, q);
    bool ok = true;
    for (const auto& nu : partitions_in_box(k, 2)) {
      Rational l = lhs.count(nu) ? lhs[nu] : Rational(0);
      Rational r = C.count(nu) ? C[nu] / desc(mu) : Rational(0);
      if (l != r) ok = false;
    }
    gg.expect(ok, [&] { return mu.str(); });
  }
  return {s2i.r, i2s.r, gg.r};
}

std::vector<CheckResult> suite_cauchy(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 4);
  Check c("cauchy", "dual Cauchy identity for factorial Schur functions (N,m<=3)");
  for (int N = 1; N <= 3; ++N)
    for (int m = 1; m <= 3; ++m)
      for (int t = 0; t < 3; ++t) {
        auto x = random_point(g, N), y = random_point(g, m);
        auto a = random_sequence(g);
        auto r = dual_cauchy(x, y, a);
        c.expect(r.product == r.sum, [&] { return "N=" + std::to_string(N) + " m=" + std::to_string(m); });
      }
  return {c.r};
}

std::vector<CheckResult> suite_determinantal(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 5);
  Check c("determinantal", "det[e_{lam'_i-i+j}(y | tau^{j-1} a)] equals the tableau sum");
  Check e("determinantal", "factorial elementary functions at the boundary cases");
  for (int t = 0; t < 40; ++t) {
    int m = 1 + t % 3;
    auto lam = random_signature(g, m, 0, 3);
    auto y = random_point(g, m);
    auto a = random_sequence(g);
    int size = (lam[0] > 0 ? lam[0] : 1) + t % 2;
    c.expect(factorial_schur_by_elementary(lam, y, a, size) == factorial_schur<Rational>(lam, y, a),
             [&] { return lam.str() + " size " + std::to_string(size); });
    long j = t % 3;
    e.expect(factorial_elementary(0, y, a, j) == 1 && factorial_elementary(m + 1, y, a, j) == 0 &&
                 (m != 1 || factorial_elementary(1, y, a, j) == y[0] + a(1 + j)),
             [&] { return std::to_string(m); });
  }
  return {c.r, e.r};
}

std::vector<CheckResult> suite_coherence(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 6);
  Check st("coherence", "cotransition rows sum to 1 (N<=5, coords in [-3,3])");
  Check sh("coherence", "cotransition is shift invariant");
  Check pr("coherence", "primitive systems are coherent");
  Check ex("coherence", "extreme projections at consecutive levels: TV <= 2 eps");
  for (int N = 2; N <= 5; ++N)
    for (const auto& lam : signatures_in_range(N, -3, 3)) {
      Rational s = 0;
      for (const auto& [mu, p] : cotransition_row(lam, cfg.q)) s += p;
      st.expect(s == 1, [&] { return lam.str() + " sums to " + to_string(s); });
    }
  for (int t = 0; t < 30; ++t) {
    int N = 2 + t % 3;
    auto lam = random_signature(g, N, -3, 3);
    auto below = enumerate_below(lam);
    auto mu = below[g() % below.size()];
    int l = static_cast<int>(g() % 7) - 3;
    sh.expect(cotransition(lam, mu, cfg.q) == cotransition(shift(lam, l), shift(mu, l), cfg.q), [&] { return lam.str(); });
    auto top = primitive_system(lam, N, cfg.q), next = primitive_system(lam, N - 1, cfg.q);
    pr.expect(coherence_check(top, next, cfg.q) == 0, [&] { return lam.str(); });
  }
  const Rational eps(1, 10000);
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    std::vector<FiniteMeasure> E;
    for (int k = 1; k <= 3; ++k) E.push_back(extreme_projection(nu, k, cfg.q, {eps}));
    for (int k = 1; k < 3; ++k) {
      Rational tv = coherence_check(E[k], E[k - 1], cfg.q);
      ex.expect(tv <= 2 * eps, [&] { return nu.str() + " k=" + std::to_string(k) + " TV " + to_string(tv); });
    }
  }
  return {st.r, sh.r, pr.r, ex.r};
}

std::vector<CheckResult> suite_bounds(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 7);
  Check p51("bounds", "P_1^lam(lam_N) >= prod_{i>=1}(1-q^i) (via the enclosure)");
  Check l57("bounds", "E^nu_1(nu_1) >= prod_{i>=1}(1-q^i) (via the enclosure)");
  long n = 1;
  while (q_pow(cfg.q, n + 1) / (1 - cfg.q.value()) >= Rational(1, 2)) ++n;
  auto enc = euler_product_enclosure(cfg.q, n + 20);
  for (int t = 0; t < 40; ++t) {
    int N = 1 + t % 5;
    auto lam = random_signature(g, N, -3, 3);
    Rational v = primitive_system(lam, 1, cfg.q).at(Signature{lam[N - 1]});
    Rational finite = q_factor_product(cfg.q, N - 1);
    p51.expect(v >= finite && finite >= enc.lower,
               [&] { return lam.str() + ": " + to_string(v); });
  }
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    Rational v = extreme_projection(nu, 1, cfg.q, {Rational(1, 10000)}).at(Signature{nu(1)});
    l57.expect(v >= enc.lower, [&] { return nu.str() + ": " + to_string(v); });
  }
  return {p51.r, l57.r};
}

std::vector<CheckResult> suite_support(const VerifyConfig& cfg) {
  Check nn("support", "extreme masses are nonnegative and sum with the tail to 1");
  Check sp("support", "mass vanishes unless mu >= (nu_k,...,nu_1); positive at that point");
  Check mono("support", "E^nu_k(nu reversed) decreases strictly as nu grows");
  Check shf("support", "shifting nu shifts the extreme projection");
  const Rational eps(1, 10000);
  std::map<std::pair<int, int>, Rational> at_head;  // (prefix index, k) -> E at reversed head
  for (std::size_t i = 0; i < kNuPrefixes.size(); ++i) {
    auto nu = NuSeq::constant_tail(kNuPrefixes[i]);
    for (int k = 1; k <= 3; ++k) {
      ExtremeOptions opt{eps};
      opt.full_box = true;
      FiniteMeasure E;
      bool ok = true;
      std::string why;
      try {
        E = extreme_projection(nu, k, cfg.q, opt);
      } catch (const Error& e) {
        ok = false;
        why = e.what();
      }
      nn.expect(ok, [&] { return nu.str() + ": " + why; });
      if (!ok) continue;
      auto head = nu.reversed_head(k);
      bool supp = true;
      for (const auto& [mu, v] : E.mass)
        if (v != 0 && !dominates(mu, head)) supp = false;
      sp.expect(supp && E.at(head) > 0, [&] { return nu.str() + " k=" + std::to_string(k); });
      at_head[{static_cast<int>(i), k}] = E.at(head);
      auto shifted = extreme_projection(nu.shifted(2), k, cfg.q, {eps});
      bool same = shifted.tail == E.tail;
      for (const auto& [mu, v] : E.mass) same = same && shifted.at(shift(mu, 2)) == v;
      shf.expect(same, [&] { return nu.str() + " k=" + std::to_string(k); });
    }
  }
  for (std::size_t i = 0; i < kNuPrefixes.size(); ++i)
    for (std::size_t j = 0; j < kNuPrefixes.size(); ++j) {
      if (i == j) continue;
      auto a = NuSeq::constant_tail(kNuPrefixes[i]), b = NuSeq::constant_tail(kNuPrefixes[j]);
      for (int k = 1; k <= 3; ++k) {
        auto ha = a.reversed_head(k), hb = b.reversed_head(k);
        if (ha == hb || !dominates(hb, ha)) continue;  // b > a on the first k entries
        if (!at_head.count({static_cast<int>(i), k}) || !at_head.count({static_cast<int>(j), k})) continue;
        // compare at a's reversed head
        Rational ea = at_head[{static_cast<int>(i), k}];
        Rational eb = extreme_projection(b, k, cfg.q, {eps}).at(ha);
        mono.expect(ea > eb, [&] { return a.str() + " vs " + b.str() + " k=" + std::to_string(k); });
      }
    }
  return {nn.r, sp.r, mono.r, shf.r};
}

std::vector<CheckResult> suite_multiplicativity(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 8);
  Check mul("multiplicativity", "S*(E^nu_k) equals prod H^nu(x_i) within the declared-tail bound");
  Check cau("multiplicativity", "sum Spec(s_mu) s_mu equals prod H^nu(x_i)");
  Check nwt("multiplicativity", "Newton identities link p_k and h_k of the specialization");
  const Rational eps(1, 10000);
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    auto H = h_nu(nu, cfg.q);
    auto spec = spec_nu(nu, cfg.q);
    for (int k = 1; k <= 3; ++k) {
      auto E = extreme_projection(nu, k, cfg.q, {eps});
      for (int t = 0; t < 20; ++t) {
        auto x = random_point(g, k);
        Rational prod = 1;
        for (const auto& v : x) prod *= H(v);
        Rational s = sgen_eval(E, x, Flavor::q_interpolation, cfg.q);
        Rational bound = sgen_tail_bound(E, nu, x, cfg.q);
        mul.expect(abs(s - prod) <= bound, [&] { return nu.str() + " at " + pt_str(x); });
        Rational cs = 0;
        for (const auto& mu : partitions_in_box(k, H.degree())) cs += spec.schur(mu) * schur_branching_dp(mu, x);
        cau.expect(cs == prod, [&] { return nu.str() + " at " + pt_str(x); });
      }
    }
    for (int m = 1; m <= 6; ++m) {
      Rational s = 0;
      for (int i = 1; i <= m; ++i) s += spec.p(i) * spec.h(m - i);
      nwt.expect(s == m * spec.h(m), [&] { return nu.str() + " m=" + std::to_string(m); });
    }
  }
  return {mul.r, cau.r, nwt.r};
}

std::vector<CheckResult> suite_toeplitz(const VerifyConfig& cfg) {
  Rng g(cfg.seed + 9);
  Check grid("toeplitz", "c_lam by grid solve equals q^{-(N-1)|lam|} det[d[lam_{N-i+1}+i, j]]");
  Check rec("toeplitz", "recurrence holds at every generated cell");
  Check norm("toeplitz", "c_l = E^nu_1(l) q^{l(l-1)/2} and sum c_l q^{-l(l-1)/2} = 1");
  Check bridge("toeplitz", "d[i,j] prod y equals e_{m-i+j}(y | tau^{j-1} a-hat) for rational roots");
  Check newton("toeplitz", "Newton expansion reproduces H");
  for (int t = 0; t < 30; ++t) {
    int L = 1 + static_cast<int>(g() % 5);
    std::vector<Rational> c(L);
    for (auto& v : c) v = Rational(static_cast<long>(g() % 6));
    if (c[0] == 0) c[0] = 1;
    Rational z = 0;
    for (int l = 0; l < L; ++l) z += c[l] * q_pow(cfg.q, -static_cast<long>(l) * (l - 1) / 2);
    for (auto& v : c) v /= z;
    NewtonExpansion ne{c};
    // H as a polynomial
    Polynomial H(L, Rational(0));
    for (int l = 0; l < L; ++l) {
      Polynomial basis{Rational(1)};
      for (int i = 0; i < l; ++i) {
        Polynomial next(basis.size() + 1, Rational(0));
        for (std::size_t d = 0; d < basis.size(); ++d) {
          next[d] += q_pow(cfg.q, -i) * basis[d];
          next[d + 1] -= basis[d];
        }
        basis = next;
      }
      for (std::size_t d = 0; d < basis.size(); ++d) H[d] += c[l] * basis[d];
    }
    auto back = newton_expand_1d(H, cfg.q);
    newton.expect(back.c == c, [&] { return "length " + std::to_string(L); });
    auto d = from_first_column(ne, 8, 3, cfg.q);
    rec.expect(d.satisfies_recurrence(), [&] { return "length " + std::to_string(L); });
    for (int N = 1; N <= 3; ++N) {
      auto table = c_lambda_table(H, N, cfg.q);
      for (const auto& lam : partitions_in_box(N, 4)) {
        Rational lhs = table.count(lam) ? table[lam] : Rational(0);
        Rational rhs = c_lambda_from_minor(d, lam);
        grid.expect(lhs == rhs, [&] { return lam.str() + ": " + to_string(lhs) + " vs " + to_string(rhs); });
      }
    }
  }
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    auto c = newton_expand_1d(h_nu(nu, cfg.q).poly, cfg.q).c;
    auto E = extreme_projection(nu, 1, cfg.q, {Rational(1, 10000)});
    Rational s = 0;
    bool ok = E.tail == 0;
    for (std::size_t l = 0; l < c.size(); ++l) {
      long e = static_cast<long>(l) * (static_cast<long>(l) - 1) / 2;
      ok = ok && c[l] == E.at(Signature{static_cast<int>(l)}) * q_pow(cfg.q, e);
      s += c[l] * q_pow(cfg.q, -e);
    }
    norm.expect(ok && s == 1, [&] { return nu.str(); });
  }
  for (int t = 0; t < 6; ++t) {
    int m = 1 + t % 3;
    auto y = random_point(g, m, true);
    Polynomial H{Rational(1)};
    for (const auto& r : y) {
      Polynomial next(H.size() + 1, Rational(0));
      for (std::size_t d = 0; d < H.size(); ++d) {
        next[d] += H[d];
        next[d + 1] -= H[d] / r;
      }
      H = next;
    }
    auto d = from_first_column(newton_expand_1d(H, cfg.q), 6, 4, cfg.q);
    Rational py = 1;
    for (const auto& v : y) py *= v;
    auto ah = hat_sequence(cfg.q);
    bool ok = true;
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 4; ++j) ok = ok && d(i, j) * py == factorial_elementary(m - i + j, y, ah, j - 1);
    bridge.expect(ok, [&] { return pt_str(y); });
  }
  return {grid.r, rec.r, norm.r, bridge.r, newton.r};
}

std::vector<CheckResult> suite_minors(const VerifyConfig& cfg) {
  Check col("minors", "initial column minors of d^nu are >= 0 (rows from 1..7, size <= 4)");
  Check row("minors", "initial row minors of d^nu are >= 0 (columns from 1..7, size <= 4)");
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    auto d = d_nu(nu, 7, 7, cfg.q);
    for (int mask = 1; mask < (1 << 7); ++mask) {
      std::vector<int> idx;
      for (int b = 0; b < 7; ++b)
        if (mask & (1 << b)) idx.push_back(b + 1);
      if (idx.size() > 4) continue;
      Rational a = initial_minor(d, idx), b = initial_row_minor(d, idx);
      col.expect(a >= 0, [&] { return nu.str() + " rows mask " + std::to_string(mask) + ": " + to_string(a); });
      row.expect(b >= 0, [&] { return nu.str() + " cols mask " + std::to_string(mask) + ": " + to_string(b); });
    }
  }
  return {col.r, row.r};
}

std::vector<CheckResult> suite_sampling(const VerifyConfig& cfg) {
  Check marg("sampling", "empirical level marginals within 4 sigma of the pushdown chain");
  Check det("sampling", "identical seeds reproduce identical runs");
  const int N = 3, count = 2000;
  auto nu = NuSeq::constant_tail({0, 1, 3});
  ExtremeOptions opt{Rational(1, 10000)};
  auto run = sample_tiling(nu, N, cfg.q, opt, count, cfg.seed);
  auto again = sample_tiling(nu, N, cfg.q, opt, 50, cfg.seed);
  bool same = true;
  for (int i = 0; i < 50; ++i) same = same && again.run.paths[i].levels == run.run.paths[i].levels;
  det.expect(same, [] { return std::string("paths differ"); });
  FiniteMeasure exact = extreme_projection(nu, N, cfg.q, opt);
  double worst = 0;
  for (int k = N; k >= 1; --k) {
    std::map<Signature, int> hits;
    for (const auto& p : run.run.paths) ++hits[p.at(k)];
    for (const auto& [mu, pr] : exact.mass) {
      double p = to_double(pr), f = static_cast<double>(hits[mu]) / count;
      double sigma = std::sqrt(p * (1 - p) / count);
      double z = sigma > 0 ? std::abs(f - p) / sigma : (f == p ? 0 : 1e9);
      worst = std::max(worst, z);
      marg.expect(z <= 4, [&] { return "level " + std::to_string(k) + " " + mu.str() + " z=" + std::to_string(z); });
    }
    if (k > 1) exact = pushdown(exact, cfg.q);
  }
  if (worst > 3) marg.note("flagged: largest deviation " + std::to_string(worst) + " sigma");
  return {marg.r, det.r};
}

std::vector<CheckResult> suite_convergence(const VerifyConfig& cfg) {
  Check c("convergence", "|prelimit - limit| strictly decreases over N=4,6,8 where nonzero (2x2 box)");
  int exact_agreements = 0;
  for (const auto& pre : std::vector<std::vector<int>>{{0, 1}, {0, 2}}) {
    auto nu = NuSeq::constant_tail(pre);
    for (const auto& mu : partitions_in_box(2, 2)) {
      Rational lim = limit_coefficient(mu, nu, cfg.q);
      std::vector<Rational> diff;
      for (int N : {4, 6, 8}) diff.push_back(abs(prelimit_coefficient(mu, nu.reversed_head(N), cfg.q) - lim));
      bool ok = true;
      for (std::size_t i = 1; i < diff.size(); ++i) ok = ok && (diff[i - 1] == 0 ? diff[i] == 0 : diff[i] < diff[i - 1]);
      if (diff[0] == 0 && ok) ++exact_agreements;
      c.expect(ok, [&] { return nu.str() + " " + mu.str() + ": " + to_string(diff[0]) + ", " + to_string(diff[1]) + ", " + to_string(diff[2]); });
    }
  }
  c.note(std::to_string(exact_agreements) + " cases agree exactly at every N");
  return {c.r};
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"branching", suite_branching},   {"dimq", suite_dimq},
      {"volume", suite_volume},         {"interpolation", suite_interpolation},
      {"binomial", suite_binomial},     {"cauchy", suite_cauchy},
      {"determinantal", suite_determinantal}, {"coherence", suite_coherence},
      {"bounds", suite_bounds},         {"support", suite_support},
      {"multiplicativity", suite_multiplicativity}, {"toeplitz", suite_toeplitz},
      {"minors", suite_minors},         {"sampling", suite_sampling},
      {"convergence", suite_convergence},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> n;
  for (const auto& [name, fn] : registry()) n.push_back(name);
  return n;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      try {
        return fn(cfg);
      } catch (const std::exception& e) {
        CheckResult r{name, "suite raised an error", false, 0, e.what()};
        return {r};
      }
    }
  throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
}

int run_verify(const std::string& suite, const VerifyConfig& cfg, std::ostream& out) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  for (const auto& n : names) {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == n;
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown suite " + n);
  }
  const auto start = std::chrono::steady_clock::now();
  bool all_ok = true;
  out << "q = " << to_string(cfg.q.value()) << ", seed = " << cfg.seed << "\n";
  for (const auto& n : names) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (cfg.budget_ms > 0 && elapsed > cfg.budget_ms) {
      out << std::left << std::setw(6) << "SKIP" << std::setw(18) << n << "time budget exhausted\n";
      all_ok = false;
      continue;
    }
    for (const auto& r : run_suite(n, cfg)) {
      all_ok = all_ok && r.passed;
      out << std::left << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(18) << r.suite << r.name << " ["
          << r.cases << " cases]";
      if (!r.witness.empty()) out << (r.passed ? "  note: " : "  witness: ") << r.witness;
      out << "\n";
    }
  }
  out << (all_ok ? "all checks passed" : "some checks failed") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace qgt
