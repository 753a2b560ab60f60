// One PASS/FAIL line per acceptance criterion. Without --criterion every criterion runs.

#include <sys/wait.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qgt/interp.hpp"
#include "qgt/measures.hpp"
#include "qgt/qtoeplitz.hpp"
#include "qgt/sampling.hpp"
#include "qgt/schur.hpp"

using namespace qgt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  long cases = 0, failures = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& witness) {
    ++cases;
    if (!ok && failures++ == 0) first = witness();
  }
  Outcome outcome(const std::string& what) const {
    std::ostringstream s;
    s << what << ": " << cases << " cases";
    if (failures) s << ", " << failures << " failed; first: " << first;
    return {failures == 0, s.str()};
  }
};

const std::vector<std::vector<int>> kNuPrefixes = {{0}, {1}, {0, 1}, {0, 2}, {1, 3}, {0, 1, 3}};
const Rational kEps(1, 10000);

std::string pt(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

Outcome dimq_matches_path_enumeration() {
  QParam q(Rational(1, 2));
  Tally t;
  for (int N = 1; N <= 4; ++N)
    for (const auto& lam : signatures_in_range(N, -3, 3)) {
      Rational a = dim_q(lam, q), b = oracle::weighted_path_count(lam.coords(), q);
      t.check(a == b, [&] { return lam.str() + " " + to_string(a) + " vs " + to_string(b); });
    }
  return t.outcome("dim_q vs explicit path enumeration, N<=4, coords in [-3,3]");
}

Outcome interpolation_characterization() {
  Tally t;
  for (auto qv : {Rational(1, 2), Rational(2, 5), Rational(9, 10)})
    for (int N = 1; N <= 4; ++N) {
      auto box = partitions_in_box(N, 4);
      for (const auto& lam : box) {
        auto x = grid_point(lam, qv);
        for (const auto& mu : box) {
          Rational v = interp_schur<Rational>(mu, x, qv);
          if (!contained(mu, lam)) t.check(v == 0, [&] { return mu.str() + " at " + lam.str(); });
          if (mu == lam) {
            auto d = diagram_stats(mu);
            Rational expect = rpow(qv, d.n_prime - 2 * d.n);
            for (const auto& row : d.hooks)
              for (int h : row) expect *= rpow(qv, h) - 1;
            t.check(v == expect, [&] { return mu.str() + " q=" + to_string(qv); });
          }
        }
      }
    }
  return t.outcome("vanishing off containment and diagonal values, 4x4 box, N<=4, q in {1/2,2/5,9/10}");
}

Outcome binomial_formulas() {
  std::mt19937_64 g(2024);
  const Rational q(1, 2);
  Tally t;
  for (int k = 1; k <= 3; ++k)
    for (const auto& lam : partitions_in_box(k, 3)) {
      auto A = binomial_expand(lam, q);
      auto B = binomial_expand_schur(lam, q);
      for (int i = 0; i < 20; ++i) {
        auto x = oracle::random_point(g, k);
        Rational sa = 0, sb = 0;
        for (const auto& [mu, c] : A) sa += c * interp_schur<Rational>(mu, x, q);
        for (const auto& [mu, c] : B) sb += c * oracle::schur(mu, x);
        t.check(sa == oracle::schur(lam, x), [&] { return "Schur side " + lam.str() + " at " + pt(x); });
        t.check(sb == interp_schur<Rational>(lam, x, q), [&] { return "interpolation side " + lam.str() + " at " + pt(x); });
      }
    }
  return t.outcome("both expansions reconstruct exactly, 3x3 box, k<=3, 20 points each");
}

Outcome extreme_battery() {
  QParam q(Rational(1, 2));
  std::mt19937_64 g(4);
  Tally nonneg, support, positive, mono, bound, coherence, mult;
  auto enc = euler_product_enclosure(q, 40);
  std::map<std::pair<std::size_t, int>, FiniteMeasure> E;
  for (std::size_t i = 0; i < kNuPrefixes.size(); ++i) {
    auto nu = NuSeq::constant_tail(kNuPrefixes[i]);
    auto H = h_nu(nu, q);
    for (int k = 1; k <= 3; ++k) {
      ExtremeOptions full{kEps};
      full.full_box = true;
      FiniteMeasure m;
      try {
        m = extreme_projection(nu, k, q, full);
      } catch (const Error& e) {
        nonneg.check(false, [&] { return nu.str() + ": " + e.what(); });
        continue;
      }
      for (const auto& [mu, v] : m.mass) {
        nonneg.check(v >= 0, [&] { return nu.str() + " " + mu.str(); });
        support.check(v == 0 || dominates(mu, nu.reversed_head(k)), [&] { return nu.str() + " " + mu.str(); });
      }
      positive.check(m.at(nu.reversed_head(k)) > 0, [&] { return nu.str() + " k=" + std::to_string(k); });
      E[{i, k}] = m;
      for (int p = 0; p < 10; ++p) {
        auto x = oracle::random_point(g, k);
        Rational prod = 1;
        for (const auto& v : x) prod *= H(v);
        Rational gap = abs(sgen_eval(m, x, Flavor::q_interpolation, q) - prod);
        Rational bound = sgen_tail_bound(m, nu, x, q);
        mult.check(gap <= bound, [&] { return nu.str() + " at " + pt(x) + " gap " + to_string(gap); });
      }
    }
    bound.check(E[{i, 1}].at(Signature{nu(1)}) >= enc.lower, [&] { return nu.str(); });
    for (int k = 1; k < 3; ++k) {
      Rational tv = coherence_check(E[{i, k + 1}], E[{i, k}], q);
      coherence.check(tv <= 2 * kEps, [&] { return nu.str() + " TV " + to_string(tv); });
    }
  }
  for (std::size_t i = 0; i < kNuPrefixes.size(); ++i)
    for (std::size_t j = 0; j < kNuPrefixes.size(); ++j)
      for (int k = 1; k <= 3; ++k) {
        auto a = NuSeq::constant_tail(kNuPrefixes[i]), b = NuSeq::constant_tail(kNuPrefixes[j]);
        auto ha = a.reversed_head(k), hb = b.reversed_head(k);
        if (ha == hb || !dominates(hb, ha)) continue;
        Rational ea = E[{i, k}].at(ha), eb = E[{j, k}].at(ha);
        mono.check(ea > eb, [&] { return a.str() + " vs " + b.str() + " k=" + std::to_string(k); });
      }
  std::vector<std::pair<std::string, Outcome>> parts = {
      {"nonneg", nonneg.outcome("nonnegative masses")},
      {"support", support.outcome("support")},
      {"positive", positive.outcome("positive at reversed nu")},
      {"monotone", mono.outcome("monotonicity")},
      {"bound", bound.outcome("level-one bound")},
      {"coherence", coherence.outcome("coherence TV <= 2 eps")},
      {"multiplicative", mult.outcome("S* vs product of H within tail bound")},
  };
  Outcome out;
  for (const auto& [name, o] : parts) {
    out.pass = out.pass && o.pass;
    out.detail += (out.detail.empty() ? "" : "; ") + o.detail;
  }
  return out;
}

// Random normalized nonnegative Newton coefficients and the matching H.
struct RandomH {
  NewtonExpansion ne;
  Polynomial H;
};

RandomH random_H(std::mt19937_64& g, const QParam& q) {
  int L = 1 + static_cast<int>(g() % 5);
  std::vector<Rational> c(L);
  for (auto& v : c) v = Rational(static_cast<long>(g() % 6));
  if (c[0] == 0) c[0] = 1;
  Rational z = 0;
  for (int l = 0; l < L; ++l) z += c[l] * q_pow(q, -static_cast<long>(l) * (l - 1) / 2);
  for (auto& v : c) v /= z;
  Polynomial H(L, Rational(0)), basis{Rational(1)};
  for (int l = 0; l < L; ++l) {
    for (std::size_t d = 0; d < basis.size(); ++d) H[d] += c[l] * basis[d];
    Polynomial next(basis.size() + 1, Rational(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d] += q_pow(q, -l) * basis[d];
      next[d + 1] -= basis[d];
    }
    basis = next;
  }
  return {NewtonExpansion{c}, H};
}

// sign = +1 reproduces the prefactor q^{(N-1)|lam|} as literally stated; -1 is the corrected one.
Outcome toeplitz_expansion(int sign) {
  QParam q(Rational(1, 2));
  std::mt19937_64 g(71);
  Tally t;
  for (int trial = 0; trial < 30; ++trial) {
    auto [ne, H] = random_H(g, q);
    auto d = from_first_column(ne, 8, 3, q);
    for (int N = 1; N <= 3; ++N) {
      auto table = c_lambda_table(H, N, q);
      for (const auto& lam : partitions_in_box(N, 4)) {
        Rational lhs = table.count(lam) ? table[lam] : Rational(0);
        Rational rhs = q_pow(q, sign * static_cast<long>(N - 1) * lam.size()) * lambda_minor(d, lam);
        t.check(lhs == rhs, [&] {
          return "trial " + std::to_string(trial) + " lam " + lam.str() + ": c = " + to_string(lhs) +
                 ", rescaled minor = " + to_string(rhs);
        });
      }
    }
  }
  return t.outcome(sign > 0 ? "c_lam vs q^{+(N-1)|lam|} minor" : "c_lam vs q^{-(N-1)|lam|} minor");
}

Outcome toeplitz_minors() {
  QParam q(Rational(1, 2));
  Tally t;
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    auto d = d_nu(nu, 7, 4, q);
    for (int mask = 1; mask < (1 << 7); ++mask) {
      std::vector<int> rows;
      for (int b = 0; b < 7; ++b)
        if (mask & (1 << b)) rows.push_back(b + 1);
      if (rows.size() > 4) continue;
      Rational v = initial_minor(d, rows);
      t.check(v >= 0, [&] { return nu.str() + " mask " + std::to_string(mask) + " = " + to_string(v); });
    }
  }
  return t.outcome("initial minors of d^nu, row subsets of {1..7} of size <= 4");
}

Outcome normalization() {
  QParam q(Rational(1, 2));
  Tally t;
  for (const auto& pre : kNuPrefixes) {
    auto nu = NuSeq::constant_tail(pre);
    auto c = newton_expand_1d(h_nu(nu, q).poly, q).c;
    auto E = extreme_projection(nu, 1, q, {kEps});
    Rational s = 0;
    for (std::size_t l = 0; l < c.size(); ++l) {
      long e = static_cast<long>(l) * (static_cast<long>(l) - 1) / 2;
      t.check(c[l] == E.at(Signature{static_cast<int>(l)}) * q_pow(q, e), [&] { return nu.str() + " l=" + std::to_string(l); });
      s += c[l] * q_pow(q, -e);
    }
    t.check(s == 1 && E.tail == 0, [&] { return nu.str() + " sum " + to_string(s); });
  }
  return t.outcome("c_l = E_1(l) q^{l(l-1)/2} and sum c_l q^{-l(l-1)/2} = 1");
}

Outcome coefficient_convergence() {
  QParam q(Rational(1, 2));
  Tally t;
  int strict = 0, zero = 0;
  for (const auto& pre : std::vector<std::vector<int>>{{0, 1}, {0, 2}}) {
    auto nu = NuSeq::constant_tail(pre);
    for (const auto& mu : partitions_in_box(2, 2)) {
      Rational lim = limit_coefficient(mu, nu, q);
      std::vector<Rational> d;
      for (int N : {4, 6, 8}) d.push_back(abs(prelimit_coefficient(mu, nu.reversed_head(N), q) - lim));
      bool all_zero = d[0] == 0 && d[1] == 0 && d[2] == 0;
      bool decreasing = d[1] < d[0] && d[2] < d[1];
      if (all_zero) ++zero;
      if (decreasing) ++strict;
      t.check(all_zero || decreasing, [&] {
        return nu.str() + " " + mu.str() + ": " + to_string(d[0]) + ", " + to_string(d[1]) + ", " + to_string(d[2]);
      });
    }
  }
  auto o = t.outcome("|prelimit - limit| over N = 4, 6, 8");
  o.detail += " (" + std::to_string(strict) + " strictly decreasing, " + std::to_string(zero) + " exactly zero at every N)";
  return o;
}

Outcome sampling_statistics() {
  QParam q(Rational(1, 2));
  auto nu = NuSeq::constant_tail({0, 1});
  const int count = 10000;
  const std::uint64_t seed = 20240601;
  // A tight epsilon exhausts the finite support, so no draw can land in a declared tail.
  const ExtremeOptions opt{Rational(1, 1000000000000LL)};
  auto run = sample_tiling(nu, 6, q, opt, count, seed);
  int zeros = 0;
  for (const auto& p : run.run.paths) zeros += p.at(1)[0] == 0;
  double sigma = std::sqrt(count * 0.25);
  double z = std::abs(zeros - count / 2.0) / sigma;
  bool marginal_ok = z <= 4;
  std::vector<int> hits;
  for (int N : {6, 10, 14}) {
    auto r = N == 6 ? run : sample_tiling(nu, N, q, opt, count, seed + N);
    int h = 0;
    for (const auto& p : r.run.paths) h += p.at(N)[N - 1] == nu(1);
    hits.push_back(h);
  }
  bool increasing = hits[0] < hits[1] && hits[1] < hits[2];
  std::ostringstream s;
  s << "level-1 zeros " << zeros << "/" << count << " (z = " << z << "); last coordinate = nu_1 at N=6,10,14: "
    << hits[0] << ", " << hits[1] << ", " << hits[2];
  return {marginal_ok && increasing, s.str()};
}

Outcome full_verify(const std::string& qgt) {
  if (qgt.empty()) return {false, "no qgt binary given (--qgt)"};
  auto start = std::chrono::steady_clock::now();
  int status = std::system((qgt + " verify --suite all --q 2/5 --seed 7 > /dev/null 2>&1").c_str());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream s;
  s << "verify --suite all exit " << code << " in " << secs << " s";
  return {code == 0 && secs < 600, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::string which = "all", qgt;
  app.add_option("--criterion", which, "1..10, 5b, or all");
  app.add_option("--qgt", qgt, "Path to the qgt binary for criterion 10");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1", dimq_matches_path_enumeration},
      {"2", interpolation_characterization},
      {"3", binomial_formulas},
      {"4", extreme_battery},
      {"5", [] { return toeplitz_expansion(+1); }},
      {"5b", [] { return toeplitz_expansion(-1); }},
      {"6", toeplitz_minors},
      {"7", normalization},
      {"8", coefficient_convergence},
      {"9", sampling_statistics},
      {"10", [&] { return full_verify(qgt); }},
  };
  bool all_ok = true, found = false;
  for (const auto& [id, fn] : criteria) {
    if (which != "all" && which != id) continue;
    found = true;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("raised: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " [" << secs << " s] " << o.detail
              << std::endl;
  }
  if (!found) {
    std::cerr << "unknown criterion " << which << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
