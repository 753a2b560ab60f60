#include "qgt/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgt/interp.hpp"
#include "qgt/linalg.hpp"
#include "qgt/schur.hpp"

namespace qgt {

// ---- FiniteMeasure ----

FiniteMeasure FiniteMeasure::delta(const Signature& lam) {
  FiniteMeasure m;
  m.level = lam.level();
  m.mass[lam] = 1;
  return m;
}

Rational FiniteMeasure::at(const Signature& s) const {
  auto it = mass.find(s);
  return it == mass.end() ? Rational(0) : it->second;
}

Rational FiniteMeasure::total() const {
  Rational t = tail;
  for (const auto& [s, v] : mass) t += v;
  return t;
}

void FiniteMeasure::validate() const {
  for (const auto& [s, v] : mass) {
    if (s.level() != level) throw Error(ErrorKind::LevelMismatch, s.str() + " in a level " + std::to_string(level) + " measure");
    if (v < 0) throw Error(ErrorKind::NegativeMass, s.str() + " has mass " + to_string(v));
  }
  if (tail < 0) throw Error(ErrorKind::NegativeMass, "negative declared tail " + to_string(tail));
  if (total() != 1) throw Error(ErrorKind::InvalidArgument, "masses plus tail sum to " + to_string(total()));
}

// ---- NuSeq ----

NuSeq::NuSeq(std::vector<int> prefix, int tail) : prefix_(std::move(prefix)), tail_(tail) {
  for (std::size_t i = 1; i < prefix_.size(); ++i)
    if (prefix_[i] < prefix_[i - 1]) throw Error(ErrorKind::InvalidArgument, "nu must be nondecreasing: " + str());
  if (!prefix_.empty() && tail_ < prefix_.back())
    throw Error(ErrorKind::InvalidArgument, "nu tail below the last prefix entry: " + str());
}

NuSeq NuSeq::constant_tail(std::vector<int> prefix) {
  if (prefix.empty()) throw Error(ErrorKind::InvalidArgument, "empty nu prefix");
  int t = prefix.back();
  return NuSeq(std::move(prefix), t);
}

NuSeq NuSeq::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  auto semi = s.find(';');
  auto read_ints = [](const std::string& part) {
    std::istringstream in(part);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw Error(ErrorKind::InvalidArgument, "bad integer in nu: " + tok);
      v.push_back(x);
    }
    return v;
  };
  if (semi == std::string::npos) return constant_tail(read_ints(s));
  auto prefix = read_ints(s.substr(0, semi));
  auto tail = read_ints(s.substr(semi + 1));
  if (tail.size() != 1) throw Error(ErrorKind::InvalidArgument, "nu needs exactly one tail value: " + s);
  return NuSeq(std::move(prefix), tail[0]);
}

int NuSeq::operator()(int j) const {
  if (j < 1) throw Error(ErrorKind::IndexOutOfRange, "nu index " + std::to_string(j));
  return j <= static_cast<int>(prefix_.size()) ? prefix_[j - 1] : tail_;
}

Signature NuSeq::reversed_head(int k) const {
  std::vector<int> c;
  for (int j = k; j >= 1; --j) c.push_back((*this)(j));
  return Signature(std::move(c));
}

NuSeq NuSeq::shifted(int l) const {
  auto p = prefix_;
  for (int& v : p) v += l;
  return NuSeq(std::move(p), tail_ + l);
}

std::string NuSeq::str() const {
  std::string s;
  for (std::size_t i = 0; i < prefix_.size(); ++i) s += (i ? " " : "") + std::to_string(prefix_[i]);
  return s + ";" + std::to_string(tail_);
}

// ---- H^nu and its specialization ----

Rational HNu::operator()(const Rational& t) const {
  Rational v = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * t + *it;
  return v;
}

HNu h_nu(const NuSeq& nu, const QParam& q) {
  if (nu(1) < 0) throw Error(ErrorKind::NegativeNu, "nu_1 = " + std::to_string(nu(1)) + "; shift first");
  const int J = static_cast<int>(nu.prefix().size());
  // every integer >= tail + J is hit by nu_j + j - 1 with j > J
  const int top = nu.tail() + J;
  std::vector<bool> hit(top, false);
  for (int j = 1; j <= J; ++j) hit[nu(j) + j - 1] = true;
  HNu H;
  H.poly = {Rational(1)};
  for (int x = 0; x < top; ++x) {
    if (hit[x]) continue;
    H.x_set.push_back(x);
    Rational qx = q_pow(q, x);
    H.poly.push_back(0);
    for (std::size_t i = H.poly.size() - 1; i >= 1; --i) H.poly[i] -= qx * H.poly[i - 1];
  }
  return H;
}

NuSpecialization::NuSpecialization(const NuSeq& nu, const QParam& q) : nu_(nu), q_(q), H_(h_nu(nu, q)) {}

Rational NuSpecialization::h(int k) const {
  if (k < 0 || k > H_.degree()) return 0;
  return H_.poly[k];
}

Rational NuSpecialization::p(int k) const {
  if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "power sum index " + std::to_string(k));
  const int J = static_cast<int>(nu_.prefix().size());
  Rational s = 0;
  for (int i = 1; i <= J; ++i) s += (q_pow(q_, static_cast<long>(k) * nu_(i)) - 1) * q_pow(q_, static_cast<long>(k) * (i - 1));
  // constant part, i > J
  s += (q_pow(q_, static_cast<long>(k) * nu_.tail()) - 1) * q_pow(q_, static_cast<long>(k) * J) / (1 - q_pow(q_, k));
  return s;
}

Rational NuSpecialization::schur(const Signature& mu) const {
  auto parts = as_partition(mu.coords());
  const int n = static_cast<int>(parts.size());
  if (n == 0) return 1;
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = h(parts[i] - i + j);
  return determinant(m);
}

NuSpecialization spec_nu(const NuSeq& nu, const QParam& q) { return NuSpecialization(nu, q); }

// ---- cotransition kernel ----

Rational cotransition(const Signature& lam, const Signature& mu, const QParam& q) {
  if (!interlaces(mu, lam)) return 0;
  return q_pow(q, mu.size()) * dim_q(mu, q) / dim_q(lam, q);
}

std::vector<std::pair<Signature, Rational>> cotransition_row(const Signature& lam, const QParam& q) {
  std::vector<std::pair<Signature, Rational>> row;
  const Rational d = dim_q(lam, q);
  for (auto& mu : enumerate_below(lam)) {
    Rational p = q_pow(q, mu.size()) * dim_q(mu, q) / d;
    row.emplace_back(std::move(mu), std::move(p));
  }
  return row;
}

FiniteMeasure pushdown(const FiniteMeasure& m, const QParam& q) {
  if (m.level < 2) throw Error(ErrorKind::LevelMismatch, "pushdown from level " + std::to_string(m.level));
  FiniteMeasure out;
  out.level = m.level - 1;
  out.tail = m.tail;
  for (const auto& [lam, w] : m.mass) {
    if (w == 0) continue;
    for (const auto& [mu, p] : cotransition_row(lam, q)) out.mass[mu] += w * p;
  }
  return out;
}

FiniteMeasure primitive_system(const Signature& lam, int k, const QParam& q) {
  if (k < 1 || k > lam.level())
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(k) + " for " + lam.str());
  FiniteMeasure m = FiniteMeasure::delta(lam);
  while (m.level > k) m = pushdown(m, q);
  return m;
}

// ---- extreme measures ----

FiniteMeasure extreme_projection(const NuSeq& nu, int k, const QParam& q, const ExtremeOptions& opt) {
  if (k < 1) throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(k));
  if (opt.epsilon <= 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  const HNu H = h_nu(nu, q);
  const int cap = opt.cap < 0 ? H.degree() : opt.cap;
  const Signature lower = nu.reversed_head(k);
  const Rational inv = q.inverse();

  std::vector<Signature> support = opt.full_box ? partitions_in_box(k, cap) : signatures_above(lower, cap);

  FiniteMeasure out;
  out.level = k;
  Rational acc = 0;
  std::vector<std::pair<Signature, Rational>> solved;  // coefficients a_mu of the s*(.; 1/q) expansion
  for (std::size_t idx = 0; idx < support.size(); ++idx) {
    const Signature& lam = support[idx];
    // nodes q^{-(lam_i + k - i)}
    Rational rhs = 1;
    for (int i = 0; i < k; ++i) rhs *= H(q_pow(q, -(lam[i] + k - 1 - i)));
    auto x = grid_point(lam, inv);
    for (const auto& [mu, a] : solved)
      if (a != 0 && contained(mu, lam)) rhs -= a * interp_schur<Rational>(mu, x, inv);
    Rational a = rhs / interp_diagonal(lam, inv);
    solved.emplace_back(lam, a);
    Rational e = a * interp_at_zero(lam, k, q);
    if (e < 0) throw Error(ErrorKind::NegativeMass, "E at " + lam.str() + " = " + to_string(e));
    if (e != 0 && !dominates(lam, lower))
      throw Error(ErrorKind::InvalidArgument, "mass " + to_string(e) + " outside the support at " + lam.str());
    if (e != 0) out.mass[lam] = e;
    acc += e;
    bool layer_done = idx + 1 == support.size() || support[idx + 1].size() != lam.size();
    if (layer_done && acc >= 1 - opt.epsilon) break;
  }
  if (acc < 1 - opt.epsilon)
    throw Error(ErrorKind::CapTooSmall, "mass " + to_string(acc) + " reached with cap " + std::to_string(cap));
  out.tail = 1 - acc;
  out.validate();
  return out;
}

// ---- generating functions ----

Rational sgen_eval(const FiniteMeasure& m, std::span<const Rational> x, Flavor flavor, const QParam& q) {
  const int N = m.level;
  if (static_cast<int>(x.size()) != N) throw Error(ErrorKind::LevelMismatch, "point length vs measure level");
  Rational s = 0;
  if (flavor == Flavor::q_schur) {
    for (const auto& [mu, w] : m.mass)
      if (w != 0) s += w * schur_eval(mu, x) / principal_spec(mu, q, Direction::descending);
    return s;
  }
  std::vector<Rational> y;
  for (const auto& xi : x) y.push_back(q_pow(q, N - 1) * xi);
  for (const auto& [mu, w] : m.mass)
    if (w != 0) s += w * interp_schur<Rational>(mu, y, q.inverse()) / interp_at_zero(mu, N, q);
  return s;
}

Rational sgen_tail_bound(const FiniteMeasure& m, const NuSeq& nu, std::span<const Rational> x, const QParam& q) {
  if (m.tail == 0) return 0;
  const int N = m.level;
  std::vector<Rational> y;
  for (const auto& xi : x) y.push_back(q_pow(q, N - 1) * xi);
  Rational worst = 0;
  for (const auto& mu : signatures_above(nu.reversed_head(N), h_nu(nu, q).degree())) {
    if (m.mass.count(mu)) continue;
    worst = std::max(worst, Rational(abs(interp_schur<Rational>(mu, y, q.inverse()) / interp_at_zero(mu, N, q))));
  }
  return m.tail * worst;
}

Rational total_variation(const FiniteMeasure& a, const FiniteMeasure& b) {
  if (a.level != b.level) throw Error(ErrorKind::LevelMismatch, "total variation across levels");
  Rational s = 0;
  for (const auto& [sig, v] : a.mass) s += abs(v - b.at(sig));
  for (const auto& [sig, v] : b.mass)
    if (!a.mass.count(sig)) s += abs(v);
  return s / 2;
}

Rational coherence_check(const FiniteMeasure& high, const FiniteMeasure& low, const QParam& q) {
  if (high.level != low.level + 1) throw Error(ErrorKind::LevelMismatch, "coherence needs consecutive levels");
  return total_variation(pushdown(high, q), low);
}

// ---- coefficients of the boundary expansion ----

Rational limit_coefficient(const Signature& mu, const NuSeq& nu, const QParam& q) {
  auto d = diagram_stats(mu);
  Rational v = q_pow(q, d.n - d.n_prime) * spec_nu(nu, q).schur(mu);
  return d.size % 2 ? Rational(-v) : v;
}

Rational prelimit_coefficient(const Signature& mu, const Signature& lam, const QParam& q) {
  const int N = lam.level();
  if (mu.level() > N) throw Error(ErrorKind::LevelMismatch, mu.str() + " above level of " + lam.str());
  Signature m = mu.padded(N);
  if (!contained(m, lam)) return 0;
  const Rational& base = q.value();
  return q_pow(q, static_cast<long>(N - 1) * m.size()) * interp_at_grid(m, lam, base) /
         (interp_diagonal(m, base) * principal_spec(m, q, Direction::ascending));
}

TruncatedValue q_k_nu_truncated(const NuSeq& nu, int k, std::span<const std::complex<double>> x, int degree_cap,
                                const QParam& q) {
  if (static_cast<int>(x.size()) != k) throw Error(ErrorKind::LevelMismatch, "point length vs k");
  const auto spec = spec_nu(nu, q);
  std::vector<std::complex<double>> layer(degree_cap + 1, 0.0);
  // Spec(s_mu) vanishes once mu_1 exceeds deg H, so the box is finite.
  for (const auto& mu : partitions_in_box(k, std::min(degree_cap, spec.generating().degree()))) {
    if (mu.size() > degree_cap) continue;
    auto d = diagram_stats(mu);
    Rational c = q_pow(q, d.n - d.n_prime) * spec.schur(mu);
    if (d.size % 2) c = -c;
    if (c == 0) continue;
    layer[mu.size()] += to_double(c) * interp_schur<std::complex<double>>(mu, x, q.value());
  }
  TruncatedValue out{0.0, 0.0};
  for (const auto& v : layer) out.value += v;
  // every nonzero term has degree <= k deg H; below that the last layer stands in for the rest
  const bool complete = degree_cap >= k * spec.generating().degree();
  out.tail_estimate = complete ? 0.0 : std::abs(layer[degree_cap]);
  return out;
}

}  // namespace qgt
