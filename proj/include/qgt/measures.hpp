#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgt/exact.hpp"
#include "qgt/gt.hpp"

namespace qgt {

// Exact probability mass on finitely many signatures of one level,
// plus a declared tail for mass not assigned to any listed signature.
struct FiniteMeasure {
  int level = 0;
  std::map<Signature, Rational> mass;
  Rational tail = 0;

  static FiniteMeasure delta(const Signature& lam);
  Rational at(const Signature& s) const;
  Rational total() const;
  // Throws NegativeMass or InvalidArgument when an invariant fails.
  void validate() const;
};

// Nondecreasing integer sequence that is constant from index J+1 on.
class NuSeq {
 public:
  NuSeq(std::vector<int> prefix, int tail);
  // The prefix repeated by its own last value.
  static NuSeq constant_tail(std::vector<int> prefix);
  // "0 1;1" -> prefix (0,1), tail 1
  static NuSeq parse(std::string_view text);

  int operator()(int j) const;  // nu_j, one-based
  const std::vector<int>& prefix() const { return prefix_; }
  int tail() const { return tail_; }
  // (nu_k, ..., nu_1)
  Signature reversed_head(int k) const;
  NuSeq shifted(int l) const;
  std::string str() const;

 private:
  std::vector<int> prefix_;
  int tail_;
};

struct HNu {
  std::vector<int> x_set;      // X(nu), increasing
  std::vector<Rational> poly;  // coefficients of prod (1 - q^x t), constant term first
  Rational operator()(const Rational& t) const;
  int degree() const { return static_cast<int>(poly.size()) - 1; }
};

HNu h_nu(const NuSeq& nu, const QParam& q);

// Values of the specialization with H-generating function H^nu.
class NuSpecialization {
 public:
  NuSpecialization(const NuSeq& nu, const QParam& q);
  Rational h(int k) const;
  Rational p(int k) const;
  Rational schur(const Signature& mu) const;  // Jacobi-Trudi
  const HNu& generating() const { return H_; }

 private:
  NuSeq nu_;
  QParam q_;
  HNu H_;
};

NuSpecialization spec_nu(const NuSeq& nu, const QParam& q);

Rational cotransition(const Signature& lam, const Signature& mu, const QParam& q);
std::vector<std::pair<Signature, Rational>> cotransition_row(const Signature& lam, const QParam& q);
FiniteMeasure pushdown(const FiniteMeasure& m, const QParam& q);
FiniteMeasure primitive_system(const Signature& lam, int k, const QParam& q);

struct ExtremeOptions {
  Rational epsilon = Rational(1, 10000);
  int cap = -1;           // bound on mu_1; negative means deg H^nu
  bool full_box = false;  // solve on the whole box, not only above (nu_k, ..., nu_1)
};

FiniteMeasure extreme_projection(const NuSeq& nu, int k, const QParam& q, const ExtremeOptions& opt = {});

enum class Flavor { q_schur, q_interpolation };

Rational sgen_eval(const FiniteMeasure& m, std::span<const Rational> x, Flavor flavor, const QParam& q);
// max over the unlisted part of the support box of |basis value|; multiplies the declared tail
// to bound the truncation error of the interpolation generating function.
Rational sgen_tail_bound(const FiniteMeasure& m, const NuSeq& nu, std::span<const Rational> x, const QParam& q);

Rational coherence_check(const FiniteMeasure& high, const FiniteMeasure& low, const QParam& q);
Rational total_variation(const FiniteMeasure& a, const FiniteMeasure& b);

Rational limit_coefficient(const Signature& mu, const NuSeq& nu, const QParam& q);
Rational prelimit_coefficient(const Signature& mu, const Signature& lam, const QParam& q);

struct TruncatedValue {
  std::complex<double> value;
  double tail_estimate;  // magnitude of the last included degree layer
};

TruncatedValue q_k_nu_truncated(const NuSeq& nu, int k, std::span<const std::complex<double>> x, int degree_cap,
                                const QParam& q);

}  // namespace qgt
