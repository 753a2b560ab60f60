#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

#include "qgt/errors.hpp"

namespace qgt {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// The deformation parameter, 0 < q < 1.
class QParam {
 public:
  explicit QParam(Rational q);
  const Rational& value() const { return q_; }
  Rational inverse() const { return 1 / q_; }

 private:
  Rational q_;
};

// base^k for any nonzero base, k of either sign.
Rational rpow(const Rational& base, long k);
Rational q_pow(const QParam& q, long k);

// prod_{i=1}^{n} (1 - q^i)
Rational q_factor_product(const QParam& q, long n);

struct Enclosure {
  Rational lower;
  Rational upper;
};

// Two-sided bound on prod_{i>=1} (1 - q^i) from the first n factors.
Enclosure euler_product_enclosure(const QParam& q, long n);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Scalar conversion used by the templated evaluators.
template <class S>
S scalar_from(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>) {
    return r;
  } else {
    return S(to_double(r));
  }
}

template <class S>
bool is_zero(const S& v) {
  return v == S(0);
}

// Square-and-multiply for any field-like scalar.
template <class S>
S ipow(const S& base, long k) {
  if (k < 0) return S(1) / ipow(base, -k);
  S result(1);
  S b = base;
  while (k > 0) {
    if (k & 1) result *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return result;
}

}  // namespace qgt
