#include "qgt/exact.hpp"

#include <cctype>

namespace qgt {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateEnclosure: return "DegenerateEnclosure";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::Explosion: return "Explosion";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::RepeatedPoint: return "RepeatedPoint";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorKind::MissingGridValue: return "MissingGridValue";
    case ErrorKind::NegativeNu: return "NegativeNu";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TailHit: return "TailHit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

QParam::QParam(Rational q) : q_(std::move(q)) {
  if (q_ <= 0 || q_ >= 1)
    throw Error(ErrorKind::InvalidArgument, "q must satisfy 0 < q < 1, got " + to_string(q_));
}

Rational rpow(const Rational& base, long k) {
  if (base == 0 && k < 0) throw Error(ErrorKind::ZeroPoint, "zero raised to a negative power");
  return ipow(base, k);
}

Rational q_pow(const QParam& q, long k) { return rpow(q.value(), k); }

Rational q_factor_product(const QParam& q, long n) {
  Rational p = 1;
  Rational qi = 1;
  for (long i = 1; i <= n; ++i) {
    qi *= q.value();
    p *= 1 - qi;
  }
  return p;
}

Enclosure euler_product_enclosure(const QParam& q, long n) {
  // Tail: prod_{i>n} (1 - q^i) >= 1 - sum_{i>n} q^i = 1 - q^{n+1}/(1-q).
  Rational tail = q_pow(q, n + 1) / (1 - q.value());
  if (tail >= 1)
    throw Error(ErrorKind::DegenerateEnclosure, "tail bound q^(n+1)/(1-q) >= 1 at n=" + std::to_string(n));
  Rational upper = q_factor_product(q, n);
  return {upper * (1 - tail), upper};
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  // Sign and leading zeros removed: GMP would read "025" as octal.
  auto strip_plus = [](std::string t) {
    std::string sign;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      if (t[0] == '-') sign = "-";
      t = t.substr(1);
    }
    auto nz = t.find_first_not_of('0');
    return sign + (nz == std::string::npos ? std::string("0") : t.substr(nz));
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      if (!valid_int(s)) throw Error(ErrorKind::InvalidArgument, "not a rational: " + s);
      return Rational(Integer(strip_plus(s)));
    }
    // finite decimal, read exactly
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string digits = (neg || (!whole.empty() && whole[0] == '+')) ? whole.substr(1) : whole;
    digits += frac;
    if (digits.empty() || !valid_int(digits) || digits[0] == '-' || digits[0] == '+')
      throw Error(ErrorKind::InvalidArgument, "not a rational: " + s);
    Rational r{Integer(strip_plus(digits))};
    r /= rpow(Rational(10), static_cast<long>(frac.size()));
    return neg ? Rational(-r) : r;
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(ErrorKind::InvalidArgument, "not a rational: " + s);
  Integer d(strip_plus(den));
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator: " + s);
  return Rational(Integer(strip_plus(num))) / Rational(d);
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace qgt
