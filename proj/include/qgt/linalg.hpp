#pragma once

#include <cmath>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "qgt/exact.hpp"

namespace qgt {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// Gaussian elimination. Exact scalars pivot on the first nonzero entry;
// floating scalars use partial pivoting on magnitude.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  Matrix<S> m = input;
  const Eigen::Index n = m.rows();
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    if constexpr (std::is_same_v<S, Rational>) {
      for (Eigen::Index r = c; r < n; ++r)
        if (m(r, c) != 0) { p = r; break; }
    } else {
      double best = 0;
      for (Eigen::Index r = c; r < n; ++r)
        if (std::abs(m(r, c)) > best) { best = std::abs(m(r, c)); p = r; }
    }
    if (p < 0) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      S f = m(r, c) / m(c, c);
      for (Eigen::Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

}  // namespace qgt
