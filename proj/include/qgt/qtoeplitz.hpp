#pragma once

#include <map>
#include <vector>

#include "qgt/exact.hpp"
#include "qgt/gt.hpp"
#include "qgt/linalg.hpp"
#include "qgt/measures.hpp"

namespace qgt {

// Coefficient list, constant term first.
using Polynomial = std::vector<Rational>;

Rational poly_eval(const Polynomial& p, const Rational& t);

// H(t) = sum_l c_l prod_{i<l} (q^{-i} - t)
struct NewtonExpansion {
  std::vector<Rational> c;
  Rational operator()(const Rational& t, const QParam& q) const;
};

NewtonExpansion newton_expand_1d(const Polynomial& H, const QParam& q);

// Rectangle d[i,j], 1 <= i <= rows, 1 <= j <= cols, of a q-Toeplitz matrix
// d[i,j+1] = d[i-1,j] + (q^{1-j} - q^{1-i}) d[i,j].
class QToeplitz {
 public:
  QToeplitz(QParam q, Matrix<Rational> d) : q_(std::move(q)), d_(std::move(d)) {}
  const Rational& operator()(int i, int j) const { return d_(i - 1, j - 1); }  // one-based
  int rows() const { return static_cast<int>(d_.rows()); }
  int cols() const { return static_cast<int>(d_.cols()); }
  const QParam& q() const { return q_; }
  const Matrix<Rational>& matrix() const { return d_; }
  // True when every generated cell obeys the recurrence.
  bool satisfies_recurrence() const;

 private:
  QParam q_;
  Matrix<Rational> d_;
};

QToeplitz from_first_column(const NewtonExpansion& c, int rows, int cols, const QParam& q);

// Selected rows against the first N columns.
Rational initial_minor(const QToeplitz& M, const std::vector<int>& row_indices);
// First N rows against selected columns.
Rational initial_row_minor(const QToeplitz& M, const std::vector<int>& col_indices);

// Coefficients of H(x_1)...H(x_N) = sum c_lam (-1)^{|lam|} s*_lam(q^{N-1} x; q^{-1}), by grid solve.
std::map<Signature, Rational> c_lambda_table(const Polynomial& H, int N, const QParam& q);
Rational c_lambda(const Polynomial& H, const Signature& lam, const QParam& q);

// det[d[lam_{N-i+1} + i, j]], i,j = 1..N
Rational lambda_minor(const QToeplitz& M, const Signature& lam);
// The minor rescaled so that it equals c_lambda: q^{-(N-1)|lam|} times lambda_minor.
Rational c_lambda_from_minor(const QToeplitz& M, const Signature& lam);

QToeplitz d_nu(const NuSeq& nu, int rows, int cols, const QParam& q);

}  // namespace qgt
