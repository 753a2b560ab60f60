#include "qgt/qtoeplitz.hpp"

#include "qgt/interp.hpp"

namespace qgt {

Rational poly_eval(const Polynomial& p, const Rational& t) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

Rational NewtonExpansion::operator()(const Rational& t, const QParam& q) const {
  Rational v = 0, basis = 1;
  for (std::size_t l = 0; l < c.size(); ++l) {
    v += c[l] * basis;
    basis *= q_pow(q, -static_cast<long>(l)) - t;
  }
  return v;
}

NewtonExpansion newton_expand_1d(const Polynomial& H, const QParam& q) {
  // One-variable grid solve with parameter 1/q: the basis s*_l(t; 1/q) = (-1)^l prod_{i<l}(q^{-i} - t).
  const int deg = H.empty() ? 0 : static_cast<int>(H.size()) - 1;
  std::vector<Signature> support;
  for (int l = 0; l <= deg; ++l) support.push_back(Signature{l});
  auto a = grid_solve_on(support, [&](const Signature& s) { return poly_eval(H, q_pow(q, -s[0])); }, q.inverse());
  NewtonExpansion out;
  for (int l = 0; l <= deg; ++l) {
    const Rational& v = a.at(Signature{l});
    out.c.push_back(l % 2 ? Rational(-v) : v);
  }
  return out;
}

bool QToeplitz::satisfies_recurrence() const {
  auto d = [&](int i, int j) -> Rational { return (i < 1 || j < 1) ? Rational(0) : (*this)(i, j); };
  for (int j = 1; j < cols(); ++j)
    for (int i = 1; i <= rows(); ++i)
      if (d(i, j + 1) != d(i - 1, j) + (q_pow(q_, 1 - j) - q_pow(q_, 1 - i)) * d(i, j)) return false;
  return true;
}

QToeplitz from_first_column(const NewtonExpansion& c, int rows, int cols, const QParam& q) {
  if (rows < cols) throw Error(ErrorKind::InvalidArgument, "q-Toeplitz rectangle needs rows >= cols");
  Matrix<Rational> d = Matrix<Rational>::Zero(rows, cols);
  for (int i = 0; i < rows && i < static_cast<int>(c.c.size()); ++i) d(i, 0) = c.c[i];
  for (int j = 1; j < cols; ++j)
    for (int i = 1; i <= rows; ++i) {
      Rational up = i >= 2 ? d(i - 2, j - 1) : Rational(0);
      d(i - 1, j) = up + (q_pow(q, 1 - j) - q_pow(q, 1 - i)) * d(i - 1, j - 1);
    }
  return QToeplitz(q, std::move(d));
}

namespace {

void check_indices(const std::vector<int>& idx, int bound, int limit) {
  if (static_cast<int>(idx.size()) > limit)
    throw Error(ErrorKind::IndexOutOfRange, "minor larger than the generated rectangle");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > bound) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(idx[k]));
    if (k > 0 && idx[k] <= idx[k - 1]) throw Error(ErrorKind::IndexOutOfRange, "indices must increase");
  }
}

}  // namespace

Rational initial_minor(const QToeplitz& M, const std::vector<int>& row_indices) {
  check_indices(row_indices, M.rows(), M.cols());
  const int n = static_cast<int>(row_indices.size());
  Matrix<Rational> m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = M(row_indices[a], b + 1);
  return determinant(m);
}

Rational initial_row_minor(const QToeplitz& M, const std::vector<int>& col_indices) {
  check_indices(col_indices, M.cols(), M.rows());
  const int n = static_cast<int>(col_indices.size());
  Matrix<Rational> m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = M(a + 1, col_indices[b]);
  return determinant(m);
}

std::map<Signature, Rational> c_lambda_table(const Polynomial& H, int N, const QParam& q) {
  const int deg = H.empty() ? 0 : static_cast<int>(H.size()) - 1;
  // x = q^{-(N-1)} (1/q)^{lam - delta}
  auto value = [&](const Signature& lam) {
    Rational v = 1;
    for (int i = 0; i < N; ++i) v *= poly_eval(H, q_pow(q, -(N - 1) - (lam[i] - i)));
    return v;
  };
  auto a = grid_solve_on(partitions_in_box(N, deg), value, q.inverse());
  std::map<Signature, Rational> out;
  for (auto& [lam, v] : a) out[lam] = lam.size() % 2 ? Rational(-v) : v;
  return out;
}

Rational c_lambda(const Polynomial& H, const Signature& lam, const QParam& q) {
  if (!lam.nonnegative()) throw Error(ErrorKind::NegativeCoordinate, lam.str());
  const int deg = H.empty() ? 0 : static_cast<int>(H.size()) - 1;
  if (lam.level() > 0 && lam[0] > deg) return 0;
  return c_lambda_table(H, lam.level(), q).at(lam);
}

Rational lambda_minor(const QToeplitz& M, const Signature& lam) {
  const int N = lam.level();
  std::vector<int> rows;
  for (int i = 1; i <= N; ++i) rows.push_back(lam[N - i] + i);
  return initial_minor(M, rows);
}

Rational c_lambda_from_minor(const QToeplitz& M, const Signature& lam) {
  return q_pow(M.q(), -static_cast<long>(lam.level() - 1) * lam.size()) * lambda_minor(M, lam);
}

QToeplitz d_nu(const NuSeq& nu, int rows, int cols, const QParam& q) {
  return from_first_column(newton_expand_1d(h_nu(nu, q).poly, q), rows, cols, q);
}

}  // namespace qgt
