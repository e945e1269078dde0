#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <vector>

#include "folint/error.hpp"
#include "folint/exactmath/rational.hpp"

namespace folint {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using ExactMatrix = DenseMatrix<Rational>;
using ExactVector = DenseVector<Rational>;

template <class S>
struct RowEchelon {
  DenseMatrix<S> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over a field.
template <class S>
RowEchelon<S> row_reduce(DenseMatrix<S> m) {
  RowEchelon<S> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Eigen::Index rank(const DenseMatrix<S>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Kernel basis in canonical form: the basis vectors, stacked as rows, are in
/// reduced row echelon form (leading entry 1, sorted by leading position).
template <class S>
std::vector<DenseVector<S>> nullspace_generic(const DenseMatrix<S>& m) {
  const Eigen::Index cols = m.cols();
  RowEchelon<S> e = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (auto p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<DenseVector<S>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    DenseVector<S> v = DenseVector<S>::Constant(cols, S(0));
    v(f) = S(1);
    for (size_t i = 0; i < e.pivots.size(); ++i) v(e.pivots[i]) = -e.reduced(static_cast<Eigen::Index>(i), f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  DenseMatrix<S> stacked(static_cast<Eigen::Index>(basis.size()), cols);
  for (size_t i = 0; i < basis.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = basis[i].transpose();
  RowEchelon<S> canon = row_reduce(stacked);
  std::vector<DenseVector<S>> out;
  for (size_t i = 0; i < canon.pivots.size(); ++i) out.push_back(canon.reduced.row(static_cast<Eigen::Index>(i)).transpose());
  return out;
}

/// Exact kernel of a rational matrix by fraction-free (Bareiss) elimination.
/// Basis normalized as in nullspace_generic.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

/// Rank by fraction-free elimination.
Eigen::Index rank(const ExactMatrix& m);

/// Determinant by fraction-free elimination (rationals) or Gaussian elimination.
Rational determinant(const ExactMatrix& m);

template <class S>
S determinant_generic(DenseMatrix<S> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    const S inv = S(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m);

}  // namespace folint
