#include "folint/exactmath/matrix.hpp"

namespace folint {

namespace {

using IntMatrix = DenseMatrix<Integer>;

// Scales each row by the lcm of its denominators.
IntMatrix clear_denominators(const ExactMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

struct Bareiss {
  IntMatrix echelon;
  std::vector<Eigen::Index> pivots;
  int sign = 1;
};

// Fraction-free forward elimination; every division is exact.
Bareiss bareiss(IntMatrix m) {
  Bareiss out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      out.sign = -out.sign;
    }
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  out.echelon = std::move(m);
  return out;
}

}  // namespace

Eigen::Index rank(const ExactMatrix& m) {
  return static_cast<Eigen::Index>(bareiss(clear_denominators(m)).pivots.size());
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const Eigen::Index cols = m.cols();
  Bareiss b = bareiss(clear_denominators(m));
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (auto p : b.pivots) is_pivot[static_cast<size_t>(p)] = true;
  const auto npiv = static_cast<Eigen::Index>(b.pivots.size());

  std::vector<ExactVector> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    ExactVector v = ExactVector::Constant(cols, Rational(0));
    v(f) = 1;
    // Back substitution through the integer echelon rows.
    for (Eigen::Index i = npiv - 1; i >= 0; --i) {
      const Eigen::Index pc = b.pivots[static_cast<size_t>(i)];
      Rational acc = 0;
      for (Eigen::Index j = pc + 1; j < cols; ++j) {
        if (sgn(b.echelon(i, j)) == 0 || sgn(v(j)) == 0) continue;
        acc += Rational(b.echelon(i, j)) * v(j);
      }
      v(pc) = -acc / Rational(b.echelon(i, pc));
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  ExactMatrix stacked(static_cast<Eigen::Index>(basis.size()), cols);
  for (size_t i = 0; i < basis.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = basis[i].transpose();
  RowEchelon<Rational> canon = row_reduce(stacked);
  std::vector<ExactVector> out;
  for (size_t i = 0; i < canon.pivots.size(); ++i) out.push_back(canon.reduced.row(static_cast<Eigen::Index>(i)).transpose());
  return out;
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  Rational scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= Rational(l);
  }
  Bareiss b = bareiss(clear_denominators(m));
  if (static_cast<Eigen::Index>(b.pivots.size()) < n) return 0;
  // With full rank and no skipped columns, the last pivot is the determinant.
  Rational det(b.echelon(n - 1, n - 1));
  det *= b.sign;
  return det / scale;
}

ExactMatrix inverse(const ExactMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  ExactMatrix aug(n, 2 * n);
  aug.setZero();
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;
  auto e = row_reduce(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  return e.reduced.rightCols(n);
}

}  // namespace folint
