#pragma once

#include <vector>

#include "folint/exactmath/matrix.hpp"
#include "folint/forms/multipoly.hpp"

namespace folint {

namespace detail {

template <class S>
Eigen::Index rank_of(const DenseMatrix<S>& m) {
  return rank(m);
}

}  // namespace detail

/// dim K[[u,v]] / (gens) at the origin, by truncated jets: c_N is the
/// codimension of (gens) + m^N in polynomials of degree < N; c_N = c_(N+1)
/// implies m^N lies in the ideal, so the colength is c_N. Throws NonIsolated
/// if no stabilization is seen for N < jet_cap.
template <class S>
int colength(const std::vector<MultiPoly<S>>& gens, int jet_cap) {
  for (const auto& g : gens)
    if (!g.is_zero() && !detail::coeff_is_zero(g.constant_term())) return 0;
  int previous = -1;
  for (int n = 1; n <= jet_cap; ++n) {
    const std::vector<Exponent> cols = [&] {
      std::vector<Exponent> c;
      for (int d = 0; d < n; ++d)
        for (int i = d; i >= 0; --i) c.push_back({i, d - i, 0});
      return c;
    }();
    std::map<Exponent, Eigen::Index> index;
    for (size_t i = 0; i < cols.size(); ++i) index[cols[i]] = static_cast<Eigen::Index>(i);
    std::vector<MultiPoly<S>> rows;
    for (const auto& g : gens) {
      if (g.is_zero() || g.order() >= n) continue;
      const MultiPoly<S> gt = g.truncated(n);
      for (const auto& m : cols) {
        if (total(m) + gt.order() >= n) continue;
        rows.push_back((gt * MultiPoly<S>::monomial(S(1), m)).truncated(n));
      }
    }
    Eigen::Index r = 0;
    if (!rows.empty()) {
      DenseMatrix<S> mat(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
      for (Eigen::Index i = 0; i < mat.rows(); ++i)
        for (Eigen::Index j = 0; j < mat.cols(); ++j) mat(i, j) = S(0);
      for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [e, c] : rows[i].terms()) mat(static_cast<Eigen::Index>(i), index.at(e)) = c;
      r = detail::rank_of(mat);
    }
    const int c = static_cast<int>(cols.size()) - static_cast<int>(r);
    if (c == previous) return c;
    previous = c;
  }
  throw Error(ErrorKind::NonIsolated, "colength did not stabilize below jet order " + std::to_string(jet_cap));
}

}  // namespace folint
