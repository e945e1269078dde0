#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "folint/exactmath/matrix.hpp"
#include "folint/forms/multipoly.hpp"
#include "folint/forms/oneform.hpp"
#include "folint/integrate/diophantine.hpp"

namespace folint::testing {

// Enumerates every k with the linear equation, then filters by the quadratic.
inline std::vector<DiophantineSolution> brute_force_diophantine(const std::vector<EigenClass>& classes, int r,
                                                                int t) {
  std::vector<DiophantineSolution> out;
  const size_t n = classes.size();
  std::vector<int> k(n, 1);
  for (int d = 1; d < t; ++d) {
    const long target = static_cast<long>(d) * (r + 2);
    auto rec = [&](auto&& self, size_t i, long sum) -> void {
      if (i == n) {
        if (sum != target) return;
        long q = 0;
        for (size_t j = 0; j < n; ++j)
          q += static_cast<long>(classes[j].size) * k[j] * k[j] * classes[j].rho * classes[j].delta;
        if (q == static_cast<long>(d) * d) out.push_back({d, k});
        return;
      }
      const long w = static_cast<long>(classes[i].size) * (classes[i].rho + classes[i].delta);
      for (int v = 1; sum + w * v <= target; ++v) {
        k[i] = v;
        self(self, i + 1, sum + w * v);
      }
    };
    rec(rec, 0, 0);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.d != b.d ? a.d < b.d : a.k < b.k;
  });
  return out;
}

// Base points of a monomial ideal in two variables, by blowing up: the
// multiplicity at the origin is the least total degree; the only base
// points on the exceptional line are the origins of the two charts.
inline void monomial_blowups(const std::set<std::pair<int, int>>& gens, std::vector<int>& out) {
  int m = 1 << 30;
  for (const auto& [a, b] : gens) m = std::min(m, a + b);
  if (m == 0) return;
  out.push_back(m);
  std::set<std::pair<int, int>> c1, c2;
  for (const auto& [a, b] : gens) {
    c1.insert({a + b - m, b});  // u = s, v = s t
    c2.insert({a, a + b - m});  // u = s t, v = s
  }
  monomial_blowups(c1, out);
  monomial_blowups(c2, out);
}

// Rank of the coefficient vectors of forms of a common degree.
inline long span_rank(const std::vector<QMultiPoly>& forms) {
  const int d = forms.front().degree();
  const auto monos = monomials_of_degree(d);
  ExactMatrix m(static_cast<Eigen::Index>(forms.size()), static_cast<Eigen::Index>(monos.size()));
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = 0; j < monos.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = forms[i].coeff(monos[j]);
  return static_cast<long>(rank(m));
}

// The three components of (G dF - F dG) ^ w, expanded directly.
inline std::array<QMultiPoly, 3> wedge_components(const QMultiPoly& F, const QMultiPoly& G, const QOneForm& w) {
  std::array<QMultiPoly, 3> p;
  for (int i = 0; i < 3; ++i) p[static_cast<size_t>(i)] = G * F.derivative(i) - F * G.derivative(i);
  return {p[0] * w.B - p[1] * w.A, p[1] * w.C - p[2] * w.B, p[0] * w.C - p[2] * w.A};
}

}  // namespace folint::testing
