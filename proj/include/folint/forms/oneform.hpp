#pragma once

#include <optional>
#include <string>

#include "folint/forms/multipoly.hpp"

namespace folint {

/// A dX + B dY + C dZ with homogeneous components of equal degree.
template <class S>
struct ProjOneForm {
  MultiPoly<S> A, B, C;

  const MultiPoly<S>& operator[](int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  bool is_zero() const { return A.is_zero() && B.is_zero() && C.is_zero(); }
  int component_degree() const { return std::max({A.degree(), B.degree(), C.degree()}); }
  ProjOneForm scaled(const S& s) const { return {A.scaled(s), B.scaled(s), C.scaled(s)}; }
  friend bool operator==(const ProjOneForm& a, const ProjOneForm& b) {
    return a.A == b.A && a.B == b.B && a.C == b.C;
  }
};

/// Components in the order (dX^dY, dY^dZ, dX^dZ).
template <class S>
struct TwoForm {
  MultiPoly<S> xy, yz, xz;
  bool is_zero() const { return xy.is_zero() && yz.is_zero() && xz.is_zero(); }
};

using QOneForm = ProjOneForm<Rational>;
using KOneForm = ProjOneForm<FieldElement>;

struct EulerResult {
  bool valid = true;
  std::optional<Exponent> witness;  // a surviving monomial of XA + YB + ZC
};

/// Checks XA + YB + ZC = 0. Components must be homogeneous of one degree.
template <class S>
EulerResult euler_check(const MultiPoly<S>& A, const MultiPoly<S>& B, const MultiPoly<S>& C) {
  int deg = -1;
  for (const auto* p : {&A, &B, &C}) {
    if (p->is_zero()) continue;
    if (!p->is_homogeneous()) throw Error(ErrorKind::InhomogeneousInput, "component is not homogeneous");
    if (deg >= 0 && p->degree() != deg) throw Error(ErrorKind::InhomogeneousInput, "components have different degrees");
    deg = p->degree();
  }
  MultiPoly<S> s = A.shifted(0, 1) + B.shifted(1, 1) + C.shifted(2, 1);
  if (s.is_zero()) return {};
  return {false, s.terms().begin()->first};
}

/// r = (common component degree) - 1.
template <class S>
int foliation_degree(const ProjOneForm<S>& w) {
  if (w.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero 1-form");
  return w.component_degree() - 1;
}

template <class S>
TwoForm<S> wedge(const ProjOneForm<S>& eta, const ProjOneForm<S>& w) {
  return {eta.A * w.B - eta.B * w.A, eta.B * w.C - eta.C * w.B, eta.A * w.C - eta.C * w.A};
}

/// G dF - F dG.
template <class S>
ProjOneForm<S> pencil_differential(const MultiPoly<S>& F, const MultiPoly<S>& G) {
  if (F.is_zero() || G.is_zero() || !F.is_homogeneous() || !G.is_homogeneous())
    throw Error(ErrorKind::InhomogeneousInput, "pencil members must be nonzero homogeneous forms");
  if (F.degree() != G.degree()) throw Error(ErrorKind::UnequalDegrees, "pencil members have different degrees");
  if (homogeneous_gcd(F, G).degree() > 0) throw Error(ErrorKind::NotCoprime, "pencil members share a factor");
  return {G * F.derivative(0) - F * G.derivative(0), G * F.derivative(1) - F * G.derivative(1),
          G * F.derivative(2) - F * G.derivative(2)};
}

/// Which homogeneous coordinate is set to 1.
enum class Chart { X, Y, Z };

/// Slots of the affine coordinates of a chart: Z -> (X, Y), Y -> (X, Z), X -> (Y, Z).
inline std::array<int, 2> chart_slots(Chart c) {
  switch (c) {
    case Chart::Z: return {0, 1};
    case Chart::Y: return {0, 2};
    case Chart::X: return {1, 2};
  }
  return {0, 1};
}
inline int chart_index(Chart c) { return c == Chart::X ? 0 : (c == Chart::Y ? 1 : 2); }
inline const char* chart_name(Chart c) { return c == Chart::X ? "X" : (c == Chart::Y ? "Y" : "Z"); }

/// Affine polynomial in the chart's coordinates, placed in slots (0, 1).
template <class S>
MultiPoly<S> chart_restrict(const MultiPoly<S>& p, Chart c) {
  const auto slots = chart_slots(c);
  MultiPoly<S> r;
  for (const auto& [e, v] : p.terms()) r.add_term({e[static_cast<size_t>(slots[0])], e[static_cast<size_t>(slots[1])], 0}, v);
  return r;
}

/// Homogenizes an affine chart polynomial back to degree n.
template <class S>
MultiPoly<S> chart_homogenize(const MultiPoly<S>& p, Chart c, int n) {
  const auto slots = chart_slots(c);
  const int k = chart_index(c);
  MultiPoly<S> r;
  for (const auto& [e, v] : p.terms()) {
    Exponent h{0, 0, 0};
    h[static_cast<size_t>(slots[0])] = e[0];
    h[static_cast<size_t>(slots[1])] = e[1];
    h[static_cast<size_t>(k)] = n - e[0] - e[1];
    r.add_term(h, v);
  }
  return r;
}

/// a dx + b dy in the chart's coordinates.
template <class S>
struct AffineOneForm {
  MultiPoly<S> a, b;
};

template <class S>
AffineOneForm<S> chart_restrict(const ProjOneForm<S>& w, Chart c) {
  const auto slots = chart_slots(c);
  return {chart_restrict(w[slots[0]], c), chart_restrict(w[slots[1]], c)};
}

/// f(p0 + u, p1 + v) for an affine polynomial in slots (0, 1).
template <class S>
MultiPoly<S> translate_to_origin(const MultiPoly<S>& f, const S& p0, const S& p1) {
  using P = MultiPoly<S>;
  return f.substitute({P::var(0) + P(p0), P::var(1) + P(p1), P(S(0))});
}

/// Divides out gcd(A, B, C); returns the removed factor (1 if none).
template <class S>
MultiPoly<S> normalize_gcd(ProjOneForm<S>& w) {
  MultiPoly<S> g = homogeneous_gcd(homogeneous_gcd(w.A, w.B), w.C);
  if (g.degree() <= 0) return MultiPoly<S>(S(1));
  w = {exact_divide(w.A, g), exact_divide(w.B, g), exact_divide(w.C, g)};
  return g;
}

}  // namespace folint
