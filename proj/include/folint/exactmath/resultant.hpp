#pragma once

#include "folint/exactmath/matrix.hpp"
#include "folint/exactmath/number_field.hpp"

namespace folint {

/// Polynomial in an outer variable with coefficients in Q[inner].
using BiPoly = UniPoly<QPoly>;

/// Sylvester matrix of f, g taken with formal degrees m >= deg f, n >= deg g.
template <class S>
DenseMatrix<S> sylvester_matrix(const UniPoly<S>& f, int m, const UniPoly<S>& g, int n) {
  const int size = m + n;
  DenseMatrix<S> s(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) s(i, j) = S(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coeff(n - j);
  return s;
}

/// Res(f, g) over a field, as the Sylvester determinant.
template <class S>
S resultant(const UniPoly<S>& f, const UniPoly<S>& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
  if (f.degree() + g.degree() == 0) return S(1);
  return determinant_generic(sylvester_matrix(f, f.degree(), g, g.degree()));
}

/// Res(f, g) over Q by fraction-free elimination.
Rational resultant(const QPoly& f, const QPoly& g);

/// Resultant with respect to the outer variable; a polynomial in the inner
/// one. Computed by evaluation at integer points and interpolation.
QPoly resultant(const BiPoly& f, const BiPoly& g);

/// Content (monic gcd of the coefficients) of a polynomial over K[inner].
template <class S>
UniPoly<S> content(const UniPoly<UniPoly<S>>& f) {
  UniPoly<S> c;
  for (const auto& k : f.coeffs()) {
    c = gcd(c, k);
    if (c.degree() == 0) break;
  }
  return c;
}

template <class S>
UniPoly<UniPoly<S>> primitive_part(const UniPoly<UniPoly<S>>& f) {
  if (f.is_zero()) return f;
  const UniPoly<S> c = content(f);
  std::vector<UniPoly<S>> out;
  for (const auto& k : f.coeffs()) out.push_back(exact_quotient(k, c));
  return UniPoly<UniPoly<S>>(std::move(out));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, without division in the coefficient ring.
template <class S>
UniPoly<UniPoly<S>> pseudo_remainder(UniPoly<UniPoly<S>> a, const UniPoly<UniPoly<S>>& b) {
  using P = UniPoly<UniPoly<S>>;
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-division by zero");
  const int db = b.degree();
  const UniPoly<S> lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const UniPoly<S> la = a.leading();
    a = a.scaled(lb) - P::monomial(la, shift) * b;
  }
  return a;
}

/// Gcd in K[inner][outer] by the primitive remainder sequence. Normalized so
/// the leading coefficient of the leading coefficient is 1.
template <class S>
UniPoly<UniPoly<S>> bivariate_gcd(UniPoly<UniPoly<S>> a, UniPoly<UniPoly<S>> b) {
  using P = UniPoly<UniPoly<S>>;
  if (a.is_zero() && b.is_zero()) return P();
  if (a.is_zero()) std::swap(a, b);
  UniPoly<S> c = b.is_zero() ? content(a) : gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (!b.is_zero() && b.degree() > a.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    P r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  P g = b.is_zero() ? a : P(UniPoly<S>(S(1)));
  g = g.scaled(c);
  const S lead = g.leading().leading();
  return g.scaled(UniPoly<S>(S(1) / lead));
}

}  // namespace folint
