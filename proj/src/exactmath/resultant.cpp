#include "folint/exactmath/resultant.hpp"

namespace folint {

Rational resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
  if (f.degree() + g.degree() == 0) return 1;
  return determinant(sylvester_matrix(f, f.degree(), g, g.degree()));
}

namespace {

int inner_degree(const BiPoly& f) {
  int d = 0;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  QPoly out(dd[n - 1]);
  for (size_t k = n - 1; k-- > 0;) out = out * QPoly({-xs[k], Rational(1)}) + QPoly(dd[k]);
  return out;
}

}  // namespace

QPoly resultant(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of a zero polynomial");
  const int m = f.degree(), n = g.degree();
  if (m + n == 0) return QPoly(Rational(1));
  // Entries of the Sylvester matrix have inner degree <= inner_degree(f) or
  // inner_degree(g); n rows of f and m rows of g.
  const int bound = n * inner_degree(f) + m * inner_degree(g);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    const Rational x0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    std::vector<Rational> fc, gc;
    for (const auto& c : f.coeffs()) fc.push_back(c(x0));
    for (const auto& c : g.coeffs()) gc.push_back(c(x0));
    // Formal degrees keep the specialization exact when a leading term vanishes.
    const QPoly fv(fc), gv(gc);
    xs.push_back(x0);
    ys.push_back(determinant(sylvester_matrix(fv, m, gv, n)));
  }
  return interpolate(xs, ys);
}

}  // namespace folint
