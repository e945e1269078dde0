#include "folint/foliation/foliation.hpp"

#include <algorithm>

#include "folint/foliation/local_algebra.hpp"

namespace folint {

Foliation Foliation::make(KOneForm form) {
  if (form.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero 1-form");
  Foliation f;
  f.removed_ = normalize_gcd(form);
  EulerResult e = euler_check(form.A, form.B, form.C);
  if (!e.valid)
    throw Error(ErrorKind::EulerViolation, "X*A + Y*B + Z*C is not zero; surviving monomial " + render_monomial(*e.witness));
  f.form_ = std::move(form);
  f.degree_ = foliation_degree(f.form_);
  return f;
}

bool Foliation::has_rational_coefficients() const {
  return folint::has_rational_coefficients(form_.A) && folint::has_rational_coefficients(form_.B) &&
         folint::has_rational_coefficients(form_.C);
}

QOneForm Foliation::rational_form() const { return {to_rational(form_.A), to_rational(form_.B), to_rational(form_.C)}; }

EigenData eigen_ratio(const std::array<std::array<FieldElement, 2>, 2>& J) {
  EigenData out;
  out.trace = J[0][0] + J[1][1];
  out.det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  if (out.det.is_zero()) throw Error(ErrorKind::SingularJacobian, "linear part is singular");
  FieldElement s = out.trace * out.trace / out.det;
  out.s = s;
  out.discriminant = s * (s - FieldElement(4));
  if (!s.is_rational()) return out;
  const Rational sr = s.rational_value();
  auto root = rational_sqrt(sr * (sr - 4));
  if (!root) return out;
  const Rational x = (sr - 2 + *root) / 2;  // eigenvalue ratio; the other root is 1/x
  Integer p = abs(x.get_num()), q = x.get_den();
  if (!p.fits_slong_p() || !q.fits_slong_p()) throw Error(ErrorKind::Unsupported, "eigenvalue ratio too large");
  const long lo = std::min(p.get_si(), q.get_si()), hi = std::max(p.get_si(), q.get_si());
  out.pair = EigenPair{sgn(x) > 0 ? lo : -lo, hi};
  return out;
}

std::array<std::array<FieldElement, 2>, 2> linear_part(const LocalForm& w) {
  return {{{-w.b.coeff({1, 0, 0}), -w.b.coeff({0, 1, 0})}, {w.a.coeff({1, 0, 0}), w.a.coeff({0, 1, 0})}}};
}

int milnor_at(const LocalForm& w, int jet_cap) {
  if (!w.a.constant_term().is_zero() || !w.b.constant_term().is_zero()) return 0;
  auto J = linear_part(w);
  if (!(J[0][0] * J[1][1] - J[0][1] * J[1][0]).is_zero()) return 1;
  return colength(std::vector<KMultiPoly>{w.a, w.b}, jet_cap);
}

std::array<FieldElement, 2> SingularClass::affine() const {
  const auto s = chart_slots(chart);
  return {point[static_cast<size_t>(s[0])], point[static_cast<size_t>(s[1])]};
}

LocalForm SingularClass::local_form(const Foliation& f) const {
  const auto s = chart_slots(chart);
  const auto p = affine();
  KMultiPoly a = chart_restrict(f.form()[s[0]], chart);
  KMultiPoly b = chart_restrict(f.form()[s[1]], chart);
  return {translate_to_origin(a, p[0], p[1]), translate_to_origin(b, p[0], p[1])};
}

int SingularLocus::weighted_milnor() const {
  int total = 0;
  for (const auto& c : classes) total += c.size * c.milnor;
  return total;
}

int SingularLocus::non_reduced_count() const {
  int n = 0;
  for (const auto& c : classes)
    if (c.non_reduced()) n += c.size;
  return n;
}

int SingularLocus::reduced_count() const {
  int n = 0;
  for (const auto& c : classes)
    if (c.eigen && !c.non_reduced()) n += c.size;
  return n;
}

namespace {

using KPoly = UniPoly<FieldElement>;

// p(w0, y) as a polynomial in y, for p in slots (w, y) = (0, 1).
KPoly specialize_first(const BiPoly& p_in_y, const FieldElement& w0) {
  std::vector<FieldElement> c;
  for (const auto& coeff : p_in_y.coeffs()) c.push_back(coeff.eval<FieldElement>(w0));
  return KPoly(std::move(c));
}

// Presents the class field with a coordinate as generator when possible.
void beautify(SingularClass& c) {
  if (!c.field) return;
  for (size_t i = 0; i < 3; ++i) {
    if (c.point[i].is_rational()) continue;
    auto rep = represent_with_generator(c.point[i]);
    if (!rep) continue;
    for (auto& x : c.point) x = rep->rewrite(x);
    c.field = rep->field;
    return;
  }
}

std::vector<SingularClass> affine_classes(const QMultiPoly& a, const QMultiPoly& b, const LocusOptions& options) {
  using P = QMultiPoly;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long s = attempt % 2 == 1 ? (attempt + 1) / 2 : -(attempt / 2);
    // x = w - s*y
    const std::array<P, 3> sub{P::var(0) - P::var(1).scaled(Rational(s)), P::var(1), P(Rational(0))};
    const BiPoly as = to_bivariate(a.substitute(sub), 1, 0);
    const BiPoly bs = to_bivariate(b.substitute(sub), 1, 0);
    const QPoly R = resultant(as, bs);
    if (R.is_zero()) throw Error(ErrorKind::DegenerateFoliation, "singular locus is not finite");
    if (R.degree() == 0) return {};
    std::vector<SingularClass> out;
    bool separated = true;
    for (const auto& pf : univariate_factor(R, options.factor)) {
      const QPoly& q = pf.factor;
      FieldPtr K;
      FieldElement w0;
      if (q.degree() == 1) {
        w0 = FieldElement(-q.coeff(0));
      } else {
        K = NumberField::make(q);
        w0 = FieldElement::generator(K);
      }
      const KPoly ha = specialize_first(as, w0), hb = specialize_first(bs, w0);
      if (ha.is_zero() && hb.is_zero()) throw Error(ErrorKind::DegenerateFoliation, "singular locus contains a line");
      const KPoly h = gcd(ha, hb);
      if (h.degree() <= 0) continue;
      const KPoly hs = squarefree_part(h);
      if (hs.degree() > 1) {
        separated = false;
        break;
      }
      const FieldElement y0 = -hs.coeff(0) / hs.coeff(1);
      SingularClass c;
      c.chart = Chart::Z;
      c.field = K;
      c.size = q.degree();
      c.point = {w0 - FieldElement(Rational(s)) * y0, y0, FieldElement(1)};
      out.push_back(std::move(c));
    }
    if (separated) return out;
  }
  throw Error(ErrorKind::Unsupported, "no separating linear form found for the singular locus");
}

}  // namespace

SingularLocus singular_locus(const Foliation& f, const LocusOptions& options) {
  if (!f.has_rational_coefficients())
    throw Error(ErrorKind::Unsupported, "singular locus of a foliation with coefficients outside Q");
  const QOneForm w = f.rational_form();
  SingularLocus locus;

  const QMultiPoly a = chart_restrict(w.A, Chart::Z), b = chart_restrict(w.B, Chart::Z);
  if (affine_gcd(a, b).degree() > 0) throw Error(ErrorKind::DegenerateFoliation, "singular locus contains a curve");
  locus.classes = affine_classes(a, b, options);

  // Points (x : 1 : 0).
  auto at_infinity = [](const QMultiPoly& p) {
    return to_univariate(chart_restrict(p, Chart::Y).specialize(1, Rational(0)), 0);
  };
  QPoly g = gcd(gcd(at_infinity(w.A), at_infinity(w.B)), at_infinity(w.C));
  if (g.is_zero()) throw Error(ErrorKind::DegenerateFoliation, "the line Z = 0 is singular");
  if (g.degree() > 0) {
    for (const auto& pf : univariate_factor(g, options.factor)) {
      SingularClass c;
      c.chart = Chart::Y;
      c.size = pf.factor.degree();
      if (c.size == 1) {
        c.point = {FieldElement(-pf.factor.coeff(0)), FieldElement(1), FieldElement(0)};
      } else {
        c.field = NumberField::make(pf.factor);
        c.point = {FieldElement::generator(c.field), FieldElement(1), FieldElement(0)};
      }
      locus.classes.push_back(std::move(c));
    }
  }
  // (1 : 0 : 0).
  const std::array<Rational, 3> e0{Rational(1), Rational(0), Rational(0)};
  if (is_zero(w.A.eval(e0)) && is_zero(w.B.eval(e0)) && is_zero(w.C.eval(e0))) {
    SingularClass c;
    c.chart = Chart::X;
    c.point = {FieldElement(1), FieldElement(0), FieldElement(0)};
    locus.classes.push_back(std::move(c));
  }

  for (auto& c : locus.classes) {
    beautify(c);
    LocalForm lf = c.local_form(f);
    c.milnor = milnor_at(lf, options.jet_cap);
    if (c.milnor == 1) c.eigen = eigen_ratio(linear_part(lf));
  }
  std::stable_sort(locus.classes.begin(), locus.classes.end(), [](const SingularClass& x, const SingularClass& y) {
    if (x.chart != y.chart) return chart_index(x.chart) > chart_index(y.chart);
    if (x.size != y.size) return x.size < y.size;
    return render_point(x.point) < render_point(y.point);
  });
  return locus;
}

void check_nondegenerate(const SingularLocus& locus, int r) {
  for (const auto& c : locus.classes)
    if (c.milnor != 1)
      throw Error(ErrorKind::DegenerateFoliation,
                  "Milnor number " + std::to_string(c.milnor) + " at " + render_point(c.point));
  const int expected = r * r + r + 1;
  if (locus.weighted_milnor() != expected)
    throw Error(ErrorKind::DegenerateFoliation, "weighted Milnor count " + std::to_string(locus.weighted_milnor()) +
                                                    " differs from r^2 + r + 1 = " + std::to_string(expected));
}

std::string render_point(const std::array<FieldElement, 3>& p, const std::string& generator) {
  return "(" + to_string(p[0], generator) + " : " + to_string(p[1], generator) + " : " + to_string(p[2], generator) +
         ")";
}

}  // namespace folint
