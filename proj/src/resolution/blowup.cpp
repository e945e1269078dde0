#include "folint/resolution/blowup.hpp"

namespace folint {

namespace {

using P = KMultiPoly;

std::array<P, 3> images(const BlowupStep& step) {
  const P s = P::var(0), t = P::var(1);
  if (step.vertical) return {s * t, s, P::var(2)};
  return {s, s * t + s.scaled(step.slope), P::var(2)};
}

}  // namespace

BlowupStep step_towards(const FieldElement& v0, const FieldElement& v1) {
  if (!v0.is_zero()) return {false, v1 / v0};
  if (v1.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero direction");
  return {true, FieldElement(0)};
}

KMultiPoly pull_back(const KMultiPoly& f, const BlowupStep& step) { return f.substitute(images(step)); }

KMultiPoly strict_transform(const KMultiPoly& f, const BlowupStep& step, int m) {
  return pull_back(f, step).shifted(0, -m);
}

BlownUpForm blow_up(const LocalForm& w, const BlowupStep& step) {
  const P a = pull_back(w.a, step), b = pull_back(w.b, step);
  const P s = P::var(0), t = P::var(1);
  P A, B;
  if (step.vertical) {
    A = t * a + b;
    B = s * a;
  } else {
    A = a + (t + P(step.slope)) * b;
    B = s * b;
  }
  if (A.is_zero() && B.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "blowup of the zero form");
  int m = -1;
  for (const P* p : {&A, &B})
    if (!p->is_zero()) m = m < 0 ? p->valuation_in(0) : std::min(m, p->valuation_in(0));
  BlownUpForm out;
  out.form = {A.shifted(0, -m), B.shifted(0, -m)};
  out.dicritical = !out.form.b.specialize(0, FieldElement(0)).is_zero();
  return out;
}

}  // namespace folint
