#pragma once

#include "folint/foliation/foliation.hpp"

namespace folint {

/// Blowup of the origin of local coordinates (x, y). The new coordinates
/// (s, t) sit in slots (0, 1) and the exceptional line is s = 0.
///   slope chart:    x = s,     y = s (t + slope)
///   vertical chart: x = s t,   y = s
struct BlowupStep {
  bool vertical = false;
  FieldElement slope;
};

/// The chart whose origin is the direction (v0, v1) != 0.
BlowupStep step_towards(const FieldElement& v0, const FieldElement& v1);

KMultiPoly pull_back(const KMultiPoly& f, const BlowupStep& step);

/// f o phi / s^m. Throws InvalidArgument if s^m does not divide f o phi.
KMultiPoly strict_transform(const KMultiPoly& f, const BlowupStep& step, int m);

struct BlownUpForm {
  LocalForm form;            // divided by the largest power of s
  bool dicritical = false;   // exceptional line not invariant
};

BlownUpForm blow_up(const LocalForm& w, const BlowupStep& step);

}  // namespace folint
