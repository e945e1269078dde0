#pragma once

#include <vector>

#include "folint/exactmath/number_field.hpp"

namespace folint {

struct FactorOptions {
  /// Inputs of larger degree fail with FactorDegreeCap.
  int degree_cap = 64;
};

struct PolyFactor {
  QPoly factor;  // monic, irreducible over Q
  int multiplicity = 1;
};

/// Factorization over Q into monic irreducibles with multiplicities; the
/// product equals f up to a rational unit. Sorted by (degree, coefficients).
std::vector<PolyFactor> univariate_factor(const QPoly& f, const FactorOptions& options = {});

/// Rational roots of f (distinct, ascending).
std::vector<Rational> rational_roots(const QPoly& f);

}  // namespace folint
