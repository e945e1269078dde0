#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folint/exactmath/factor.hpp"
#include "folint/forms/oneform.hpp"

namespace folint {

/// A plane foliation: a normalized projective 1-form and its degree.
class Foliation {
 public:
  /// Divides out gcd(A, B, C) and checks the Euler condition.
  static Foliation make(KOneForm form);
  static Foliation make(const QOneForm& form) { return make(to_field_form(form)); }

  const KOneForm& form() const { return form_; }
  int degree() const { return degree_; }
  /// The factor removed at construction, or 1.
  const KMultiPoly& removed_factor() const { return removed_; }
  bool has_rational_coefficients() const;
  /// Throws Unsupported if some coefficient lies outside Q.
  QOneForm rational_form() const;

  static KOneForm to_field_form(const QOneForm& w) { return {to_field(w.A), to_field(w.B), to_field(w.C)}; }

 private:
  KOneForm form_;
  KMultiPoly removed_;
  int degree_ = 0;
};

struct EigenPair {
  long delta = 0;
  long rho = 0;
  bool non_reduced() const { return delta > 0 && rho > 0; }
  friend bool operator==(const EigenPair& a, const EigenPair& b) { return a.delta == b.delta && a.rho == b.rho; }
};

/// Eigenvalue data of a 2x2 linear part J at a singular point.
struct EigenData {
  FieldElement trace, det;
  std::optional<FieldElement> s;       // T^2 / D
  std::optional<EigenPair> pair;       // absent: irrational (or non-real) ratio
  std::optional<FieldElement> discriminant;  // s (s - 4)
};

/// Classifies J = [[j00, j01], [j10, j11]] (Jacobian of the local vector
/// field (-b, a)). Throws SingularJacobian when det J = 0.
EigenData eigen_ratio(const std::array<std::array<FieldElement, 2>, 2>& J);

/// Local 1-form a du + b dv at a point, coordinates in slots (0, 1).
struct LocalForm {
  KMultiPoly a, b;
};

/// Jacobian of (-b, a) at the origin.
std::array<std::array<FieldElement, 2>, 2> linear_part(const LocalForm& w);

/// Colength of (a, b) at the origin; 1 when the Jacobian is invertible.
int milnor_at(const LocalForm& w, int jet_cap = 20);

/// One Galois conjugacy class of singular points.
struct SingularClass {
  Chart chart = Chart::Z;
  FieldPtr field;                       // generated by the coordinates; null for Q
  std::array<FieldElement, 3> point;    // representative, last nonzero coordinate 1
  int size = 1;                         // number of conjugate points
  int milnor = 1;
  std::optional<EigenData> eigen;       // set when milnor == 1

  bool non_reduced() const { return eigen && eigen->pair && eigen->pair->non_reduced(); }
  bool irrational() const { return eigen && !eigen->pair; }
  /// The chart 1-form translated to the representative.
  LocalForm local_form(const Foliation& f) const;
  /// Affine coordinates of the representative in its chart.
  std::array<FieldElement, 2> affine() const;
};

struct SingularLocus {
  std::vector<SingularClass> classes;
  int weighted_milnor() const;
  int non_reduced_count() const;
  int reduced_count() const;
};

struct LocusOptions {
  int jet_cap = 20;
  FactorOptions factor;
};

/// All singular points, grouped in conjugacy classes, with Milnor numbers
/// and eigenvalue data.
SingularLocus singular_locus(const Foliation& f, const LocusOptions& options = {});

/// Throws DegenerateFoliation unless every Milnor number is 1 and the
/// weighted count is r^2 + r + 1.
void check_nondegenerate(const SingularLocus& locus, int r);

/// Fails (false) iff r + 1 > n, which rules out a rational first integral.
inline bool cota_test(int r, int n) { return r + 1 <= n; }

/// Text for a projective point, e.g. "(t : 0 : 1)".
std::string render_point(const std::array<FieldElement, 3>& p, const std::string& generator = "t");

}  // namespace folint
