#pragma once

#include <memory>
#include <string>
#include <vector>

#include "folint/exactmath/rational.hpp"
#include "folint/exactmath/unipoly.hpp"

namespace folint {

using QPoly = UniPoly<Rational>;

/// Simple algebraic extension Q(t) = Q[t]/(m(t)) with m monic irreducible.
class NumberField {
 public:
  /// Verifies that `minimal_polynomial` is monic and irreducible over Q.
  static std::shared_ptr<const NumberField> make(const QPoly& minimal_polynomial);

  int degree() const { return minpoly_.degree(); }
  const QPoly& minimal_polynomial() const { return minpoly_; }

  /// Reduces a polynomial in the generator modulo the minimal polynomial.
  QPoly reduce(const QPoly& p) const;

  bool same_as(const NumberField& other) const { return minpoly_ == other.minpoly_; }

 private:
  struct Token {};

 public:
  NumberField(Token, QPoly minpoly) : minpoly_(std::move(minpoly)) {}

 private:
  QPoly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField in the power basis 1, t, ..., t^(e-1).
///
/// An element without a field is a plain rational; it mixes freely with
/// elements of any field. Elements of two different fields do not mix.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Rational& r) : coords_{r} { trim(); }  // NOLINT implicit
  FieldElement(long v) : coords_{Rational(v)} { trim(); } // NOLINT implicit
  FieldElement(int v) : coords_{Rational(v)} { trim(); } // NOLINT implicit
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement generator(const FieldPtr& field);
  static FieldElement from_poly(const FieldPtr& field, const QPoly& p);

  const FieldPtr& field() const { return field_; }
  int degree() const { return field_ ? field_->degree() : 1; }

  /// Power-basis coordinates, padded to the field degree.
  std::vector<Rational> coords() const;
  /// The representative polynomial in the generator.
  QPoly as_poly() const;

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  FieldElement inverse() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Lexicographic comparison of coordinates; a total order for sorting.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  static FieldPtr common_field(const FieldElement& a, const FieldElement& b);
  void trim();

  FieldPtr field_;
  std::vector<Rational> coords_;  // trailing zeros trimmed
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

/// Renders as a polynomial in `generator`, e.g. "-t - 1" or "3/2".
std::string to_string(const FieldElement& x, const std::string& generator = "t");

/// Minimal polynomial over Q of an element, by linear dependence of powers.
QPoly minimal_polynomial(const FieldElement& x);

/// A new presentation of x's field with x as generator, if x generates it.
/// `rewrite` maps elements of the old field to the new presentation.
struct Representation {
  FieldPtr field;
  std::vector<std::vector<Rational>> old_basis_in_new;  // images of t^i
  FieldElement rewrite(const FieldElement& old) const;
};
std::optional<Representation> represent_with_generator(const FieldElement& x);

}  // namespace folint
