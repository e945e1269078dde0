#include "folint/exactmath/number_field.hpp"

#include <algorithm>

#include "folint/exactmath/factor.hpp"
#include "folint/exactmath/matrix.hpp"

namespace folint {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw Error(ErrorKind::InvalidArgument, "not a rational number: " + text);
  if (sgn(r.get_den()) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::shared_ptr<const NumberField> NumberField::make(const QPoly& minimal_polynomial) {
  if (minimal_polynomial.degree() < 1)
    throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have positive degree");
  if (minimal_polynomial.leading() != 1)
    throw Error(ErrorKind::InvalidArgument, "minimal polynomial must be monic");
  if (minimal_polynomial.degree() > 1) {
    auto factors = univariate_factor(minimal_polynomial);
    if (factors.size() != 1 || factors.front().multiplicity != 1) {
      bool squarefree = std::all_of(factors.begin(), factors.end(),
                                    [](const auto& f) { return f.multiplicity == 1; });
      throw Error(squarefree ? ErrorKind::ReducibleExtension : ErrorKind::NotSquarefreeExtension,
                  "minimal polynomial is not irreducible over Q");
    }
  }
  return std::make_shared<const NumberField>(Token{}, minimal_polynomial);
}

QPoly NumberField::reduce(const QPoly& p) const {
  if (p.degree() < degree()) return p;
  return p % minpoly_;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (field_ && static_cast<int>(coords_.size()) > field_->degree())
    *this = from_poly(field_, QPoly(coords_));
  if (field_ && field_->degree() == 1) field_.reset();
  trim();
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->degree() == 1) return FieldElement(-field->minimal_polynomial().coeff(0));
  return FieldElement(field, {Rational(0), Rational(1)});
}

FieldElement FieldElement::from_poly(const FieldPtr& field, const QPoly& p) {
  FieldElement out;
  if (!field || field->degree() == 1) {
    out.coords_ = {field ? p(-field->minimal_polynomial().coeff(0)) : p.coeff(0)};
    out.trim();
    return out;
  }
  QPoly r = field->reduce(p);
  out.field_ = field;
  out.coords_ = r.coeffs();
  out.trim();
  return out;
}

void FieldElement::trim() {
  while (!coords_.empty() && sgn(coords_.back()) == 0) coords_.pop_back();
}

std::vector<Rational> FieldElement::coords() const {
  std::vector<Rational> c(coords_);
  c.resize(static_cast<size_t>(degree()), Rational(0));
  return c;
}

QPoly FieldElement::as_poly() const { return QPoly(coords_); }

bool FieldElement::is_zero() const { return coords_.empty(); }

bool FieldElement::is_rational() const { return coords_.size() <= 1; }

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "field element is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

FieldPtr FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ == b.field_ || a.field_->same_as(*b.field_)) return a.field_;
  throw Error(ErrorKind::MixedFields, "operands belong to different number fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  r.field_ = FieldElement::common_field(a, b);
  r.coords_.resize(std::max(a.coords_.size(), b.coords_.size()));
  for (size_t i = 0; i < a.coords_.size(); ++i) r.coords_[i] = a.coords_[i];
  for (size_t i = 0; i < b.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  r.trim();
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldPtr f = FieldElement::common_field(a, b);
  if (a.is_zero() || b.is_zero()) {
    FieldElement z;
    z.field_ = f;
    return z;
  }
  if (a.coords_.size() == 1 || b.coords_.size() == 1) {
    const bool a_scalar = a.coords_.size() == 1;
    const Rational& s = a_scalar ? a.coords_[0] : b.coords_[0];
    FieldElement r(a_scalar ? b : a);
    r.field_ = f;
    for (auto& c : r.coords_) c *= s;
    return r;
  }
  return FieldElement::from_poly(f, a.as_poly() * b.as_poly());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (coords_.size() == 1) {
    FieldElement r;
    r.field_ = field_;
    r.coords_ = {1 / coords_[0]};
    return r;
  }
  auto [g, s, t] = ext_gcd(as_poly(), field_->minimal_polynomial());
  (void)t;
  // g is 1 since the minimal polynomial is irreducible and x != 0.
  return from_poly(field_, s);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.coords_.size() > 1 || b.coords_.size() > 1) {
    if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  }
  return a.coords_ == b.coords_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  const size_t n = std::max(a.coords_.size(), b.coords_.size());
  for (size_t i = 0; i < n; ++i) {
    Rational x = i < a.coords_.size() ? a.coords_[i] : Rational(0);
    Rational y = i < b.coords_.size() ? b.coords_[i] : Rational(0);
    if (x != y) return x < y;
  }
  return false;
}

std::string to_string(const FieldElement& x, const std::string& generator) {
  if (x.is_rational()) return x.rational_value().get_str();
  std::string out;
  const auto c = x.coords();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Rational& v = c[static_cast<size_t>(i)];
    if (sgn(v) == 0) continue;
    Rational mag = abs(v);
    if (out.empty()) {
      if (sgn(v) < 0) out += "-";
    } else {
      out += sgn(v) < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? generator : generator + "^" + std::to_string(i));
    if (i == 0)
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

namespace {

// Coordinates of 1, x, ..., x^(e-1) as columns, plus x^e.
std::pair<DenseMatrix<Rational>, std::vector<Rational>> power_matrix(const FieldElement& x) {
  const int e = x.degree();
  DenseMatrix<Rational> m(e, e);
  FieldElement p(Rational(1));
  for (int j = 0; j < e; ++j) {
    const auto c = p.coords();
    for (int i = 0; i < e; ++i) m(i, j) = i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : Rational(0);
    p = p * x;
  }
  auto last = p.coords();
  last.resize(static_cast<size_t>(e), Rational(0));
  return {m, last};
}

}  // namespace

QPoly minimal_polynomial(const FieldElement& x) {
  if (x.is_rational()) return QPoly({-x.rational_value(), Rational(1)});
  // First linear dependence among 1, x, x^2, ...
  const int e = x.degree();
  std::vector<std::vector<Rational>> powers;
  FieldElement p(Rational(1));
  for (int k = 0; k <= e; ++k) {
    auto c = p.coords();
    c.resize(static_cast<size_t>(e), Rational(0));
    powers.push_back(c);
    DenseMatrix<Rational> m(e, k + 1);
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i < e; ++i) m(i, j) = powers[static_cast<size_t>(j)][static_cast<size_t>(i)];
    auto kernel = nullspace(m);
    if (!kernel.empty()) {
      // kernel vector normalized with first nonzero = 1; rescale to make it monic in x^k.
      const auto& v = kernel.front();
      Rational lead = v(k);
      std::vector<Rational> coeffs(static_cast<size_t>(k) + 1);
      for (int j = 0; j <= k; ++j) coeffs[static_cast<size_t>(j)] = v(j) / lead;
      return QPoly(coeffs);
    }
    p = p * x;
  }
  return x.field()->minimal_polynomial();
}

std::optional<Representation> represent_with_generator(const FieldElement& x) {
  if (!x.field() || x.is_rational()) return std::nullopt;
  const int e = x.degree();
  auto [m, last] = power_matrix(x);
  if (rank(m) != e) return std::nullopt;
  DenseMatrix<Rational> minv = inverse(m);
  // x^e = sum c_i x^i  =>  minpoly = t^e - sum c_i t^i
  std::vector<Rational> c(static_cast<size_t>(e) + 1);
  for (int i = 0; i < e; ++i) {
    Rational s = 0;
    for (int k = 0; k < e; ++k) s += minv(i, k) * last[static_cast<size_t>(k)];
    c[static_cast<size_t>(i)] = -s;
  }
  c[static_cast<size_t>(e)] = 1;
  Representation rep;
  rep.field = NumberField::make(QPoly(c));
  // old basis element t^i has old coords e_i; new coords = minv * e_i = column i of minv.
  for (int i = 0; i < e; ++i) {
    std::vector<Rational> col(static_cast<size_t>(e));
    for (int k = 0; k < e; ++k) col[static_cast<size_t>(k)] = minv(k, i);
    rep.old_basis_in_new.push_back(col);
  }
  return rep;
}

FieldElement Representation::rewrite(const FieldElement& old) const {
  const auto c = old.coords();
  const int e = field->degree();
  if (old.is_rational()) return FieldElement(old.rational_value());
  std::vector<Rational> out(static_cast<size_t>(e), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    for (int k = 0; k < e; ++k) out[static_cast<size_t>(k)] += c[i] * old_basis_in_new[i][static_cast<size_t>(k)];
  }
  return FieldElement(field, out);
}

}  // namespace folint
