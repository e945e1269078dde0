#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "folint/error.hpp"
#include "folint/exactmath/number_field.hpp"
#include "folint/exactmath/resultant.hpp"

namespace folint {

/// Exponents of up to three variables. Projective polynomials use (X, Y, Z);
/// affine and local ones use the first two slots.
using Exponent = std::array<int, 3>;

inline int total(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order, largest first (X > Y > Z).
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total(a), db = total(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in three variables over an exact scalar S.
template <class S>
class MultiPoly {
 public:
  using Scalar = S;
  using Terms = std::map<Exponent, S, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const S& constant) { add_term({0, 0, 0}, constant); }  // NOLINT implicit

  static MultiPoly var(int i) { return monomial(S(1), unit(i)); }
  static MultiPoly monomial(const S& c, const Exponent& e) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
  }
  static Exponent unit(int i) {
    Exponent e{0, 0, 0};
    e[static_cast<size_t>(i)] = 1;
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }
  /// Lowest total degree of a term; -1 for zero.
  int order() const {
    int o = -1;
    for (const auto& [e, c] : terms_) o = o < 0 ? total(e) : std::min(o, total(e));
    return o;
  }
  int degree_in(int i) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(i)]);
    return d;
  }
  /// Largest k with var_i^k dividing the polynomial; 0 for zero.
  int valuation_in(int i) const {
    int v = -1;
    for (const auto& [e, c] : terms_) v = v < 0 ? e[static_cast<size_t>(i)] : std::min(v, e[static_cast<size_t>(i)]);
    return v < 0 ? 0 : v;
  }
  bool is_homogeneous() const {
    for (const auto& [e, c] : terms_)
      if (total(e) != degree()) return false;
    return true;
  }

  S coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }
  S constant_term() const { return coeff({0, 0, 0}); }

  void add_term(const Exponent& e, const S& c) {
    if (detail::coeff_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (detail::coeff_is_zero(it->second)) terms_.erase(it);
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const S& s) const {
    if (detail::coeff_is_zero(s)) return {};
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = c * s;
    return r;
  }

  MultiPoly pow(int n) const {
    MultiPoly r(S(1)), b(*this);
    while (n > 0) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  MultiPoly derivative(int i) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      const int k = e[static_cast<size_t>(i)];
      if (k == 0) continue;
      Exponent d = e;
      --d[static_cast<size_t>(i)];
      r.add_term(d, c * S(k));
    }
    return r;
  }

  /// Multiplies by x_i^k (k may be negative when every term allows it).
  MultiPoly shifted(int i, int k) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent d = e;
      d[static_cast<size_t>(i)] += k;
      if (d[static_cast<size_t>(i)] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in shift");
      r.terms_.emplace(d, c);
    }
    return r;
  }

  /// Terms of total degree exactly n.
  MultiPoly homogeneous_part(int n) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_)
      if (total(e) == n) r.terms_.emplace(e, c);
    return r;
  }
  /// Terms of total degree < n.
  MultiPoly truncated(int n) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_)
      if (total(e) < n) r.terms_.emplace(e, c);
    return r;
  }

  template <class T>
  T eval(const std::array<T, 3>& pt) const {
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = T(c);
      for (size_t i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * pt[i];
      acc = acc + m;
    }
    return acc;
  }

  /// Substitutes x_i -> images[i].
  MultiPoly substitute(const std::array<MultiPoly, 3>& images) const {
    std::array<std::vector<MultiPoly>, 3> powers;
    for (size_t i = 0; i < 3; ++i) {
      powers[i].push_back(MultiPoly(S(1)));
      powers[i].resize(static_cast<size_t>(std::max(0, degree_in(static_cast<int>(i)))) + 1);
      for (size_t k = 1; k < powers[i].size(); ++k) powers[i][k] = powers[i][k - 1] * images[i];
    }
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      MultiPoly m = powers[0][static_cast<size_t>(e[0])] * powers[1][static_cast<size_t>(e[1])];
      m = m * powers[2][static_cast<size_t>(e[2])];
      r += m.scaled(c);
    }
    return r;
  }

  /// Sets x_i to a constant.
  MultiPoly specialize(int i, const S& value) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent d = e;
      S v = c;
      for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) v = v * value;
      d[static_cast<size_t>(i)] = 0;
      r.add_term(d, v);
    }
    return r;
  }

  /// Homogenizes with x_i to total degree n (>= degree()).
  MultiPoly homogenized(int i, int n) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent d = e;
      d[static_cast<size_t>(i)] += n - total(e);
      r.terms_.emplace(d, c);
    }
    return r;
  }

  template <class T, class F>
  MultiPoly<T> map(F&& f) const {
    MultiPoly<T> r;
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

template <class S>
bool is_zero(const MultiPoly<S>& p) {
  return p.is_zero();
}

using QMultiPoly = MultiPoly<Rational>;
using KMultiPoly = MultiPoly<FieldElement>;

inline KMultiPoly to_field(const QMultiPoly& p) {
  return p.map<FieldElement>([](const Rational& c) { return FieldElement(c); });
}

/// Requires all coefficients rational; throws Unsupported otherwise.
QMultiPoly to_rational(const KMultiPoly& p);
bool has_rational_coefficients(const KMultiPoly& p);

/// View as a polynomial in x_outer with coefficients polynomials in x_inner;
/// other variables must not occur.
template <class S>
UniPoly<UniPoly<S>> to_bivariate(const MultiPoly<S>& p, int outer, int inner) {
  std::vector<std::vector<S>> rows(static_cast<size_t>(std::max(0, p.degree_in(outer) + 1)));
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < 3; ++i)
      if (i != outer && i != inner && e[static_cast<size_t>(i)] != 0)
        throw Error(ErrorKind::InvalidArgument, "unexpected variable in bivariate view");
    auto& row = rows[static_cast<size_t>(e[static_cast<size_t>(outer)])];
    const size_t k = static_cast<size_t>(e[static_cast<size_t>(inner)]);
    if (row.size() <= k) row.resize(k + 1, S(0));
    row[k] = c;
  }
  std::vector<UniPoly<S>> coeffs;
  for (auto& r : rows) coeffs.emplace_back(std::move(r));
  return UniPoly<UniPoly<S>>(std::move(coeffs));
}

template <class S>
MultiPoly<S> from_bivariate(const UniPoly<UniPoly<S>>& p, int outer, int inner) {
  MultiPoly<S> r;
  for (int i = 0; i <= p.degree(); ++i) {
    const UniPoly<S>& row = p.coeffs()[static_cast<size_t>(i)];
    for (int j = 0; j <= row.degree(); ++j) {
      Exponent e{0, 0, 0};
      e[static_cast<size_t>(outer)] = i;
      e[static_cast<size_t>(inner)] = j;
      r.add_term(e, row.coeffs()[static_cast<size_t>(j)]);
    }
  }
  return r;
}

/// Univariate view in x_i; other variables must not occur.
template <class S>
UniPoly<S> to_univariate(const MultiPoly<S>& p, int i) {
  std::vector<S> c(static_cast<size_t>(std::max(0, p.degree_in(i) + 1)), S(0));
  for (const auto& [e, v] : p.terms()) {
    if (total(e) != e[static_cast<size_t>(i)]) throw Error(ErrorKind::InvalidArgument, "not univariate");
    c[static_cast<size_t>(e[static_cast<size_t>(i)])] = v;
  }
  return UniPoly<S>(std::move(c));
}

template <class S>
MultiPoly<S> from_univariate(const UniPoly<S>& p, int i) {
  MultiPoly<S> r;
  for (int k = 0; k <= p.degree(); ++k) {
    Exponent e{0, 0, 0};
    e[static_cast<size_t>(i)] = k;
    r.add_term(e, p.coeffs()[static_cast<size_t>(k)]);
  }
  return r;
}

/// Gcd of two affine polynomials in x_0, x_1 (monic in a fixed normalization).
template <class S>
MultiPoly<S> affine_gcd(const MultiPoly<S>& a, const MultiPoly<S>& b) {
  return from_bivariate(bivariate_gcd(to_bivariate(a, 1, 0), to_bivariate(b, 1, 0)), 1, 0);
}

/// Gcd of homogeneous polynomials in X, Y, Z, normalized with leading
/// (grlex) coefficient 1; gcd(0, 0) = 0.
template <class S>
MultiPoly<S> homogeneous_gcd(const MultiPoly<S>& a, const MultiPoly<S>& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.scaled(S(1) / b.terms().begin()->second);
  if (b.is_zero()) return a.scaled(S(1) / a.terms().begin()->second);
  const int vz = std::min(a.valuation_in(2), b.valuation_in(2));
  MultiPoly<S> g = affine_gcd(a.specialize(2, S(1)), b.specialize(2, S(1)));
  MultiPoly<S> h = g.homogenized(2, g.degree()).shifted(2, vz);
  return h.scaled(S(1) / h.terms().begin()->second);
}

/// Exact division of polynomials in up to three variables; throws
/// InvalidArgument if b does not divide a.
template <class S>
MultiPoly<S> exact_divide(MultiPoly<S> a, const MultiPoly<S>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  MultiPoly<S> q;
  const auto& [lb_e, lb_c] = *b.terms().begin();
  const S inv = S(1) / lb_c;
  while (!a.is_zero()) {
    const auto [la_e, la_c] = *a.terms().begin();
    Exponent d{la_e[0] - lb_e[0], la_e[1] - lb_e[1], la_e[2] - lb_e[2]};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    MultiPoly<S> t = MultiPoly<S>::monomial(la_c * inv, d);
    q += t;
    a -= t * b;
  }
  return q;
}

/// Canonical text: graded-lex order, explicit '*', '^' exponents.
std::string render(const QMultiPoly& p, const std::array<std::string, 3>& names = {"X", "Y", "Z"});
/// Coefficients outside Q are printed in parentheses as polynomials in `generator`.
std::string render(const KMultiPoly& p, const std::array<std::string, 3>& names = {"X", "Y", "Z"},
                   const std::string& generator = "t");
std::string render_monomial(const Exponent& e, const std::array<std::string, 3>& names = {"X", "Y", "Z"});

/// All exponents of total degree d in grlex order (largest first).
std::vector<Exponent> monomials_of_degree(int d);

}  // namespace folint
