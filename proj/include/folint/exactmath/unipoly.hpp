#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "folint/error.hpp"
#include "folint/exactmath/rational.hpp"

namespace folint {

namespace detail {
template <class T>
bool coeff_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// `S` is any exact scalar with value semantics, `S(0)`/`S(1)` and the usual
/// ring operators; division-based members (`divmod`, `gcd`, ...) additionally
/// need `S` to be a field. `UniPoly<UniPoly<S>>` is used for bivariate work.
template <class S>
class UniPoly {
 public:
  using Scalar = S;

  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(const S& constant) : c_{constant} { trim(); }  // NOLINT implicit

  static UniPoly monomial(const S& coeff, int power) {
    std::vector<S> c(static_cast<size_t>(power) + 1, S(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(S(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }

  S coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return S(0);
    return c_[static_cast<size_t>(i)];
  }
  const S& leading() const { return c_.back(); }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + T(*it);
    }
    return acc;
  }
  S operator()(const S& x) const { return eval<S>(x); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    std::vector<S> r(c_);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly scaled(const S& s) const {
    std::vector<S> r(c_);
    for (auto& v : r) v = v * s;
    return UniPoly(std::move(r));
  }

  /// Composition p(q(x)).
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UniPoly(*it);
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return scaled(S(1) / leading());
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

template <class S>
bool is_zero(const UniPoly<S>& p) {
  return p.is_zero();
}

/// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<S>(), a};
  std::vector<S> rem(a.coeffs());
  std::vector<S> quo(static_cast<size_t>(a.degree() - b.degree() + 1), S(0));
  const S inv_lead = S(1) / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const S f = rem[static_cast<size_t>(i)] * inv_lead;
    if (is_zero(f)) continue;
    quo[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] = rem[static_cast<size_t>(i - db + j)] - f * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly<S>(std::move(quo)), UniPoly<S>(std::move(rem))};
}

template <class S>
UniPoly<S> operator%(const UniPoly<S>& a, const UniPoly<S>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class S>
UniPoly<S> exact_quotient(const UniPoly<S>& a, const UniPoly<S>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class S>
UniPoly<S> gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    UniPoly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
template <class S>
std::tuple<UniPoly<S>, UniPoly<S>, UniPoly<S>> ext_gcd(const UniPoly<S>& a, const UniPoly<S>& b) {
  UniPoly<S> r0 = a, r1 = b;
  UniPoly<S> s0(S(1)), s1;
  UniPoly<S> t0, t1(S(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<S> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly<S> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const S inv = S(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Yun's square-free decomposition over a characteristic-zero field.
/// Returns pairs (f_i, i) with f = lc * prod f_i^i, each f_i monic square-free
/// and pairwise coprime; constant factors are omitted.
template <class S>
std::vector<std::pair<UniPoly<S>, int>> squarefree_decomposition(const UniPoly<S>& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<std::pair<UniPoly<S>, int>> out;
  if (f.degree() == 0) return out;
  UniPoly<S> fm = f.monic();
  UniPoly<S> d = fm.derivative();
  UniPoly<S> a = gcd(fm, d);
  UniPoly<S> b = exact_quotient(fm, a);
  UniPoly<S> c = exact_quotient(d, a);
  UniPoly<S> dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly<S> g = gcd(b, dd);
    if (g.degree() > 0) out.emplace_back(g, i);
    UniPoly<S> nb = exact_quotient(b, g);
    c = exact_quotient(dd, g);
    b = std::move(nb);
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

/// Product of the distinct monic irreducible factors.
template <class S>
UniPoly<S> squarefree_part(const UniPoly<S>& f) {
  if (f.is_zero()) return f;
  if (f.degree() <= 0) return UniPoly<S>(S(1));
  return exact_quotient(f.monic(), gcd(f, f.derivative()));
}

}  // namespace folint
