#include "folint/exactmath/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace folint {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31, ascending coefficients, trimmed.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, u64 p) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "modular polynomial division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  const u64 inv = mod_inv(b.back(), p);
  ModPoly q(static_cast<size_t>(deg(a) - deg(b) + 1), 0);
  for (int i = deg(a); i >= deg(b); --i) {
    const u64 f = a[static_cast<size_t>(i)] * inv % p;
    q[static_cast<size_t>(i - deg(b))] = f;
    if (!f) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto& x = a[static_cast<size_t>(i - deg(b) + j)];
      x = (x + p - f * b[static_cast<size_t>(j)] % p) % p;
    }
  }
  a.resize(static_cast<size_t>(deg(b)));
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly rem(const ModPoly& a, const ModPoly& b, u64 p) { return divmod(a, b, p).second; }

ModPoly monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = mod_inv(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// Returns (s, t) with s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = mod_inv(r0.back(), p);
  for (auto& x : s0) x = x * inv % p;
  for (auto& x : t0) x = x * inv % p;
  trim(s0);
  trim(t0);
  return {s0, t0};
}

ModPoly derivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  trim(d);
  return d;
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = rem(base, m, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product of
// irreducibles of degree d.
void equal_degree_split(const ModPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    ModPoly a(static_cast<size_t>(deg(f)));
    for (auto& x : a) x = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly g = gcd(a, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    ModPoly b = sub(powmod(a, e, f, p), ModPoly{1}, p);
    g = gcd(b, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(monic(divmod(f, g, p).first, p), d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed + p);
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer pz(static_cast<unsigned long>(p));
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = powmod(h, pz, f, p);
    ModPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(monic(f, p));
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void trimz(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly mulz(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trimz(r);
  return r;
}

void reduce_mod(ZPoly& a, const Integer& m) {
  for (auto& x : a) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  trimz(a);
}

void symmetric_mod(ZPoly& a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& x : a) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  trimz(a);
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly a) {
  Integer c = content(a);
  if (sgn(c) == 0) return a;
  if (sgn(a.back()) < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<ZPoly> divide_exact(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    const Integer& top = a[static_cast<size_t>(i)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer f = top / b.back();
    const size_t shift = static_cast<size_t>(i) - (b.size() - 1);
    q[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  trimz(a);
  if (!a.empty()) return std::nullopt;
  trimz(q);
  return q;
}

ModPoly to_mod(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  const Integer pz(static_cast<unsigned long>(p));
  for (size_t i = 0; i < a.size(); ++i) {
    Integer v;
    mpz_mod(v.get_mpz_t(), a[i].get_mpz_t(), pz.get_mpz_t());
    r[i] = v.get_ui();
  }
  trim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

// Lifts monic F = u*w (mod p), u, w monic, to a factorization mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const ModPoly& u0, const ModPoly& w0, u64 p, int k) {
  auto [s, t] = bezout(u0, w0, p);
  ZPoly u = from_mod(u0), w = from_mod(w0);
  Integer q(static_cast<unsigned long>(p));
  for (int j = 1; j < k; ++j) {
    ZPoly uw = mulz(u, w);
    ZPoly e(std::max(F.size(), uw.size()), Integer(0));
    for (size_t i = 0; i < F.size(); ++i) e[i] = F[i];
    for (size_t i = 0; i < uw.size(); ++i) e[i] -= uw[i];
    for (auto& x : e) x /= q;  // exact
    trimz(e);
    ModPoly ep = to_mod(e, p);
    auto [q1, tau] = divmod(mul(ep, t, p), u0, p);
    ModPoly sigma = add(mul(ep, s, p), mul(q1, w0, p), p);
    sigma = rem(sigma, w0, p);
    ZPoly dt = from_mod(tau), ds = from_mod(sigma);
    for (size_t i = 0; i < dt.size(); ++i) {
      if (i >= u.size()) u.resize(i + 1, Integer(0));
      u[i] += q * dt[i];
    }
    for (size_t i = 0; i < ds.size(); ++i) {
      if (i >= w.size()) w.resize(i + 1, Integer(0));
      w[i] += q * ds[i];
    }
    q *= static_cast<unsigned long>(p);
  }
  return {u, w};
}

std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<ModPoly>& factors, u64 p, int k, const Integer& pk) {
  if (factors.size() == 1) {
    ZPoly f = F;
    reduce_mod(f, pk);
    return {f};
  }
  ModPoly rest{1};
  for (size_t i = 1; i < factors.size(); ++i) rest = mul(rest, factors[i], p);
  auto [u, w] = hensel_pair(F, factors[0], rest, p, k);
  reduce_mod(u, pk);
  reduce_mod(w, pk);
  std::vector<ModPoly> tail(factors.begin() + 1, factors.end());
  std::vector<ZPoly> out{u};
  auto lifted = hensel_lift(w, tail, p, k, pk);
  out.insert(out.end(), lifted.begin(), lifted.end());
  return out;
}

bool is_probable_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree(ZPoly g) {
  if (g.size() <= 2) return {g};
  const Integer lc = g.back();
  // Choose a good prime with few modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (u64 p = 3; good < 6; p += 2) {
    if (!is_probable_prime(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ModPoly gp = to_mod(g, p);
    if (deg(gcd(gp, derivative(gp, p), p)) != 0) continue;
    auto fac = factor_mod_p(monic(gp, p), p);
    ++good;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {g};
  }
  const u64 p = best_p;

  // Mignotte-style bound on factor coefficients, times |lc|.
  const size_t n = g.size() - 1;
  Integer norm2 = 0;
  for (const auto& x : g) norm2 += x * x;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(lc);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  bound *= 2;
  Integer pk(static_cast<unsigned long>(p));
  int k = 1;
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  // Monic image of g modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly F = g;
  for (auto& x : F) x *= lc_inv;
  reduce_mod(F, pk);
  std::vector<ZPoly> lifted = hensel_lift(F, best, p, k, pk);

  // Recombination by subsets of increasing size.
  std::vector<ZPoly> out;
  ZPoly cur = g;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly h{cur.back()};
      for (size_t i : idx) {
        h = mulz(h, lifted[i]);
        reduce_mod(h, pk);
      }
      symmetric_mod(h, pk);
      h = primitive(h);
      if (auto q = divide_exact(cur, h)) {
        out.push_back(h);
        cur = *q;
        std::vector<ZPoly> remaining;
        for (size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
        lifted = std::move(remaining);
        found = true;
        break;
      }
      // Next combination.
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == lifted.size() - s + static_cast<size_t>(i)) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) out.push_back(primitive(cur));
  return out;
}

ZPoly to_primitive_integer(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = f.coeffs()[i].get_num() * (l / f.coeffs()[i].get_den());
  return primitive(z);
}

QPoly to_monic_rational(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return QPoly(c).monic();
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

std::vector<PolyFactor> univariate_factor(const QPoly& f, const FactorOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  if (f.degree() > options.degree_cap)
    throw Error(ErrorKind::FactorDegreeCap,
                "polynomial of degree " + std::to_string(f.degree()) + " exceeds factor degree cap " +
                    std::to_string(options.degree_cap));
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (part.degree() == 1) {
      out.push_back({part, mult});
      continue;
    }
    for (const auto& z : factor_squarefree(to_primitive_integer(part))) out.push_back({to_monic_rational(z), mult});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor != b.factor) return poly_less(a.factor, b.factor);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::vector<Rational> rational_roots(const QPoly& f) {
  std::vector<Rational> roots;
  for (const auto& pf : univariate_factor(f))
    if (pf.factor.degree() == 1) roots.push_back(-pf.factor.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace folint
