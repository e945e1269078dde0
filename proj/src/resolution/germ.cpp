#include "folint/resolution/germ.hpp"

#include <algorithm>
#include <numeric>

#include "folint/foliation/local_algebra.hpp"

namespace folint {

namespace {

using P = KMultiPoly;
using KPoly = UniPoly<FieldElement>;

template <class S>
MultiPoly<S> gcd_all(const std::vector<MultiPoly<S>>& ps) {
  MultiPoly<S> g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p : affine_gcd(g, p);
  }
  return g;
}

template <class S>
MultiPoly<S> jacobian_gcd(const MultiPoly<S>& g) {
  return gcd_all(std::vector<MultiPoly<S>>{g, g.derivative(0), g.derivative(1)});
}

// h(1, t) for the lowest homogeneous part h of g.
KPoly dehomogenized_cone(const P& g, int m) {
  std::vector<FieldElement> c(static_cast<size_t>(m) + 1, FieldElement(0));
  const P h = g.homogeneous_part(m);
  for (const auto& [e, v] : h.terms()) c[static_cast<size_t>(e[1])] = v;
  return KPoly(std::move(c));
}

// The tangent line if the tangent cone is a single line.
std::optional<BlowupStep> single_tangent(const P& g) {
  const int m = g.order();
  if (m <= 0) return std::nullopt;
  const KPoly p = dehomogenized_cone(g, m);
  if (p.degree() == 0) return BlowupStep{true, FieldElement(0)};
  if (p.degree() != m) return std::nullopt;
  const FieldElement t0 = -p.coeff(m - 1) / (FieldElement(m) * p.coeff(m));
  const KPoly root({-t0, FieldElement(1)});
  KPoly q({p.coeff(m)});
  for (int i = 0; i < m; ++i) q = q * root;
  if (!(q == p)) return std::nullopt;
  // direction (1, t0) in (x, y)
  return BlowupStep{false, t0};
}

std::vector<P> transforms(const KMultiPoly& g, const Cluster& along) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero germ");
  std::vector<P> out{g};
  for (size_t i = 1; i < along.chain.size(); ++i) {
    const int m = std::max(0, out.back().order());
    out.push_back(strict_transform(out.back(), along.chain[i].step, m));
  }
  return out;
}

}  // namespace

int germ_milnor(const KMultiPoly& g, int jet_cap) {
  if (g.is_zero()) throw Error(ErrorKind::NonIsolated, "zero germ");
  return colength(std::vector<P>{g.derivative(0), g.derivative(1)}, jet_cap);
}

int germ_tjurina(const KMultiPoly& g, int jet_cap) {
  if (g.is_zero()) throw Error(ErrorKind::NonIsolated, "zero germ");
  return colength(std::vector<P>{g, g.derivative(0), g.derivative(1)}, jet_cap);
}

KMultiPoly reduced_polynomial(const KMultiPoly& g) {
  if (g.is_zero()) return g;
  return exact_divide(g, jacobian_gcd(g));
}

bool is_locally_reduced(const KMultiPoly& g) {
  if (g.is_zero()) return false;
  const int m = g.order();
  if (m <= 1) return true;
  const auto cone = tangent_cone_type(g);
  if (cone.size() == static_cast<size_t>(m)) return true;  // ordinary singularity
  if (has_rational_coefficients(g)) return !to_field(jacobian_gcd(to_rational(g))).constant_term().is_zero();
  return !jacobian_gcd(g).constant_term().is_zero();
}

std::vector<int> tangent_cone_type(const KMultiPoly& g) {
  const int m = g.order();
  if (m <= 0) return {};
  const KPoly p = dehomogenized_cone(g, m);
  std::vector<int> out;
  if (m > p.degree()) out.push_back(m - p.degree());  // root at infinity
  if (p.degree() > 0)
    for (const auto& [f, mult] : squarefree_decomposition(p))
      for (int i = 0; i < f.degree(); ++i) out.push_back(mult);
  std::sort(out.rbegin(), out.rend());
  return out;
}

NodalResult is_nodal(const KMultiPoly& g) {
  NodalResult out;
  if (g.is_zero()) return {false, 0, 0, "zero germ"};
  if (!g.constant_term().is_zero()) return {false, 0, 0, "does not pass through the origin"};
  // r_i = prod p^max(e - i, 0) over the irreducible factors p^e of g
  std::vector<P> r{g};
  while (r.back().degree() > 0) r.push_back(jacobian_gcd(r.back()));
  std::vector<P> q;  // q_i = prod over e >= i of p
  for (size_t i = 1; i < r.size(); ++i) q.push_back(exact_divide(r[i - 1], r[i]));
  q.push_back(P(FieldElement(1)));
  std::vector<std::pair<int, int>> branches;  // (exponent, order at the origin)
  int total_order = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i) {
    const P a = exact_divide(q[i], q[i + 1]);
    const int ord = a.order();
    if (ord > 0) {
      branches.push_back({static_cast<int>(i) + 1, ord});
      total_order += ord;
    }
  }
  if (total_order != 2) return {false, 0, 0, "reduced germ has multiplicity " + std::to_string(total_order)};
  if (tangent_cone_type(q.front()) != std::vector<int>{1, 1}) return {false, 0, 0, "tangent lines coincide"};
  if (branches.size() == 1) return {true, branches[0].first, branches[0].first, ""};
  const int n = std::min(branches[0].first, branches[1].first), m = std::max(branches[0].first, branches[1].first);
  return {true, n, m, ""};
}

std::vector<int> germ_mult_sequence(const KMultiPoly& g, const Cluster& along) {
  std::vector<int> out;
  for (const auto& t : transforms(g, along)) out.push_back(std::max(0, t.order()));
  return out;
}

TypeCheck type_check_S(const KMultiPoly& g, long a, long b, long k, int jet_cap) {
  if (a <= 0 || b <= 0 || k <= 0) throw Error(ErrorKind::InvalidArgument, "S(a, b, k) needs positive integers");
  if (std::gcd(a, b) != 1) throw Error(ErrorKind::NotCoprime, "a and b are not coprime");
  if (!is_locally_reduced(g)) throw Error(ErrorKind::NotReduced, "germ has a multiple component through the origin");
  TypeCheck out;
  out.milnor = germ_milnor(g, jet_cap);
  const long expected_mu = (k * a - 1) * (k * b - 1);
  if (out.milnor != expected_mu) {
    out.reason = "Milnor number " + std::to_string(out.milnor) + ", expected " + std::to_string(expected_mu);
    return out;
  }
  std::vector<int> expected = euclid_multiplicities(std::max(a, b), std::min(a, b));
  for (auto& m : expected) m *= static_cast<int>(k);
  P cur = g;
  bool has_e = false, satellite = false;
  for (size_t i = 0; i < expected.size(); ++i) {
    const int m = std::max(0, cur.order());
    out.multiplicities.push_back(m);
    if (m != expected[i]) {
      out.reason = "multiplicity " + std::to_string(m) + " at level " + std::to_string(i) + ", expected " +
                   std::to_string(expected[i]);
      return out;
    }
    if (i + 1 < expected.size()) {
      const auto step = single_tangent(cur);
      if (!step) {
        out.reason = "tangent cone at level " + std::to_string(i) + " is not a single line";
        return out;
      }
      satellite = step->vertical ? has_e : (step->slope.is_zero() && satellite);
      has_e = true;
      cur = strict_transform(cur, *step, m);
      continue;
    }
    if (tangent_cone_type(cur) != std::vector<int>(static_cast<size_t>(m), 1)) {
      out.reason = "tangent lines at the last point are not distinct";
      return out;
    }
    const P h = cur.homogeneous_part(m);
    if (has_e && h.coeff({0, m, 0}).is_zero()) {
      out.reason = "a branch is tangent to the last exceptional line";
      return out;
    }
    if (satellite && h.coeff({m, 0, 0}).is_zero()) {
      out.reason = "a branch is tangent to an earlier exceptional line";
      return out;
    }
  }
  out.match = true;
  return out;
}

bool equisingular(const KMultiPoly& g1, const KMultiPoly& g2, const Cluster& along) {
  const auto t1 = transforms(g1, along), t2 = transforms(g2, along);
  for (size_t i = 0; i < t1.size(); ++i)
    if (std::max(0, t1[i].order()) != std::max(0, t2[i].order())) return false;
  if (!is_locally_reduced(t1.back()) || !is_locally_reduced(t2.back())) return false;
  return tangent_cone_type(t1.back()) == tangent_cone_type(t2.back());
}

}  // namespace folint
