#include "folint/resolution/cluster.hpp"

#include <numeric>

namespace folint {

std::vector<int> Cluster::multiplicities() const {
  std::vector<int> m;
  for (const auto& q : chain) m.push_back(q.multiplicity);
  return m;
}

std::vector<int> euclid_multiplicities(long rho, long delta) {
  if (rho <= 0 || delta <= 0) throw Error(ErrorKind::InvalidArgument, "eigenvalues must be positive");
  if (std::gcd(rho, delta) != 1) throw Error(ErrorKind::NotCoprime, "eigenvalues are not coprime");
  std::vector<int> out;
  while (delta > 0) {
    for (long q = rho / delta; q > 0; --q) out.push_back(static_cast<int>(delta));
    const long s = rho % delta;
    rho = delta;
    delta = s;
  }
  return out;
}

namespace {

EigenPair ordered(long x, long y) { return {std::min(x, y), std::max(x, y)}; }

// Eigendirection of J for the eigenvalue lambda.
BlowupStep eigen_direction(const std::array<std::array<FieldElement, 2>, 2>& J, const FieldElement& lambda) {
  FieldElement v0 = J[0][1], v1 = lambda - J[0][0];
  if (v0.is_zero() && v1.is_zero()) {
    v0 = lambda - J[1][1];
    v1 = J[1][0];
  }
  if (v0.is_zero() && v1.is_zero()) throw Error(ErrorKind::AmbiguousChain, "scalar linear part off the end of the chain");
  return step_towards(v0, v1);
}

// Eigenpair at the origin if it is a simple singular point.
std::optional<EigenPair> pair_at_origin(const LocalForm& w) {
  if (!w.a.constant_term().is_zero() || !w.b.constant_term().is_zero()) return std::nullopt;
  const auto J = linear_part(w);
  if ((J[0][0] * J[1][1] - J[0][1] * J[1][0]).is_zero()) return std::nullopt;
  return eigen_ratio(J).pair;
}

}  // namespace

Cluster local_cluster(const LocalForm& w0, const EigenPair& pair) {
  if (!pair.non_reduced()) throw Error(ErrorKind::InvalidArgument, "cluster of a reduced singularity");
  EigenPair cur = ordered(pair.delta, pair.rho);
  const std::vector<int> mults = euclid_multiplicities(cur.rho, cur.delta);
  Cluster c;
  c.chain.push_back({0, {}, cur, mults[0]});
  LocalForm w = w0;
  while (!(cur.delta == 1 && cur.rho == 1)) {
    const auto J = linear_part(w);
    const FieldElement T = J[0][0] + J[1][1];
    const FieldElement small = T * FieldElement(Rational(cur.delta, cur.delta + cur.rho));
    const BlowupStep step = eigen_direction(J, small);
    const BlownUpForm next = blow_up(w, step);
    const EigenPair expected = ordered(cur.rho - cur.delta, cur.delta);
    const auto found = pair_at_origin(next.form);
    if (next.dicritical || !found || !(*found == expected))
      throw Error(ErrorKind::AmbiguousChain, "no non-reduced point of type (" + std::to_string(expected.delta) + ", " +
                                                 std::to_string(expected.rho) + ") on the exceptional line");
    const auto other = pair_at_origin(blow_up(w, eigen_direction(J, T - small)).form);
    if (other && other->non_reduced())
      throw Error(ErrorKind::AmbiguousChain, "two non-reduced points on the exceptional line");
    w = next.form;
    cur = expected;
    const int level = static_cast<int>(c.chain.size());
    if (static_cast<size_t>(level) >= mults.size()) throw Error(ErrorKind::AmbiguousChain, "chain longer than expected");
    c.chain.push_back({level, step, cur, mults[static_cast<size_t>(level)]});
  }
  if (c.chain.size() != mults.size()) throw Error(ErrorKind::AmbiguousChain, "chain shorter than expected");
  c.dicritical_end = blow_up(w, BlowupStep{}).dicritical;
  return c;
}

Cluster foliation_cluster(const Foliation& f, const SingularClass& p) {
  if (!p.non_reduced()) throw Error(ErrorKind::InvalidArgument, "cluster of a reduced singularity");
  Cluster c = local_cluster(p.local_form(f), *p.eigen->pair);
  c.chart = p.chart;
  c.field = p.field;
  c.origin = p.point;
  return c;
}

}  // namespace folint
