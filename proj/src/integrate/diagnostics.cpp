#include "folint/integrate/diagnostics.hpp"

namespace folint {

namespace {

KMultiPoly local_germ(const QMultiPoly& H, const Cluster& cl) {
  const auto slots = chart_slots(cl.chart);
  return translate_to_origin(chart_restrict(to_field(H), cl.chart), cl.origin[static_cast<size_t>(slots[0])],
                             cl.origin[static_cast<size_t>(slots[1])]);
}

// Multiple components of H, as one form (1 if H is squarefree).
QMultiPoly repeated_part(const QMultiPoly& H) {
  return homogeneous_gcd(homogeneous_gcd(H, H.derivative(0)), homogeneous_gcd(H.derivative(1), H.derivative(2)));
}

bool reduced_at(const QMultiPoly& repeated, const Cluster& cl) {
  return repeated.degree() <= 0 || !repeated.eval<FieldElement>(cl.origin).is_zero();
}

std::string pair_type(const EigenPair& p, int k) {
  return "S(" + std::to_string(p.delta) + "," + std::to_string(p.rho) + "," + std::to_string(2 * k) + ")";
}

}  // namespace

bool ConditionD::pass() const {
  for (const auto& p : points)
    if (!p.pass()) return false;
  return true;
}

ConditionD verify_condition_d(const PencilCandidate& c, const std::vector<Cluster>& clusters, int jet_cap) {
  if (c.basis.size() != 2) throw Error(ErrorKind::InvalidArgument, "condition (d) needs a pencil");
  const QMultiPoly& F = c.basis[0];
  const QMultiPoly& G = c.basis[1];
  // the basis itself, then F + cG, F - cG for growing c
  std::vector<std::pair<QMultiPoly, QMultiPoly>> pairs{{F, G}};
  for (long m = 1; m <= 5; ++m) pairs.push_back({F + G.scaled(Rational(m)), F - G.scaled(Rational(m))});
  // members of a pencil without fixed part share no component, so the
  // product is reduced at p iff both members are
  std::vector<std::pair<QMultiPoly, QMultiPoly>> repeated;
  size_t chosen = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    repeated.push_back({repeated_part(pairs[i].first), repeated_part(pairs[i].second)});
    bool ok = true;
    for (const auto& cl : clusters)
      if (!reduced_at(repeated[i].first, cl) || !reduced_at(repeated[i].second, cl)) {
        ok = false;
        break;
      }
    if (ok) {
      chosen = i;
      break;
    }
  }
  ConditionD out;
  out.member1 = pairs[chosen].first;
  out.member2 = pairs[chosen].second;
  const auto& [rep1, rep2] = repeated[chosen];
  for (size_t i = 0; i < clusters.size(); ++i) {
    const Cluster& cl = clusters[i];
    PointConditionD pt;
    pt.point = render_point(cl.origin);
    pt.k = c.solution.k.at(i);
    pt.pair = cl.pair();
    pt.type = pair_type(pt.pair, pt.k);
    const KMultiPoly h1 = local_germ(out.member1, cl), h2 = local_germ(out.member2, cl);
    const KMultiPoly prod = h1 * h2;
    pt.equisingular = equisingular(h1, h2, cl);
    pt.reduced = reduced_at(rep1, cl) && reduced_at(rep2, cl);
    try {
      pt.milnor = germ_milnor(prod, jet_cap);
      pt.tjurina = germ_tjurina(prod, jet_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIsolated) throw;
    }
    if (pt.reduced) {
      const TypeCheck t = type_check_S(prod, pt.pair.delta, pt.pair.rho, 2L * pt.k, jet_cap);
      pt.type_match = t.match;
      if (!t.match && pt.failure.empty()) pt.failure = "type: " + t.reason;
    }
    if (!pt.equisingular) pt.failure = "germs are not equisingular";
    else if (!pt.reduced) pt.failure = "product of the germs is not reduced";
    else if (pt.milnor < 0 || pt.tjurina < 0) pt.failure = "colength did not stabilize";
    else if (pt.milnor != pt.tjurina) pt.failure = "Milnor and Tjurina numbers differ";
    out.points.push_back(std::move(pt));
  }
  return out;
}

std::vector<PointConditionE> verify_condition_e(const PencilCandidate& c, const std::vector<SingularClass>& reduced) {
  if (c.basis.size() != 2) throw Error(ErrorKind::InvalidArgument, "condition (e) needs a pencil");
  const KMultiPoly F = to_field(c.basis[0]), G = to_field(c.basis[1]);
  std::vector<PointConditionE> out;
  for (const auto& cls : reduced) {
    const FieldElement fp = F.eval<FieldElement>(cls.point), gp = G.eval<FieldElement>(cls.point);
    if (fp.is_zero() && gp.is_zero())
      throw Error(ErrorKind::BasePointCollision, "reduced point " + render_point(cls.point) + " lies on every member");
    KMultiPoly member = F.scaled(gp) - G.scaled(fp);
    member = member.scaled(member.terms().begin()->second.inverse());
    PointConditionE e;
    e.point = render_point(cls.point);
    e.member = render(member);
    e.pass = true;
    for (int i = 0; i < 3; ++i)
      if (!member.derivative(i).eval<FieldElement>(cls.point).is_zero()) e.pass = false;
    if (!e.pass) e.failure = "member through the point is smooth there";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace folint
