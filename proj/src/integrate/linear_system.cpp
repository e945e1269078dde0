#include "folint/integrate/linear_system.hpp"

namespace folint {

std::string candidate_status_name(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::WrongDimension: return "wrong_dimension";
    case CandidateStatus::NotCoprime: return "not_coprime";
    case CandidateStatus::WedgeNonzero: return "wedge_nonzero";
    case CandidateStatus::Certified: return "certified";
  }
  return "?";
}

ExactMatrix cluster_conditions(const DiophantineSolution& s, const std::vector<Cluster>& clusters, int d) {
  if (s.k.size() != clusters.size()) throw Error(ErrorKind::InvalidArgument, "one value of k per cluster expected");
  const std::vector<Exponent> monos = monomials_of_degree(d);
  const size_t n = monos.size();
  std::vector<std::vector<Rational>> rows;
  for (size_t c = 0; c < clusters.size(); ++c) {
    const Cluster& cl = clusters[c];
    const auto slots = chart_slots(cl.chart);
    const FieldElement p0 = cl.origin[static_cast<size_t>(slots[0])], p1 = cl.origin[static_cast<size_t>(slots[1])];
    std::vector<KMultiPoly> h(n);
    for (size_t j = 0; j < n; ++j)
      h[j] = translate_to_origin(chart_restrict(KMultiPoly::monomial(FieldElement(1), monos[j]), cl.chart), p0, p1);
    const int e = cl.field ? cl.field->degree() : 1;
    int previous = 0;
    for (size_t q = 0; q < cl.chain.size(); ++q) {
      if (q > 0)
        for (auto& hj : h) hj = strict_transform(hj, cl.chain[q].step, previous);
      const int M = s.k[c] * cl.chain[q].multiplicity;
      for (int deg = 0; deg < M; ++deg)
        for (int i = deg; i >= 0; --i) {
          const Exponent mono{i, deg - i, 0};
          std::vector<std::vector<Rational>> block(static_cast<size_t>(e), std::vector<Rational>(n, Rational(0)));
          bool any = false;
          for (size_t j = 0; j < n; ++j) {
            const FieldElement v = h[j].coeff(mono);
            if (v.is_zero()) continue;
            any = true;
            const auto co = v.coords();
            for (size_t r = 0; r < co.size() && r < block.size(); ++r) block[r][j] = co[r];
          }
          if (!any) continue;
          for (auto& row : block) rows.push_back(std::move(row));
        }
      for (auto& hj : h) hj = hj - hj.truncated(M);
      previous = M;
    }
  }
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

QMultiPoly form_from_coefficients(const ExactVector& v, int d) {
  const std::vector<Exponent> monos = monomials_of_degree(d);
  QMultiPoly f;
  for (size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], v(static_cast<Eigen::Index>(j)));
  return f;
}

PencilCandidate linear_system(const DiophantineSolution& s, const std::vector<Cluster>& clusters, int d) {
  PencilCandidate c;
  c.solution = s;
  const ExactMatrix m = cluster_conditions(s, clusters, d);
  const auto kernel = nullspace(m);
  c.conditions_rank = static_cast<long>(m.cols()) - static_cast<long>(kernel.size());
  for (const auto& v : kernel) c.basis.push_back(form_from_coefficients(v, d));
  return c;
}

WedgeOutcome certify_wedge(const QMultiPoly& F, const QMultiPoly& G, const QOneForm& omega) {
  const TwoForm<Rational> w = wedge(pencil_differential(F, G), omega);
  WedgeOutcome out;
  const std::pair<const char*, const QMultiPoly*> parts[] = {{"dX^dY", &w.xy}, {"dY^dZ", &w.yz}, {"dX^dZ", &w.xz}};
  for (const auto& [name, p] : parts) {
    if (p->is_zero()) continue;
    out.component = name;
    out.monomial = p->terms().begin()->first;
    out.coefficient = p->terms().begin()->second;
    return out;
  }
  out.zero = true;
  return out;
}

PencilCandidate evaluate_candidate(const DiophantineSolution& s, const std::vector<Cluster>& clusters,
                                   const QOneForm& omega) {
  PencilCandidate c = linear_system(s, clusters, s.d);
  if (c.basis.size() != 2) return c;
  try {
    c.wedge = certify_wedge(c.basis[0], c.basis[1], omega);
    c.status = c.wedge->zero ? CandidateStatus::Certified : CandidateStatus::WedgeNonzero;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCoprime) throw;
    c.status = CandidateStatus::NotCoprime;
  }
  return c;
}

}  // namespace folint
