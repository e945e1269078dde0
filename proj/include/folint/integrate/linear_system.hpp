#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folint/exactmath/matrix.hpp"
#include "folint/integrate/diophantine.hpp"
#include "folint/resolution/cluster.hpp"

namespace folint {

/// Rows are linear conditions on the coefficients of a degree-d form, in
/// the order of monomials_of_degree(d). At each chain point q the virtual
/// transform must have order >= k * m_q. One representative per class;
/// each condition over a field of degree e gives e rational rows.
ExactMatrix cluster_conditions(const DiophantineSolution& s, const std::vector<Cluster>& clusters, int d);

/// Form with the given coefficient vector.
QMultiPoly form_from_coefficients(const ExactVector& v, int d);

enum class CandidateStatus { WrongDimension, NotCoprime, WedgeNonzero, Certified };
std::string candidate_status_name(CandidateStatus s);

struct WedgeOutcome {
  bool zero = false;
  std::string component;   // "dX^dY", "dY^dZ" or "dX^dZ"
  Exponent monomial{0, 0, 0};
  Rational coefficient;
};

struct PencilCandidate {
  DiophantineSolution solution;
  std::vector<QMultiPoly> basis;
  long conditions_rank = 0;
  CandidateStatus status = CandidateStatus::WrongDimension;
  std::optional<WedgeOutcome> wedge;
};

/// Kernel of the conditions; the basis is kept whatever its dimension.
PencilCandidate linear_system(const DiophantineSolution& s, const std::vector<Cluster>& clusters, int d);

/// (G dF - F dG) ^ Omega. Throws NotCoprime, InhomogeneousInput, UnequalDegrees.
WedgeOutcome certify_wedge(const QMultiPoly& F, const QMultiPoly& G, const QOneForm& omega);

/// linear_system, then the wedge when the dimension is 2.
PencilCandidate evaluate_candidate(const DiophantineSolution& s, const std::vector<Cluster>& clusters,
                                   const QOneForm& omega);

}  // namespace folint
