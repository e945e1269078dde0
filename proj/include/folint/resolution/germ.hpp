#pragma once

#include <string>
#include <vector>

#include "folint/resolution/cluster.hpp"

namespace folint {

/// Local curve f(u, v) = 0 at the origin, u and v in slots (0, 1).
struct Germ {
  KMultiPoly f;
  std::string note;
};

constexpr int kGermJetCap = 24;

/// Colength of (f_u, f_v).
int germ_milnor(const KMultiPoly& g, int jet_cap = kGermJetCap);
/// Colength of (f, f_u, f_v).
int germ_tjurina(const KMultiPoly& g, int jet_cap = kGermJetCap);

/// g / gcd(g, g_u, g_v).
KMultiPoly reduced_polynomial(const KMultiPoly& g);
/// No multiple component of g passes through the origin.
bool is_locally_reduced(const KMultiPoly& g);

struct NodalResult {
  bool nodal = false;
  int n = 0, m = 0;
  std::string reason;
};
NodalResult is_nodal(const KMultiPoly& g);

/// Root multiplicities of the tangent cone (lowest homogeneous part),
/// sorted in decreasing order. Empty for a zero or unit germ.
std::vector<int> tangent_cone_type(const KMultiPoly& g);

/// Multiplicities of the successive strict transforms at the chain points.
std::vector<int> germ_mult_sequence(const KMultiPoly& g, const Cluster& along);

struct TypeCheck {
  bool match = false;
  std::string reason;
  int milnor = -1;
  std::vector<int> multiplicities;
};
/// Compares g with u^(ka) + v^(kb): Milnor number, multiplicities along
/// its own tangent chain, and transversality after the chain.
/// Throws NotReduced if g has a multiple component through the origin.
TypeCheck type_check_S(const KMultiPoly& g, long a, long b, long k, int jet_cap = kGermJetCap);

/// Same multiplicities along the cluster and the same tangent cone type
/// at its last point, both transforms reduced.
bool equisingular(const KMultiPoly& g1, const KMultiPoly& g2, const Cluster& along);

}  // namespace folint
