#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folint/integrate/linear_system.hpp"
#include "folint/resolution/germ.hpp"

namespace folint {

/// Sub-checks of (d) at one non-reduced class.
struct PointConditionD {
  std::string point;
  int k = 1;
  EigenPair pair;
  bool equisingular = false;
  bool reduced = false;
  int milnor = -1, tjurina = -1;
  bool type_match = false;
  std::string type;     // e.g. "S(1,1,6)"
  std::string failure;  // first failed sub-check, empty if all pass
  bool pass() const { return failure.empty(); }
};

struct ConditionD {
  QMultiPoly member1, member2;  // the two pencil members examined
  std::vector<PointConditionD> points;
  bool pass() const;
};

/// Germs of two general members of the pencil at each non-reduced class.
ConditionD verify_condition_d(const PencilCandidate& c, const std::vector<Cluster>& clusters, int jet_cap = kGermJetCap);

struct PointConditionE {
  std::string point;
  std::string member;   // G(p) F - F(p) G, rendered
  bool pass = false;
  std::string failure;
};

/// At each reduced point, the member through it is singular there.
/// Throws BasePointCollision if the point lies on every member.
std::vector<PointConditionE> verify_condition_e(const PencilCandidate& c, const std::vector<SingularClass>& reduced);

}  // namespace folint
