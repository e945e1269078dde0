#pragma once

#include <vector>

#include "folint/resolution/blowup.hpp"

namespace folint {

struct InfinitelyNearPoint {
  int level = 0;
  BlowupStep step;   // blowup centered at the previous point; unused at level 0
  EigenPair pair;    // eigenvalues of the transformed foliation here
  int multiplicity = 1;
};

/// Chain of infinitely near points over a non-reduced singularity, with the
/// multiplicities of the base points of (u^rho, v^delta).
struct Cluster {
  Chart chart = Chart::Z;
  FieldPtr field;
  std::array<FieldElement, 3> origin;
  std::vector<InfinitelyNearPoint> chain;
  bool dicritical_end = true;  // the blowup after the last point is dicritical

  const EigenPair& pair() const { return chain.front().pair; }
  std::vector<int> multiplicities() const;
};

/// Multiplicities of the base points of (u^rho, v^delta): with
/// rho = q delta + s, delta repeated q times, then (delta, s).
std::vector<int> euclid_multiplicities(long rho, long delta);

/// Cluster of a non-reduced singular class, located by blowing up the
/// foliation along the eigendirection of the smaller eigenvalue.
Cluster foliation_cluster(const Foliation& f, const SingularClass& p);

/// Same, for a local 1-form with a non-reduced singularity at the origin.
Cluster local_cluster(const LocalForm& w, const EigenPair& pair);

}  // namespace folint
