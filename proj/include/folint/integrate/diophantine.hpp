#pragma once

#include <vector>

namespace folint {

/// Eigenvalue data of one conjugacy class of non-reduced points.
struct EigenClass {
  long delta = 1, rho = 1;
  int size = 1;
};

/// d and a value of k for each class, in the order of the input classes.
struct DiophantineSolution {
  int d = 0;
  std::vector<int> k;
  friend bool operator==(const DiophantineSolution& a, const DiophantineSolution& b) {
    return a.d == b.d && a.k == b.k;
  }
};

/// All (d, k) with 1 <= d < t, k >= 1, solving
///   d^2      = sum size * k^2 * rho * delta
///   d (r+2)  = sum size * k * (rho + delta)
/// sorted by d, then lexicographically by k.
std::vector<DiophantineSolution> solve_diophantine(const std::vector<EigenClass>& classes, int r, int t);

}  // namespace folint
