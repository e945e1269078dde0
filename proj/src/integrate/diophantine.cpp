#include "folint/integrate/diophantine.hpp"

#include "folint/error.hpp"

namespace folint {

namespace {

struct Search {
  const std::vector<EigenClass>& classes;
  std::vector<long long> rest1, rest2;  // contributions of classes i.. with k = 1
  std::vector<int> k;
  int d = 0;
  std::vector<DiophantineSolution>* out = nullptr;

  void run(size_t i, long long s1, long long s2) {
    if (i == classes.size()) {
      if (s1 == 0 && s2 == 0) out->push_back({d, k});
      return;
    }
    const EigenClass& c = classes[i];
    const long long l1 = static_cast<long long>(c.size) * (c.rho + c.delta);
    const long long l2 = static_cast<long long>(c.size) * c.rho * c.delta;
    for (long long kk = 1;; ++kk) {
      const long long a1 = kk * l1, a2 = kk * kk * l2;
      if (a1 + rest1[i + 1] > s1 || a2 + rest2[i + 1] > s2) break;
      k[i] = static_cast<int>(kk);
      run(i + 1, s1 - a1, s2 - a2);
    }
  }
};

}  // namespace

std::vector<DiophantineSolution> solve_diophantine(const std::vector<EigenClass>& classes, int r, int t) {
  for (const auto& c : classes)
    if (c.delta <= 0 || c.rho <= 0 || c.size <= 0)
      throw Error(ErrorKind::InvalidArgument, "eigenvalue data must be positive");
  std::vector<DiophantineSolution> out;
  if (classes.empty()) return out;
  const size_t n = classes.size();
  Search s{classes, std::vector<long long>(n + 1, 0), std::vector<long long>(n + 1, 0), std::vector<int>(n, 0)};
  for (size_t i = n; i-- > 0;) {
    s.rest1[i] = s.rest1[i + 1] + static_cast<long long>(classes[i].size) * (classes[i].rho + classes[i].delta);
    s.rest2[i] = s.rest2[i + 1] + static_cast<long long>(classes[i].size) * classes[i].rho * classes[i].delta;
  }
  s.out = &out;
  for (int d = 1; d < t; ++d) {
    s.d = d;
    s.run(0, static_cast<long long>(d) * (r + 2), static_cast<long long>(d) * d);
  }
  return out;
}

}  // namespace folint
