#pragma once
#include <map>
#include <utility>

#include "chevalab/root_system.hpp"

namespace chevalab {

// Structure constants of the Chevalley basis: [e_a, e_b] = N(a,b) e_{a+b}
// when a+b is a root.  Fixed by the extraspecial-pair convention: for each
// positive non-simple gamma, the pair (alpha, beta), alpha + beta = gamma
// with alpha least in canonical order, gets N(alpha,beta) = +(q+1).
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& roots() const { return rs_; }

  int N(int a, int b) const;

  // number of roots b - a, b - 2a, ... (steps down the a-string through b)
  int string_down(int a, int b) const;

  // the distinguished decomposition of a positive root of height >= 2
  std::pair<int, int> extraspecial(int gamma) const;

 private:
  int compute(int a, int b) const;

  const RootSystem& rs_;
  mutable std::map<std::pair<int, int>, int> memo_;
};

}  // namespace chevalab
