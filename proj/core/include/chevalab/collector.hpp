#pragma once
#include <map>
#include <utility>
#include <vector>

#include "chevalab/adjoint.hpp"
#include "chevalab/poly.hpp"

namespace chevalab {

// One inserted factor of a commutator relation: x_root(c * t^i * u^j).
struct CommTerm {
  int root;
  long long c;
  int i, j;
};

// Symbolic words in positive root elements x_gamma(f), f a polynomial over
// F_p, and their normal form under collection from the left.
class Collector {
 public:
  using Letter = std::pair<int, Poly>;

  Collector(const RootSystem& rs, int p) : rs_(rs), adj_(rs), p_(p) {}

  const RootSystem& roots() const { return rs_; }
  const AdjointRep& adjoint() const { return adj_; }
  int characteristic() const { return p_; }

  // x_b(u) x_a(t) = x_a(t) x_b(u) * prod of the returned terms, in order;
  // a, b positive with a before b canonically.
  const std::vector<CommTerm>& comm_template(int a, int b) const;

  // Rewrite a word of positive-root letters into canonical ascending order.
  std::vector<Letter> collect(std::vector<Letter> word, size_t max_steps = 1 << 20) const;

 private:
  const RootSystem& rs_;
  AdjointRep adj_;
  int p_;
  mutable std::map<std::pair<int, int>, std::vector<CommTerm>> cache_;
};

}  // namespace chevalab
