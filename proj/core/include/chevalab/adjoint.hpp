#pragma once
#include <map>
#include <vector>

#include "chevalab/chevalley.hpp"
#include "chevalab/root_system.hpp"

namespace chevalab {

// Row-sparse integer matrix.
struct IntSparse {
  int n = 0;
  std::vector<std::vector<std::pair<int, long long>>> rows;

  explicit IntSparse(int size = 0) : n(size), rows(size) {}
  void add(int r, int c, long long v);
  IntSparse operator*(const IntSparse& o) const;
  bool is_zero() const;
  // divide every entry by k, failing if not exact
  IntSparse div_exact(long long k) const;
};

// The adjoint module in the Chevalley basis.  Basis order: e_gamma for every
// root id (positives then negatives, as in RootSystem), then h_1..h_rank.
class AdjointRep {
 public:
  explicit AdjointRep(const RootSystem& rs) : rs_(rs), cb_(rs) {}

  const RootSystem& roots() const { return rs_; }
  const ChevalleyBasis& cb() const { return cb_; }
  int dim() const { return rs_.size() + rs_.rank(); }
  int e_index(int root_id) const { return root_id; }
  int h_index(int i) const { return rs_.size() + i; }

  // bracket of e_gamma with a basis vector, as a sparse column
  std::vector<std::pair<int, long long>> ad_column(int gamma, int basis_index) const;
  IntSparse ad(int gamma) const;
  // [D_1, D_2, ...]: D_k = (ad e_gamma)^k / k!, listed until the powers vanish
  const std::vector<IntSparse>& divided_powers(int gamma) const;

  // weight of a basis vector under h_i (the diagonal Cartan action)
  long long h_action(int i, int basis_index) const;

 private:
  const RootSystem& rs_;
  ChevalleyBasis cb_;
  mutable std::map<int, std::vector<IntSparse>> cache_;
};

}  // namespace chevalab
