#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chevalab/lie_type.hpp"

namespace chevalab {

// Integer coefficient vector of a root over the simple basis.
using Coeffs = std::vector<int>;
// Weight in fundamental-weight coordinates.
using Weight = std::vector<int>;

// An irreducible root system.  Roots are stored as coefficient vectors over
// the simple roots; positive roots come first in canonical order (increasing
// height, ties broken lexicographically), followed by the negatives in the
// mirrored order, so neg(i) == i + npos for i < npos.
class RootSystem {
 public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  int rank() const { return rank_; }
  int npos() const { return npos_; }
  int size() const { return 2 * npos_; }

  // cartan(i,j) = <alpha_i, alpha_j^vee>, 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // Minimal integral half-norms d_i = (alpha_i,alpha_i)/2.
  int d(int i) const { return d_[i]; }

  const Coeffs& root(int id) const { return roots_[id]; }
  int id(const Coeffs& c) const;  // -1 if not a root
  bool is_root(const Coeffs& c) const { return id(c) >= 0; }
  int neg(int id) const { return id < npos_ ? id + npos_ : id - npos_; }
  bool is_positive(int id) const { return id < npos_; }
  int height(int id) const;  // signed
  int simple(int i) const { return simple_[i]; }

  // (gamma,gamma)/2 in the normalization fixed by d().
  int halfnorm(int id) const { return halfnorm_[id]; }
  // Symmetric bilinear form on coefficient vectors, same normalization.
  long long form(const Coeffs& a, const Coeffs& b) const;
  // <beta, gamma^vee> for a root gamma given by id.
  int pair_root(const Coeffs& beta, int gamma) const;
  // <w, gamma^vee> for a weight in fundamental coordinates.
  int pair_weight(const Weight& w, int gamma) const;
  // Fundamental coordinates of a root.
  Weight to_weight(const Coeffs& c) const;
  // gamma^vee expanded over the simple coroots (integral).
  Coeffs coroot(int gamma) const;

  int highest_root() const { return npos_ - 1; }
  Weight rho() const { return Weight(rank_, 1); }

  // Digit-string label, e.g. "23465432"; negatives carry a leading '-'.
  std::string label(int id) const;
  int from_label(const std::string& s) const;  // throws on non-roots

  // Simple reflection s_i acting on a root id; returns the image id.
  int reflect_simple(int i, int id) const;
  // s_i acting on fundamental coordinates.
  Weight reflect_simple(int i, const Weight& w) const;
  // Reflection in an arbitrary root gamma acting on a root id.
  int reflect(int gamma, int id) const;

 private:
  void build_cartan();
  void generate_roots();

  LieType type_;
  int rank_ = 0;
  int npos_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<Coeffs> roots_;
  std::vector<int> halfnorm_;
  std::vector<int> simple_;
  std::map<Coeffs, int> index_;
};

// Number of positive roots of a simple type, by the classification.
int positive_root_count(LieType t);

}  // namespace chevalab
