#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "chevalab/lie_type.hpp"
#include "chevalab/root_system.hpp"
#include "chevalab/weyl.hpp"

namespace chevalab {

using Int = boost::multiprecision::cpp_int;

// A (possibly virtual) character over a fixed product type: a finite
// integer-weighted set of weights in concatenated fundamental coordinates.
struct Character {
  int rank = 0;
  std::map<Weight, Int> m;

  Int dim() const;
  Int mult(const Weight& w) const;
  bool zero() const { return m.empty(); }

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator*(const Character& o) const;  // tensor product
  bool operator==(const Character& o) const { return rank == o.rank && m == o.m; }

  Character dual() const;          // negate all weights
  Character twist(int s) const;    // scale all weights by s (Frobenius: s = p^r)
  Character power(int k) const;    // k-fold tensor power

  static Character trivial(int rank);
  void trim();  // drop zero entries
};

Character exterior_power(const Character& c, int k);
Character sym_power(const Character& c, int k);

// A product of simple root systems; weights are concatenated.
class Context {
 public:
  explicit Context(const TypeVec& t);
  explicit Context(LieType t) : Context(TypeVec(t)) {}

  const TypeVec& type() const { return type_; }
  int rank() const { return rank_; }
  size_t nfactors() const { return fac_.size(); }
  const RootSystem& factor(size_t f) const { return fac_[f]; }
  int offset(size_t f) const { return off_[f]; }

  Weight slice(const Weight& w, size_t f) const;
  Weight unslice(const std::vector<Weight>& parts) const;
  bool is_dominant(const Weight& w) const;
  Weight dominant(const Weight& w) const;  // orbit representative, factorwise

  // Character of the Weyl module with highest weight lam (dominant).
  Character weyl_char(const Weight& lam) const;
  // Product dimension formula, computed independently of weyl_char.
  Int weyl_dim(const Weight& lam) const;

  // Express a virtual character in the Weyl basis.
  std::map<Weight, Int> decompose_weyl(Character c) const;

 private:
  TypeVec type_;
  std::vector<RootSystem> fac_;
  std::vector<int> off_;
  int rank_ = 0;
};

// Weight multiplicities of one irreducible Weyl module for a simple system.
std::map<Weight, Int> freudenthal(const RootSystem& rs, const Weight& lam);

}  // namespace chevalab
