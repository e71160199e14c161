#pragma once
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chevalab/root_system.hpp"

namespace chevalab {

// A word in the simple reflections; the leftmost letter acts last, so
// act({i,j}, v) = s_i(s_j(v)).  Letters are 0-based inside, 1-based in text.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}

  static WeylWord parse(const std::string& s);  // "1 5 3" or "1,5,3", 1-based
  std::string str() const;
  size_t size() const { return letters.size(); }
};

// A word in reflections s_gamma for arbitrary roots gamma (same composition
// convention as WeylWord).  This is how the named elements carrying one Levi
// subsystem onto another are written down.
struct RefWord {
  std::vector<int> gammas;  // root ids

  RefWord() = default;
  explicit RefWord(std::vector<int> g) : gammas(std::move(g)) {}

  // Comma- or space-separated letters; a token is a digit-string root label
  // when its digit count equals the rank, otherwise a 1-based simple index.
  static RefWord parse(const RootSystem& rs, const std::string& s);
  std::string str(const RootSystem& rs) const;
  RefWord inverse() const;  // reflections are involutions: reverse the word
  size_t size() const { return gammas.size(); }
};

class Weyl {
 public:
  explicit Weyl(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& roots() const { return rs_; }

  int act(const WeylWord& w, int root_id) const;
  Weight act(const WeylWord& w, const Weight& v) const;
  int act(const RefWord& w, int root_id) const;

  // True iff w carries the root subsystem spanned by the simple nodes J1
  // (0-based) onto the one spanned by J2, as sets of roots.
  bool maps_levi(const RefWord& w, const std::vector<int>& J1, const std::vector<int>& J2) const;

  // Coxeter length = number of positive roots sent negative.
  int length(const WeylWord& w) const;
  bool is_identity(const WeylWord& w) const;
  bool equal(const WeylWord& a, const WeylWord& b) const;

  // Longest element of the full group, or of the parabolic subgroup W_J.
  WeylWord longest_element() const;
  WeylWord longest_element(const std::vector<int>& J) const;

  // Permutation p with -w0(alpha_i) = alpha_{p[i]}; identity iff w0 = -1.
  std::vector<int> neg_w0_perm() const;

  // Full orbit of a weight.
  std::set<Weight> orbit(const Weight& w) const;

  // Dominant representative of the orbit of w.
  Weight dominant(const Weight& w) const;

  uint64_t order() const;  // by the classification formula

 private:
  const RootSystem& rs_;
};

// |W| for a simple type.
uint64_t weyl_order(LieType t);

}  // namespace chevalab
