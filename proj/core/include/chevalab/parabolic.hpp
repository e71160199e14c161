#pragma once
#include <string>
#include <vector>

#include "chevalab/lie_type.hpp"
#include "chevalab/root_system.hpp"

namespace chevalab {

// A connected component of the Levi diagram, with its simple roots listed in
// the Bourbaki order of the component's own type.
struct LeviComponent {
  LieType type{'A', 1};
  std::vector<int> order;  // ambient 0-based simple indices
};

// One graded piece of the unipotent radical: all roots sharing a coefficient
// pattern on the removed simples.  Each such piece is an irreducible module
// for the Levi; generator/maximal are its lowest/highest weight vectors.
struct Shape {
  int level = 0;
  std::vector<int> pattern;             // coefficients on removed simples
  std::vector<int> members;             // positive root ids, canonical order
  int generator = -1;                   // unique member with no descent into the Levi
  int maximal = -1;                     // unique member with no ascent into the Levi
  std::vector<std::vector<int>> label;  // per component, in component coordinates
  bool mixed_length_flag = false;       // short and long members in an F/G ambient
};

class Parabolic {
 public:
  Parabolic(const RootSystem& rs, std::vector<int> levi);

  static Parabolic from_removed(const RootSystem& rs, const std::vector<int>& removed);

  const RootSystem& roots() const { return rs_; }
  const std::vector<int>& levi() const { return levi_; }
  const std::vector<int>& removed() const { return removed_; }
  const std::vector<LeviComponent>& components() const { return comps_; }
  TypeVec levi_type() const;

  int level(int root_id) const;  // nonnegative for positive roots
  int max_level() const { return max_level_; }
  const std::vector<Shape>& shapes(int lvl) const;  // lvl >= 1
  std::vector<int> level_roots(int lvl) const;      // positive roots at a level

  // "0100,10,0" — one digit string per component; "1" for a trivial label.
  std::string label_string(const Shape& s) const;

 private:
  void split_components();
  void build_shapes();

  const RootSystem& rs_;
  std::vector<int> levi_;
  std::vector<int> removed_;
  std::vector<LeviComponent> comps_;
  int max_level_ = 0;
  std::vector<std::vector<Shape>> shapes_;  // by level, index 0 unused
};

// Bourbaki-order the simple roots of one connected subdiagram; conventions
// for the ambiguous cases (A chains, D forks) are fixed here once for the
// whole library so printed module labels are stable.
LeviComponent order_component(const RootSystem& rs, const std::vector<int>& nodes);

}  // namespace chevalab
