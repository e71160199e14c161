#pragma once
#include <array>
#include <string>
#include <vector>

#include "chevalab/gf.hpp"
#include "chevalab/root_system.hpp"

namespace chevalab {

// One letter of a one-parameter family: the factor x_{root}(coeff * t^tpow),
// with coeff a fixed element of the working field.  tpow > 1 occurs when a
// generator is parameterized through an exceptional isogeny; in characteristic
// 2 the short-root generator of a B3 realized inside a C3-shaped image carries
// a Levi letter quadratic in the parameter.
struct GenLetter {
  int root;
  int coeff;
  int tpow = 1;
};

// Generators y_{+-i}(t), i = 1..rank, of a candidate subgroup, with an
// expected target type for the Cartan comparison.
struct GenFamily {
  std::string name;
  LieType target;
  int rank = 0;
  std::vector<std::vector<GenLetter>> pos;
  std::vector<std::vector<GenLetter>> neg;
};

// The two parameterized families living in an E8 adjoint group in
// characteristic 2: a B3 family with image C3 in an A5 Levi factor, and a D4
// family inside the E6 parabolic.  Parameters are taken in the prime field;
// the dependent coefficients are computed in-field.
GenFamily b3_e8_generators(const RootSystem& rs, const GF& f, const std::array<int, 7>& v);
GenFamily d4_e8_generators(const RootSystem& rs, const GF& f, const std::array<int, 6>& v);

struct GenReport {
  bool additivity = false;   // y_i(t) y_i(u) == y_i(t+u)
  bool torus = false;        // the h_i(t) = n_i(t) n_i(1)^-1 commute pairwise
                             // and conjugation by n_i(1) folds each h_j(u)
                             // back into the realized torus
  bool torus_action = false; // h_i(t) y_j(u) h_i(t)^-1 == y_j(t^m u), m integral
  bool commutators = false;  // rank-2 relations per pair of positive generators
  std::vector<std::vector<int>> realized_cartan;  // m[i][j] = <beta_j, beta_i^vee>
  std::vector<std::vector<int>> target_cartan;
  bool cartan_matches = false;
  int max_degree = 0;        // largest |exponent| occurring in any relation entry
  std::vector<std::string> failures;

  bool all_relations() const { return additivity && torus && torus_action && commutators; }
};

// Checks the defining relations of the family in the adjoint representation.
// Identities in the parameters t, u are established as exact Laurent-polynomial
// matrix identities with coefficients in the given field, so a passing report
// is a proof of the relations over every extension of that field.
GenReport verify_generators(const RootSystem& rs, const GF& f, const GenFamily& fam);

// Dimension of the common fixed space of all y_{+-i}(t), t ranging over the
// field, acting on the adjoint module.
int fixed_space_dim(const RootSystem& rs, const GF& f, const GenFamily& fam);

}  // namespace chevalab
