#pragma once
#include <set>
#include <vector>

#include "chevalab/lie_type.hpp"
#include "chevalab/root_system.hpp"

namespace chevalab {

// The type of the root subsystem spanned by a base of roots (given as root
// ids with pairwise non-positive pairings).  Components are sorted, so the
// result is a canonical name independent of the base ordering.
TypeVec classify_base(const RootSystem& rs, const std::vector<int>& base);

// Candidate maximal subsystems: extended-diagram single-node deletions at
// nodes whose highest-root coefficient is prime, together with the corank-one
// Levi subsystems.  Deduplicated canonical types, sorted; the trivial
// subsystem is omitted.
std::vector<TypeVec> subsystems_maximal(const RootSystem& rs);

// Every type reachable from t by iterating prime-mark extended deletions and
// single-node Levi deletions inside the components; includes t itself.
std::set<TypeVec> subsystem_closure(const TypeVec& t);

// The elements of subsystems_maximal not contained in the closure of another
// element: the subsystems every other one embeds into.
std::vector<TypeVec> subsystems_dominant(const RootSystem& rs);

}  // namespace chevalab
