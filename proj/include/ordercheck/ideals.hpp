#pragma once

#include <cstdint>
#include <vector>

#include "ordercheck/poset.hpp"

namespace ordercheck {

// The lattice of order ideals (down-sets) of a poset, with the strict
// containment relation as adjacency lists.
struct IdealLattice {
  int p = 0;
  std::vector<Mask> ideals;  // ascending as integers; holds 0 and all_elements
  // containing[i] = indices j with ideals[i] a strict subset of ideals[j].
  std::vector<std::vector<std::uint32_t>> containing;

  std::size_t count() const { return ideals.size(); }
};

IdealLattice order_ideals(const Poset& P);

}  // namespace ordercheck
