#include "ordercheck/ideals.hpp"

#include <bit>

namespace ordercheck {

IdealLattice order_ideals(const Poset& P) {
  const int p = P.size();
  IdealLattice L;
  L.p = p;

  // S is a down-set iff the union of the members' predecessor sets stays
  // inside S. Scanning subsets in ascending order keeps the list sorted.
  const std::uint32_t limit = 1u << p;
  for (std::uint32_t s = 0; s < limit; ++s) {
    Mask need = 0;
    Mask m = static_cast<Mask>(s);
    while (m) {
      int j = std::countr_zero(m);
      m &= static_cast<Mask>(m - 1);
      need |= P.down(j);
    }
    if ((need & ~s) == 0) L.ideals.push_back(static_cast<Mask>(s));
  }

  const std::size_t n = L.ideals.size();
  L.containing.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((L.ideals[i] & ~L.ideals[j]) == 0)
        L.containing[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return L;
}

}  // namespace ordercheck
