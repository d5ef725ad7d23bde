#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>

#include <gmpxx.h>

#include "ordercheck/poset.hpp"

namespace ordercheck {

// Visits every linear extension of P exactly once, in lexicographic order
// of the word, and returns the exact count e(P). The callback receives the
// word as a span of 0-based element indices.
template <typename F>
std::uint64_t for_each_linear_extension(const Poset& P, F&& visit) {
  const int p = P.size();
  std::array<std::uint8_t, kMaxElements> word{};
  std::uint64_t count = 0;

  // Recursion over positions; at each step the candidates are the unplaced
  // elements whose predecessors are all placed, tried in ascending order.
  auto rec = [&](auto&& self, int depth, Mask placed) -> void {
    if (depth == p) {
      ++count;
      visit(std::span<const std::uint8_t>(word.data(), p));
      return;
    }
    Mask todo = static_cast<Mask>(all_elements(p) & ~placed);
    while (todo) {
      int x = std::countr_zero(todo);
      todo &= static_cast<Mask>(todo - 1);
      if (P.down(x) & ~placed) continue;
      word[depth] = static_cast<std::uint8_t>(x);
      self(self, depth + 1, static_cast<Mask>(placed | bit(x)));
    }
  };
  rec(rec, 0, 0);
  return count;
}

inline mpz_class count_linear_extensions(const Poset& P) {
  std::uint64_t n =
      for_each_linear_extension(P, [](std::span<const std::uint8_t>) {});
  return mpz_class(static_cast<unsigned long>(n));
}

}  // namespace ordercheck
