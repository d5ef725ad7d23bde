#pragma once

// Test-only oracles, written directly against the definitions so they stay
// independent of the production algorithms they check.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ordercheck/poset.hpp"

namespace ordercheck::brute {

// All linear extensions by filtering the p! permutations.
inline std::vector<std::vector<int>> linear_extensions(const Poset& P) {
  const int p = P.size();
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < p && ok; ++a)
      for (int b = a + 1; b < p && ok; ++b)
        if (P.less(perm[b], perm[a])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// All down-sets by scanning every subset against the definition.
inline std::vector<Mask> order_ideal_masks(const Poset& P) {
  const int p = P.size();
  std::vector<Mask> out;
  for (std::uint32_t s = 0; s < (1u << p); ++s) {
    bool ok = true;
    for (int j = 0; j < p && ok; ++j) {
      if (!((s >> j) & 1u)) continue;
      for (int i = 0; i < p && ok; ++i)
        if (P.less(i, j) && !((s >> i) & 1u)) ok = false;
    }
    if (ok) out.push_back(static_cast<Mask>(s));
  }
  return out;
}

// Omega_P(t) by enumerating every map P -> {1..t}.
inline std::uint64_t omega(const Poset& P, int t) {
  const int p = P.size();
  std::vector<int> f(p, 1);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < p && ok; ++i)
      for (int j = 0; j < p && ok; ++j)
        if (P.less(i, j) && f[i] > f[j]) ok = false;
    if (ok) ++count;
    int k = 0;
    while (k < p && f[k] == t) f[k++] = 1;
    if (k == p) break;
    ++f[k];
  }
  return count;
}

inline int max_antichain(const Poset& P) {
  const int p = P.size();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << p); ++s) {
    bool antichain = true;
    for (int i = 0; i < p && antichain; ++i) {
      if (!((s >> i) & 1u)) continue;
      for (int j = i + 1; j < p && antichain; ++j)
        if (((s >> j) & 1u) && (P.less(i, j) || P.less(j, i)))
          antichain = false;
    }
    if (antichain) best = std::max(best, std::popcount(s));
  }
  return best;
}

// Lengths of all maximal chains, walked over the cover digraph.
inline std::vector<int> maximal_chain_lengths(const Poset& P) {
  const int p = P.size();
  std::vector<int> lengths;
  auto walk = [&](auto&& self, int x, int len) -> void {
    if (P.up(x) == 0) {
      lengths.push_back(len);
      return;
    }
    Mask cov = P.covers_of(x);
    while (cov) {
      int y = std::countr_zero(cov);
      cov &= static_cast<Mask>(cov - 1);
      self(self, y, len + 1);
    }
  };
  for (int x = 0; x < p; ++x)
    if (P.down(x) == 0) walk(walk, x, 0);
  return lengths;
}

// Relabels P by an extension word: the element word[k] receives label k.
inline Poset relabel_by_word(const Poset& P, const std::vector<int>& word) {
  const int p = P.size();
  std::array<Mask, kMaxElements> rows{};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (P.less(word[a], word[b])) rows[a] |= bit(b);
  return Poset::from_closed_rows(p, rows.data());
}

// Canonical key by minimizing over all permutations that land on a natural
// labeling, independent of the production search.
inline std::string canonical_min(const Poset& P) {
  const int p = P.size();
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::array<Mask, kMaxElements> rows{};
    bool natural = true;
    for (int a = 0; a < p && natural; ++a)
      for (int b = 0; b < p; ++b)
        if (P.less(perm[a], perm[b])) {
          if (b < a) {
            natural = false;
            break;
          }
          rows[a] |= bit(b);
        }
    if (!natural) continue;
    std::string key = detail::pack_rows(p, rows.data());
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every transitively closed upper-triangular matrix on p elements, as rows.
inline std::vector<std::array<Mask, kMaxElements>> all_closed_matrices(int p) {
  const int cells = p * (p - 1) / 2;
  std::vector<std::pair<int, int>> cell_list;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) cell_list.emplace_back(i, j);
  std::vector<std::array<Mask, kMaxElements>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    std::array<Mask, kMaxElements> rows{};
    for (int t = 0; t < cells; ++t)
      if (m >> t & 1) rows[cell_list[t].first] |= bit(cell_list[t].second);
    bool closed = true;
    for (int i = 0; i < p && closed; ++i) {
      Mask row = rows[i];
      while (row) {
        int j = std::countr_zero(row);
        row &= static_cast<Mask>(row - 1);
        if (rows[j] & ~rows[i]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(rows);
  }
  return out;
}

inline Poset random_poset(std::mt19937_64& rng, int p, double density) {
  std::bernoulli_distribution arc(density);
  std::vector<Mask> rows(p, 0);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (arc(rng)) rows[i] |= bit(j);
  return Poset::from_relation(p, rows);
}

inline std::vector<int> random_linear_extension(std::mt19937_64& rng,
                                                const Poset& P) {
  const int p = P.size();
  std::vector<int> word;
  Mask placed = 0;
  while (static_cast<int>(word.size()) < p) {
    std::vector<int> ready;
    for (int x = 0; x < p; ++x)
      if (!((placed >> x) & 1u) && (P.down(x) & ~placed) == 0)
        ready.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    int x = ready[pick(rng)];
    word.push_back(x);
    placed |= bit(x);
  }
  return word;
}

}  // namespace ordercheck::brute
