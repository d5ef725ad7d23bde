#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordercheck/errors.hpp"

namespace ordercheck {

// A set of elements, bit e <-> element e (0-based). Rows of the relation
// matrix are stored this way: bit j of up-row i means i < j in the poset.
using Mask = std::uint16_t;

constexpr int kMaxElements = 16;

constexpr Mask bit(int e) { return static_cast<Mask>(Mask{1} << e); }
constexpr Mask all_elements(int p) {
  return static_cast<Mask>((1u << p) - 1u);
}

// Finite strict partial order on {0..p-1}, stored transitively closed and
// naturally labeled (i < j in the poset implies i < j as integers, so every
// up-row only has bits above its own index). Immutable after construction.
class Poset {
 public:
  // Builds a poset from an arbitrary strict-relation digraph given as
  // successor rows. The input is transitively closed; if the closure
  // violates natural labeling, elements are relabeled by a topological
  // order (ties broken by ascending original label).
  static Poset from_relation(int p, std::span<const Mask> successor_rows);

  // Fast path for rows that are already closed and naturally labeled
  // (generator output). Checked with assertions only.
  static Poset from_closed_rows(int p, const Mask* rows);

  int size() const { return p_; }
  bool less(int i, int j) const { return (up_[i] >> j) & 1u; }
  Mask up(int i) const { return up_[i]; }      // strict successors
  Mask down(int i) const { return down_[i]; }  // strict predecessors
  Mask covers_of(int i) const { return cov_[i]; }
  bool covers(int i, int j) const { return (cov_[i] >> j) & 1u; }

  // True iff the poset contains no 3-element antichain, i.e. its elements
  // can be partitioned into two chains.
  bool is_narrow() const;

  // True iff all maximal chains have the same length.
  bool is_graded() const;

  // Canonical key: the lexicographically minimal row-major relation-matrix
  // bit string over all natural relabelings (equivalently, over all linear
  // extensions used as relabelings). Equal keys iff isomorphic.
  std::string canonical_key() const;

  // True iff this matrix equals its own canonical key. Cheaper than
  // canonical_key() because the search stops at the first smaller witness.
  bool is_canonical() const;

  // Row-major bit packing of this matrix (p*p bits, MSB first per byte).
  std::string packed_rows() const;

  // Cover list, one "i < j" pair per line (1-based), for diagnostics.
  std::string hasse() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Poset() = default;

  int p_ = 0;
  std::array<Mask, kMaxElements> up_{};
  std::array<Mask, kMaxElements> down_{};
  std::array<Mask, kMaxElements> cov_{};
};

namespace detail {

// Lexicographic order on relation rows: column 0 is the most significant
// position, so the lowest differing bit index decides.
inline bool row_lexless(Mask a, Mask b) {
  Mask d = static_cast<Mask>(a ^ b);
  if (d == 0) return false;
  Mask low = static_cast<Mask>(d & (~d + 1u));
  return (b & low) != 0;
}

// Minimality search over natural relabelings. With test_only set, returns
// true as soon as some relabeling is strictly smaller than `target`
// (leaving target untouched); otherwise refines `target` to the minimum.
bool canonical_search(int p, const Mask* up, const Mask* down, Mask* target,
                      bool test_only);

std::string pack_rows(int p, const Mask* rows);

}  // namespace detail

std::string to_hex(const std::string& bytes);

}  // namespace ordercheck
