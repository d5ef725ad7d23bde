#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ordercheck/poset.hpp"

namespace ordercheck {

// Deterministic slice of the generation search space. The space of
// upper-triangular closed relation matrices is walked cell by cell in
// row-major order; a shard fixes the first k cells (k minimal with
// 2^k >= shard_count) and owns the assignments congruent to its index.
struct GenerationShard {
  int p = 0;
  std::uint32_t shard_index = 0;
  std::uint32_t shard_count = 1;
};

// A shard is further split into units (the first unit_bits cells fixed);
// units are the scheduling and checkpointing granule. The split depends
// only on p and shard_count, so record streams are reproducible for any
// worker count.
class GenerationPlan {
 public:
  explicit GenerationPlan(const GenerationShard& shard);

  int p() const { return shard_.p; }
  int unit_bits() const { return unit_bits_; }
  std::size_t unit_count() const { return units_.size(); }

  // Emits the canonical posets of one unit, in ascending canonical order.
  void generate_unit(std::size_t unit,
                     const std::function<void(const Poset&)>& sink) const;

 private:
  GenerationShard shard_;
  int shard_bits_ = 0;
  int unit_bits_ = 0;
  std::vector<std::uint64_t> units_;  // fixed-cell assignments, ascending
};

// Emits exactly one representative per isomorphism class of posets on p
// elements: each naturally labeled, equal to its own canonical form, in
// ascending canonical byte-string order within the shard.
void generate_all(const GenerationShard& shard,
                  const std::function<void(const Poset&)>& sink);

inline void generate_all(int p, const std::function<void(const Poset&)>& sink) {
  generate_all(GenerationShard{p, 0, 1}, sink);
}

}  // namespace ordercheck
