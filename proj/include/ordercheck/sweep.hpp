#pragma once

#include <cstdint>
#include <string>

#include "ordercheck/ehrhart.hpp"

namespace ordercheck {

struct SweepConfig {
  int p = 0;                  // required for the generate source
  std::string input_path;     // nonempty: verify a digraph6 file instead
  std::uint32_t shard_count = 1;
  std::uint32_t shard_index = 0;
  int jobs = 1;
  OmegaAlgorithm algorithm = OmegaAlgorithm::kAuto;
  std::string output_path;      // empty: stdout
  std::string checkpoint_path;  // empty: no checkpointing
  bool summary_only = false;    // counterexample records are still written
  std::uint64_t stop_after_units = 0;  // 0 = run to completion (test hook)
};

struct SweepSummary {
  int p = 0;
  std::uint64_t total_posets = 0;
  std::uint64_t not_ehrhart_positive = 0;
  std::uint64_t not_real_rooted = 0;
  std::uint64_t not_log_concave = 0;
  std::uint64_t not_unimodal = 0;
  double elapsed_seconds = 0.0;
  std::uint32_t shard_count = 1;
  std::uint32_t shard_index = 0;
  std::uint64_t units_done = 0;
  std::uint64_t units_total = 0;

  bool completed() const { return units_done == units_total; }
  std::uint64_t counterexamples() const {
    return not_ehrhart_positive + not_real_rooted + not_log_concave +
           not_unimodal;
  }
  std::string to_json() const;
};

// Verifies every poset of the source exactly once: one JSONL record per
// poset in deterministic order (ascending canonical within each generation
// unit; file order for digraph6 input), any false verdict counted as a
// counterexample and always written. Completed unsharded generate sweeps
// assert their total against the known poset counts.
SweepSummary sweep(const SweepConfig& config);

// poset(p) for p = 1..13; 0 when unknown.
std::uint64_t known_poset_count(int p);

}  // namespace ordercheck
