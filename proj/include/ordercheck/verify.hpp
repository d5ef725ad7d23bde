#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "ordercheck/ehrhart.hpp"
#include "ordercheck/poset.hpp"

namespace ordercheck {

// Per-poset certificate: canonical key, exact Ehrhart data and the four
// verdicts the sweep aggregates.
struct VerificationRecord {
  std::string canon;  // hex of the canonical byte string
  int p = 0;
  mpz_class num_linear_extensions;
  std::vector<mpq_class> ehr_coeffs;  // ascending power, p+1 entries
  std::vector<mpz_class> hstar;       // h_0..h_p
  bool ehrhart_positive = false;
  bool real_rooted = false;
  bool log_concave = false;
  bool unimodal = false;
  bool narrow = false;
  bool graded = false;

  bool all_verdicts() const {
    return ehrhart_positive && real_rooted && log_concave && unimodal;
  }

  // One JSON object, fields in schema order, rationals as "num/den"
  // strings and big integers as decimal strings.
  std::string to_jsonl() const;
};

// Computes the full certificate. The h* vector is extracted through both
// routes (binomial-basis solve of the Ehrhart polynomial, and descent
// counts over the linear extensions); disagreement throws HStarMismatch.
// Internal invariants (h_0 = 1, sum h = e(P), the real-rooted =>
// log-concave => unimodal chain) throw InternalInvariant when violated.
VerificationRecord verify_poset(const Poset& P,
                                OmegaAlgorithm alg = OmegaAlgorithm::kAuto);

}  // namespace ordercheck
