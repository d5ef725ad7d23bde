#pragma once

#include <vector>

#include <gmpxx.h>

#include "ordercheck/poset.hpp"
#include "ordercheck/rational_poly.hpp"

namespace ordercheck {

// Algorithm choice for the order polynomial. Auto picks linear for p <= 6
// and ideals otherwise.
enum class OmegaAlgorithm { kLinear, kIdeals, kAuto };

// Nonnegative integer coefficients (h_0, ..., h_p) of the h*-polynomial.
struct HStarVector {
  std::vector<mpz_class> h;

  int top_nonzero() const;  // largest index with h != 0 (h_0 = 1 exists)
  mpz_class sum() const;

  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

// tallies[d] = number of linear extensions with exactly d descents
// (descents taken against the natural labeling); size p.
std::vector<mpz_class> descent_tallies(const Poset& P);

// The order polynomial Omega_P(t): the number of order-preserving maps
// from P to a t-element chain, as an exact polynomial of degree p.
RatPolynomial order_polynomial(const Poset& P,
                               OmegaAlgorithm alg = OmegaAlgorithm::kAuto);

// ehr(O(P), t) = Omega_P(t + 1).
RatPolynomial ehrhart_polynomial(const Poset& P,
                                 OmegaAlgorithm alg = OmegaAlgorithm::kAuto);

// Solves ehr(t) = sum_i h_i * C(t + p - i, p) for (h_0, ..., h_p) by
// evaluating at t = 0..p and back-substituting in the binomial basis.
HStarVector hstar_from_ehrhart(const RatPolynomial& ehr, int p);

// h_i = number of linear extensions with i descents.
HStarVector hstar_from_descents(const Poset& P);

bool is_ehrhart_positive(const RatPolynomial& ehr);

}  // namespace ordercheck
