#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace ordercheck {

// Dense integer polynomial, ascending powers, trailing zeros trimmed
// (empty = zero polynomial).
using IntPolynomial = std::vector<mpz_class>;

int degree(const IntPolynomial& f);  // -1 for zero
IntPolynomial derivative(const IntPolynomial& f);

// Content divided out, sign of the leading coefficient preserved.
IntPolynomial primitive_part(const IntPolynomial& f);

// Primitive gcd with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// f / gcd(f, f'): primitive, positive leading coefficient, the same roots
// as f with all multiplicities reduced to one.
IntPolynomial squarefree_part(const IntPolynomial& f);

// Sturm sequence (f_0, f_1, ..., f_k): f_0 the squarefree part of the
// input, f_1 = f_0', f_{i+1} = -rem(f_{i-1}, f_i), every member scaled by
// a positive factor to a primitive integer polynomial.
struct SturmChain {
  std::vector<IntPolynomial> polys;
};

SturmChain sturm_chain(const IntPolynomial& f);

enum class Infinity { kPositive, kNegative };

// Sign changes (ignoring zeros, which cannot occur at infinity) of the
// chain members' limit signs: the leading-coefficient sign at +inf, times
// (-1)^degree at -inf.
int sign_variations_at_infinity(const SturmChain& chain, Infinity at);

// V(-inf) - V(+inf) of the squarefree part's chain.
int count_distinct_real_roots(const IntPolynomial& f);

// True iff every root of f is real; degree-0 polynomials vacuously so.
bool is_real_rooted(const IntPolynomial& f);

// a_i^2 >= a_{i-1} * a_{i+1} at every interior index.
bool is_log_concave(std::span<const mpz_class> coeffs);

// Coefficients rise then fall around some peak.
bool is_unimodal(std::span<const mpz_class> coeffs);

}  // namespace ordercheck
