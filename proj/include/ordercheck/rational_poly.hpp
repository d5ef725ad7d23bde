#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ordercheck {

// Dense univariate polynomial with exact rational coefficients. Trailing
// zero coefficients are trimmed; the zero polynomial is the empty sequence
// and reports degree -1.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  static RatPolynomial constant(const mpq_class& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const mpq_class& coeff(int k) const;  // zero beyond the degree
  std::span<const mpq_class> coeffs() const { return coeffs_; }

  mpq_class eval(const mpq_class& x) const;

  // The polynomial t -> (*this)(t + delta).
  RatPolynomial shifted(const mpz_class& delta) const;

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial operator*(const RatPolynomial& o) const;
  RatPolynomial operator*(const mpq_class& s) const;

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// C(t + offset, k) expanded as a polynomial in t.
RatPolynomial binomial_poly(const mpz_class& offset, int k);

// "num/den" in lowest terms, denominator always present.
std::string rational_token(const mpq_class& q);

}  // namespace ordercheck
