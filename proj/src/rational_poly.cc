#include "ordercheck/rational_poly.hpp"

namespace ordercheck {

namespace {
const mpq_class kZero{0};
}

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RatPolynomial RatPolynomial::constant(const mpq_class& c) {
  return RatPolynomial({c});
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpq_class& RatPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

mpq_class RatPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::shifted(const mpz_class& delta) const {
  // Horner over the coefficient list: acc <- acc*(t+delta) + c_k.
  std::vector<mpq_class> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * delta;
    }
    if (next.empty()) next.emplace_back(0);
    next[0] += *it;
    acc = std::move(next);
  }
  return RatPolynomial(std::move(acc));
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1,
                             mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const mpq_class& s) const {
  std::vector<mpq_class> out(coeffs_);
  for (auto& c : out) c *= s;
  return RatPolynomial(std::move(out));
}

RatPolynomial binomial_poly(const mpz_class& offset, int k) {
  // C(t + offset, k) = (t + offset)(t + offset - 1)...(t + offset - k + 1) / k!
  RatPolynomial out = RatPolynomial::constant(1);
  for (int s = 0; s < k; ++s) {
    mpq_class a(offset - s);
    out = out * RatPolynomial({a, mpq_class(1)});
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  return out * mpq_class(mpz_class(1), fact);
}

std::string rational_token(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ordercheck
