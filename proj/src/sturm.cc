#include "ordercheck/sturm.hpp"

#include "ordercheck/errors.hpp"

namespace ordercheck {

namespace {

void trim(IntPolynomial& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Exact division by a rational sequence is avoided throughout: remainders
// are computed over Q and rescaled to primitive integer polynomials by a
// positive factor, which leaves every sign-variation count unchanged.
using RatCoeffs = std::vector<mpq_class>;

RatCoeffs to_rational(const IntPolynomial& f) {
  RatCoeffs out;
  out.reserve(f.size());
  for (const auto& c : f) out.emplace_back(c);
  return out;
}

void trim(RatCoeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a by b over Q; b nonzero.
RatCoeffs rational_rem(const IntPolynomial& a, const IntPolynomial& b) {
  RatCoeffs r = to_rational(a);
  const mpq_class lead(b.back());
  while (static_cast<int>(r.size()) >= static_cast<int>(b.size())) {
    const mpq_class q = r.back() / lead;
    const std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
    r.pop_back();  // the leading term cancels exactly
    trim(r);
    if (r.empty()) break;
  }
  return r;
}

// Positive-factor rescale of a rational sequence to primitive integers.
IntPolynomial primitive_from_rational(const RatCoeffs& f) {
  if (f.empty()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : f)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  IntPolynomial out;
  out.reserve(f.size());
  for (const auto& c : f) {
    mpq_class scaled = c * den_lcm;
    out.push_back(scaled.get_num());
  }
  return primitive_part(out);
}

}  // namespace

int degree(const IntPolynomial& f) { return static_cast<int>(f.size()) - 1; }

IntPolynomial derivative(const IntPolynomial& f) {
  IntPolynomial out;
  for (std::size_t k = 1; k < f.size(); ++k)
    out.push_back(f[k] * static_cast<unsigned long>(k));
  trim(out);
  return out;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  IntPolynomial out = f;
  trim(out);
  if (out.empty()) return out;
  mpz_class content = 0;
  for (const auto& c : out)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : out) c /= content;  // content > 0, so the sign survives
  return out;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.empty()) x.swap(y);
  while (!y.empty()) {
    IntPolynomial r = primitive_from_rational(rational_rem(x, y));
    x.swap(y);
    y.swap(r);
  }
  if (!x.empty() && sgn(x.back()) < 0)
    for (auto& c : x) c = -c;
  return x;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  IntPolynomial g = primitive_part(f);
  if (g.empty()) throw ZeroPolynomial("squarefree part of zero polynomial");
  if (degree(g) == 0) return {mpz_class(1)};
  const IntPolynomial d = poly_gcd(g, derivative(g));
  // g = d * out exactly over Z (d is primitive and divides g).
  IntPolynomial out(g.size() - d.size() + 1, mpz_class(0));
  IntPolynomial rem = g;
  for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[k + d.size() - 1].get_mpz_t(),
                 d.back().get_mpz_t());
    out[k] = q;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
  }
  out = primitive_part(out);
  if (sgn(out.back()) < 0)
    for (auto& c : out) c = -c;
  return out;
}

SturmChain sturm_chain(const IntPolynomial& f) {
  SturmChain chain;
  chain.polys.push_back(squarefree_part(f));
  if (degree(chain.polys[0]) == 0) return chain;
  chain.polys.push_back(primitive_part(derivative(chain.polys[0])));
  while (degree(chain.polys.back()) > 0) {
    const auto& prev = chain.polys[chain.polys.size() - 2];
    const auto& cur = chain.polys.back();
    RatCoeffs rem = rational_rem(prev, cur);
    if (rem.empty()) break;  // cannot happen for a squarefree f_0
    for (auto& c : rem) c = -c;
    chain.polys.push_back(primitive_from_rational(rem));
  }
  return chain;
}

int sign_variations_at_infinity(const SturmChain& chain, Infinity at) {
  int variations = 0;
  int prev = 0;
  for (const auto& f : chain.polys) {
    if (f.empty()) continue;
    int s = sgn(f.back());
    if (at == Infinity::kNegative && degree(f) % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int count_distinct_real_roots(const IntPolynomial& f) {
  const SturmChain chain = sturm_chain(f);
  return sign_variations_at_infinity(chain, Infinity::kNegative) -
         sign_variations_at_infinity(chain, Infinity::kPositive);
}

bool is_real_rooted(const IntPolynomial& f) {
  const IntPolynomial sf = squarefree_part(f);
  if (degree(sf) == 0) return true;
  return count_distinct_real_roots(sf) == degree(sf);
}

bool is_log_concave(std::span<const mpz_class> coeffs) {
  for (std::size_t i = 1; i + 1 < coeffs.size(); ++i)
    if (coeffs[i] * coeffs[i] < coeffs[i - 1] * coeffs[i + 1]) return false;
  return true;
}

bool is_unimodal(std::span<const mpz_class> coeffs) {
  std::size_t i = 0;
  while (i + 1 < coeffs.size() && coeffs[i] <= coeffs[i + 1]) ++i;
  while (i + 1 < coeffs.size() && coeffs[i] >= coeffs[i + 1]) ++i;
  return i + 1 >= coeffs.size();
}

}  // namespace ordercheck
