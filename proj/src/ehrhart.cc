#include "ordercheck/ehrhart.hpp"

#include <cstdint>

#include "ordercheck/extensions.hpp"
#include "ordercheck/ideals.hpp"

namespace ordercheck {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

RatPolynomial order_polynomial_linear(const Poset& P) {
  const int p = P.size();
  const auto tallies = descent_tallies(P);
  // Omega_P(t) = sum over extensions w of C(t + p - 1 - des(w), p),
  // expanded once per distinct descent value.
  RatPolynomial omega;
  for (int d = 0; d < p; ++d) {
    if (tallies[d] == 0) continue;
    omega += binomial_poly(mpz_class(p - 1 - d), p) * mpq_class(tallies[d]);
  }
  return omega;
}

RatPolynomial order_polynomial_ideals(const Poset& P) {
  const int p = P.size();
  const IdealLattice L = order_ideals(P);
  const std::size_t n = L.count();

  // Omega_P(t) equals the number of multichains I_1 <= ... <= I_{t-1} of
  // order ideals. chains[i] holds the count of multichains of the current
  // length ending at ideal i; each round extends the length by one.
  std::vector<mpz_class> values(p + 2);  // values[t] = Omega_P(t), t = 1..p+1
  values[1] = 1;
  std::vector<mpz_class> chains(n, mpz_class(1));
  std::vector<mpz_class> next(n);
  for (int t = 2; t <= p + 1; ++t) {
    mpz_class total = 0;
    for (const auto& c : chains) total += c;
    values[t] = total;
    if (t == p + 1) break;
    for (auto& c : next) c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] += chains[i];
      for (std::uint32_t j : L.containing[i]) next[j] += chains[i];
    }
    chains.swap(next);
  }

  // Newton forward differences on the p+1 points t = 1..p+1 recover the
  // degree-p polynomial exactly.
  std::vector<mpz_class> diff(p + 1);
  for (int i = 0; i <= p; ++i) diff[i] = values[i + 1];
  for (int j = 1; j <= p; ++j)
    for (int i = p; i >= j; --i) diff[i] -= diff[i - 1];

  RatPolynomial omega;
  for (int j = 0; j <= p; ++j) {
    if (diff[j] == 0) continue;
    omega += binomial_poly(mpz_class(-1), j) * mpq_class(diff[j]);
  }
  return omega;
}

}  // namespace

int HStarVector::top_nonzero() const {
  for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i)
    if (h[i] != 0) return i;
  return 0;
}

mpz_class HStarVector::sum() const {
  mpz_class out = 0;
  for (const auto& v : h) out += v;
  return out;
}

std::vector<mpz_class> descent_tallies(const Poset& P) {
  const int p = P.size();
  std::array<std::uint64_t, kMaxElements> counts{};
  for_each_linear_extension(P, [&](std::span<const std::uint8_t> word) {
    int des = 0;
    for (int i = 0; i + 1 < p; ++i)
      if (word[i] > word[i + 1]) ++des;
    ++counts[des];
  });
  std::vector<mpz_class> tallies(p);
  for (int d = 0; d < p; ++d)
    tallies[d] = mpz_class(static_cast<unsigned long>(counts[d]));
  return tallies;
}

RatPolynomial order_polynomial(const Poset& P, OmegaAlgorithm alg) {
  if (alg == OmegaAlgorithm::kAuto)
    alg = P.size() <= 6 ? OmegaAlgorithm::kLinear : OmegaAlgorithm::kIdeals;
  return alg == OmegaAlgorithm::kLinear ? order_polynomial_linear(P)
                                        : order_polynomial_ideals(P);
}

RatPolynomial ehrhart_polynomial(const Poset& P, OmegaAlgorithm alg) {
  return order_polynomial(P, alg).shifted(1);
}

HStarVector hstar_from_ehrhart(const RatPolynomial& ehr, int p) {
  if (ehr.degree() != p)
    throw DegreeMismatch("expected degree " + std::to_string(p) + ", got " +
                         std::to_string(ehr.degree()));
  HStarVector out;
  out.h.assign(p + 1, mpz_class(0));
  // At t = k only h_0..h_k contribute: C(p + k - i, p) vanishes for i > k.
  for (int k = 0; k <= p; ++k) {
    mpq_class rhs = ehr.eval(mpq_class(k));
    for (int i = 0; i < k; ++i)
      rhs -= mpq_class(out.h[i] *
                       binom(static_cast<unsigned long>(p + k - i),
                             static_cast<unsigned long>(p)));
    if (rhs.get_den() != 1)
      throw NotInteger("ehr(" + std::to_string(k) +
                       ") is not an integer: " + rational_token(rhs));
    if (rhs < 0)
      throw NegativeEntry("h*[" + std::to_string(k) +
                          "] is negative: " + rhs.get_num().get_str());
    out.h[k] = rhs.get_num();
  }
  return out;
}

HStarVector hstar_from_descents(const Poset& P) {
  HStarVector out;
  out.h = descent_tallies(P);
  out.h.emplace_back(0);  // h_p: a p-letter word has at most p-1 descents
  return out;
}

bool is_ehrhart_positive(const RatPolynomial& ehr) {
  for (const auto& c : ehr.coeffs())
    if (c < 0) return false;
  return true;
}

}  // namespace ordercheck
