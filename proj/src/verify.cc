#include "ordercheck/verify.hpp"

#include "ordercheck/extensions.hpp"
#include "ordercheck/rational_poly.hpp"
#include "ordercheck/sturm.hpp"

namespace ordercheck {

std::string VerificationRecord::to_jsonl() const {
  std::string out;
  out.reserve(256);
  out += "{\"canon\":\"";
  out += canon;
  out += "\",\"p\":";
  out += std::to_string(p);
  out += ",\"num_linear_extensions\":\"";
  out += num_linear_extensions.get_str();
  out += "\",\"ehr_coeffs\":[";
  for (std::size_t i = 0; i < ehr_coeffs.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += rational_token(ehr_coeffs[i]);
    out += '"';
  }
  out += "],\"hstar\":[";
  for (std::size_t i = 0; i < hstar.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += hstar[i].get_str();
    out += '"';
  }
  out += "],\"ehrhart_positive\":";
  out += ehrhart_positive ? "true" : "false";
  out += ",\"real_rooted\":";
  out += real_rooted ? "true" : "false";
  out += ",\"log_concave\":";
  out += log_concave ? "true" : "false";
  out += ",\"unimodal\":";
  out += unimodal ? "true" : "false";
  out += ",\"narrow\":";
  out += narrow ? "true" : "false";
  out += ",\"graded\":";
  out += graded ? "true" : "false";
  out += '}';
  return out;
}

VerificationRecord verify_poset(const Poset& P, OmegaAlgorithm alg) {
  const int p = P.size();
  VerificationRecord rec;
  rec.p = p;
  rec.canon = to_hex(P.canonical_key());

  const RatPolynomial ehr = ehrhart_polynomial(P, alg);
  const HStarVector by_solve = hstar_from_ehrhart(ehr, p);
  const HStarVector by_descents = hstar_from_descents(P);
  if (!(by_solve == by_descents))
    throw HStarMismatch("h* routes disagree for canon " + rec.canon);

  rec.ehr_coeffs.assign(p + 1, mpq_class(0));
  for (int k = 0; k <= p; ++k) rec.ehr_coeffs[k] = ehr.coeff(k);
  rec.hstar = by_descents.h;
  rec.num_linear_extensions = by_descents.sum();

  if (rec.hstar[0] != 1)
    throw InternalInvariant("h*[0] != 1 for canon " + rec.canon);

  const int top = by_descents.top_nonzero();
  const std::span<const mpz_class> truncated(rec.hstar.data(), top + 1);
  IntPolynomial hpoly(truncated.begin(), truncated.end());

  rec.ehrhart_positive = is_ehrhart_positive(ehr);
  rec.real_rooted = is_real_rooted(hpoly);
  rec.log_concave = is_log_concave(truncated);
  rec.unimodal = is_unimodal(truncated);
  rec.narrow = P.is_narrow();
  rec.graded = P.is_graded();

  if (rec.real_rooted && !rec.log_concave)
    throw InternalInvariant("real-rooted h* not log-concave, canon " +
                            rec.canon);
  bool all_positive = true;
  for (const auto& v : truncated)
    if (v <= 0) all_positive = false;
  if (rec.log_concave && all_positive && !rec.unimodal)
    throw InternalInvariant("log-concave positive h* not unimodal, canon " +
                            rec.canon);
  return rec;
}

}  // namespace ordercheck
