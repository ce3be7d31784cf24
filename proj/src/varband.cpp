#include "varcmp/varband.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <string>

#include "varcmp/errors.hpp"
#include "varcmp/specfun.hpp"

namespace varcmp {

namespace {

// For the band of F(d1, m) with m = d2 or d2 + 2, the beta-space upper and
// lower limits are d1 (1 +- s) / (d1 (1 +- s) + (m - 2)), with
// s^2 = 2 (d1 + m - 2) / (d1 (m - 4)). The lower one is 0 when 1 - s <= 0.
struct BetaLimits {
  double upper;
  double lower;
};

BetaLimits beta_limits(long long d1, long long m) {
  const long long den = d1 * (m - 4);
  const long long num = 2 * (d1 + m - 2);
  const double s = std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  const double fd1 = static_cast<double>(d1);
  const double scale = static_cast<double>(m - 2);

  const double up = fd1 * (1.0 + s);
  BetaLimits out{up / (up + scale), 0.0};

  // 1 - s = (den - num) / den / (1 + s); the sign test is exact.
  const long long gap = den - num;
  if (gap > 0) {
    const double one_minus_s = static_cast<double>(gap) / static_cast<double>(den) / (1.0 + s);
    const double lo = fd1 * one_minus_s;
    out.lower = lo / (lo + scale);
  }
  return out;
}

void require_band_params(const FParams& p) {
  p.validate();
  if (p.d2 < 5) {
    throw MomentUndefinedError("variance undefined for d2 ≤ 4 (d2=" + std::to_string(p.d2) + ")");
  }
}

double f_band_probability(const FParams& p) {
  const BetaLimits lim = beta_limits(p.d1, p.d2);
  const double a = 0.5 * p.d1;
  const double b = 0.5 * p.d2;
  const double upper = reg_inc_beta(lim.upper, a, b);
  const double lower = lim.lower > 0.0 ? reg_inc_beta(lim.lower, a, b) : 0.0;
  return upper - lower;
}

}  // namespace

std::string_view to_string(ConditionRegion r) noexcept {
  switch (r) {
    case ConditionRegion::Cond1_CZero:
      return "Cond1";
    case ConditionRegion::Cond2_CPos_DZero:
      return "Cond2";
    case ConditionRegion::Cond3_DPos:
      return "Cond3";
  }
  return "Cond1";
}

ConditionRegion classify_region(const FParams& p) {
  require_band_params(p);
  const long long d1 = p.d1;
  const long long d2 = p.d2;
  if (d1 * (d2 - 4) > 2 * (d1 + d2 - 2)) return ConditionRegion::Cond3_DPos;
  if (d1 * (d2 - 2) > 2 * (d1 + d2)) return ConditionRegion::Cond2_CPos_DZero;
  return ConditionRegion::Cond1_CZero;
}

Endpoints band_endpoints(const FParams& p) {
  require_band_params(p);
  const BetaLimits at_d2 = beta_limits(p.d1, p.d2);
  const BetaLimits at_d2_plus_2 = beta_limits(p.d1, static_cast<long long>(p.d2) + 2);
  return Endpoints{at_d2_plus_2.upper, at_d2.upper, at_d2_plus_2.lower, at_d2.lower,
                   classify_region(p)};
}

bool d_exceeds_c(const FParams& p) {
  require_band_params(p);
  if (p.d1 < 3) {
    throw DomainError("d_exceeds_c: the polynomial criterion is only established for d1 >= 3");
  }
  const mpz_class d1 = p.d1;
  const mpz_class d2 = p.d2;
  const mpz_class lhs = d1 * (d2 - 2) * (d1 + d2) * (d2 - 4) * (d2 - 4);
  const mpz_class t = d1 + d2 - 2;
  const mpz_class rhs = 2 * d2 * d2 * t * t;
  return lhs > rhs;
}

double normal_baseline() { return std::erf(1.0 / std::numbers::sqrt2); }

VariationBand variation_band(const Dist& d) {
  if (const auto* f = std::get_if<FParams>(&d)) {
    require_band_params(*f);
    const double e = f_mean(*f);
    const double sd = std::sqrt(f_variance(*f));
    return VariationBand{std::fmax(0.0, e - sd), e + sd, f_band_probability(*f)};
  }
  if (const auto* c = std::get_if<ChiSquareParams>(&d)) {
    c->validate();
    const double k = c->k;
    const double sd = std::sqrt(2.0 * k);
    const double lower = std::fmax(0.0, k - sd);
    const double upper = k + sd;
    const double prob =
        reg_lower_gamma(0.5 * k, 0.5 * upper) - (lower > 0.0 ? reg_lower_gamma(0.5 * k, 0.5 * lower) : 0.0);
    return VariationBand{lower, upper, prob};
  }
  return VariationBand{-1.0, 1.0, normal_baseline()};
}

double variation_probability(const Dist& d) { return variation_band(d).prob; }

CheckOutcome check_bound(const FParams& p, const Strictness& strict) {
  CheckOutcome out;
  out.claim_id = "bound";
  out.d1 = p.d1;
  out.d2 = p.d2;
  out.margin = variation_probability(p) - normal_baseline();
  out.status = classify_margin(out.margin, strict);
  out.exploratory = p.d1 > 4;
  return out;
}

CheckOutcome check_monotone_step(const FParams& p, const Strictness& strict) {
  CheckOutcome out;
  out.claim_id = "monotone";
  out.d1 = p.d1;
  out.d2 = p.d2;
  out.margin = variation_probability(p) - variation_probability(FParams{p.d1, p.d2 + 2});
  out.status = classify_margin(out.margin, strict);
  out.exploratory = p.d1 > 4;
  return out;
}

CheckOutcome check_limit(int d1, int d2_large, double tolerance) {
  if (d2_large < 1000) throw DomainError("check_limit: d2_large must be at least 1000");
  if (!(tolerance > 0.0)) throw DomainError("check_limit: tolerance must be positive");
  const double f = variation_probability(FParams{d1, d2_large});
  const double chi = variation_probability(ChiSquareParams{d1});
  CheckOutcome out;
  out.claim_id = "limit";
  out.d1 = d1;
  out.d2 = d2_large;
  out.margin = tolerance - std::fabs(f - chi);
  out.status = classify_margin(out.margin, Strictness{0.0});
  out.note = "chi2 band " + std::to_string(chi);
  return out;
}

}  // namespace varcmp
