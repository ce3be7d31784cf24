#pragma once

#include <string_view>

#include "varcmp/check_outcome.hpp"
#include "varcmp/distributions.hpp"

namespace varcmp {

/// Zero pattern of the lower endpoints C and D.
enum class ConditionRegion {
  Cond1_CZero,      ///< C = 0 (and so D = 0)
  Cond2_CPos_DZero, ///< C > 0, D = 0
  Cond3_DPos,       ///< D > 0 (and so C > 0)
};

std::string_view to_string(ConditionRegion r) noexcept;

/// Exact classification from the integer parameters.
/// C > 0 iff d1 (d2 - 2) > 2 (d1 + d2); D > 0 iff d1 (d2 - 4) > 2 (d1 + d2 - 2).
ConditionRegion classify_region(const FParams& p);

/// Beta-space images of the one-sd band limits.
///
/// B and D are the upper and lower band limits of F(d1, d2) mapped through
/// x -> d1 x / (d1 x + d2); A and C are the same limits for F(d1, d2 + 2).
/// A lower limit at or below zero maps to exactly 0.
struct Endpoints {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  ConditionRegion region = ConditionRegion::Cond1_CZero;
};

/// Requires d2 >= 5.
Endpoints band_endpoints(const FParams& p);

/// d1 (d2-2)(d1+d2)(d2-4)^2 > 2 d2^2 (d1+d2-2)^2, in exact integer arithmetic.
/// Equivalent to D > C for d1 >= 3; rejects d1 < 3 with DomainError.
bool d_exceeds_c(const FParams& p);

/// Band [max(0, E - sd), E + sd] in x-space (for the normal: [-1, 1]) and its mass.
struct VariationBand {
  double lower = 0.0;
  double upper = 0.0;
  double prob = 0.0;
};

VariationBand variation_band(const Dist& d);

/// P{|X - E X| <= sd(X)}. For F this is I_B(d1/2, d2/2) - I_D(d1/2, d2/2).
double variation_probability(const Dist& d);

/// 2 Phi(1) - 1.
double normal_baseline();

/// margin = F_{d1,d2} - (2 Phi(1) - 1). Rows with d1 > 4 are flagged exploratory.
CheckOutcome check_bound(const FParams& p, const Strictness& strict = {});

/// margin = F_{d1,d2} - F_{d1,d2+2}. Rows with d1 > 4 are flagged exploratory.
CheckOutcome check_monotone_step(const FParams& p, const Strictness& strict = {});

/// margin = tolerance - |F_{d1,d2_large} - chi-square(d1) band probability|.
/// Requires d2_large >= 1000.
CheckOutcome check_limit(int d1, int d2_large, double tolerance = 1e-3);

}  // namespace varcmp
