#pragma once

#include <variant>

namespace varcmp {

/// F(d1, d2): numerator and denominator degrees of freedom.
struct FParams {
  int d1 = 1;
  int d2 = 5;

  /// Throws DomainError unless d1 >= 1 and d2 >= 1.
  void validate() const;
  bool has_mean() const noexcept { return d2 > 2; }
  bool has_variance() const noexcept { return d2 > 4; }

  friend bool operator==(const FParams&, const FParams&) = default;
};

struct ChiSquareParams {
  int k = 1;

  void validate() const;
  friend bool operator==(const ChiSquareParams&, const ChiSquareParams&) = default;
};

struct StdNormal {
  friend bool operator==(const StdNormal&, const StdNormal&) = default;
};

using Dist = std::variant<FParams, ChiSquareParams, StdNormal>;

/// d2 / (d2 - 2); MomentUndefinedError when d2 <= 2.
double f_mean(const FParams& p);

/// 2 d2^2 (d1 + d2 - 2) / (d1 (d2 - 2)^2 (d2 - 4)); MomentUndefinedError when d2 <= 4.
double f_variance(const FParams& p);

double mean(const Dist& d);
double variance(const Dist& d);

/// P{X <= x}. For F and chi-square, x <= 0 gives 0 and x = +inf gives exactly 1.
/// The F branch is I_{d1 x / (d1 x + d2)}(d1/2, d2/2).
double cdf(const Dist& d, double x);

}  // namespace varcmp
