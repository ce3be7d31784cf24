#pragma once

// Special functions in binary64: log-gamma, log-beta, the regularized
// incomplete beta and lower incomplete gamma functions, and the standard
// normal CDF. All functions are pure and reentrant.

namespace varcmp {

/// Stopping rule and iteration cap for the continued fractions and series.
struct Accuracy {
  double abs_tol = 1e-300;
  double rel_tol = 1e-15;
  int max_iter = 2000;

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_iter >= 50.
  void validate() const;
};

/// ln Gamma(x) for x > 0 (Lanczos, g = 607/128, 15 terms).
double log_gamma(double x);

/// ln B(a, b) for a, b > 0. Uses a Stirling-difference form when the larger
/// argument is big, so ln Gamma(b) - ln Gamma(a+b) does not cancel.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b).
/// Continued fraction evaluated by modified Lentz, with the symmetry flip
/// I_x(a,b) = 1 - I_{1-x}(b,a) when x > (a+1)/(a+b+2).
/// Throws DomainError outside 0 <= x <= 1, a > 0, b > 0 and ConvergenceError
/// if the iteration cap is hit.
double reg_inc_beta(double x, double a, double b, const Accuracy& acc = {});

/// Regularized lower incomplete gamma P(s, x); series for x < s + 1,
/// Lentz continued fraction for the complement otherwise.
double reg_lower_gamma(double s, double x, const Accuracy& acc = {});

/// Standard normal CDF.
double std_normal_cdf(double z);

}  // namespace varcmp
