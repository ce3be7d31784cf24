#pragma once

#include <string>
#include <vector>

#include "varcmp/aux_functions.hpp"
#include "varcmp/check_outcome.hpp"
#include "varcmp/distributions.hpp"
#include "varcmp/exact_poly.hpp"

namespace varcmp {

/// One inequality form: lhs and rhs as displayed, margin signed so that a
/// positive value means the displayed inequality holds.
struct FormCheck {
  std::string claim_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Status status = Status::NotApplicable;
  std::string note;
};

struct StepReport {
  int d1 = 0;
  int d2 = 0;
  std::vector<FormCheck> forms;
  bool exploratory = false;

  /// Every applicable form passed (not-applicable forms are skipped).
  bool pass() const noexcept;
  std::vector<std::string> forms_checked() const;
  const FormCheck* find(const std::string& claim_id) const noexcept;
};

/// Tolerance passed to quad_beta_integral, relative to the product side.
constexpr double kStepQuadRelTol = 1e-13;

/// Evaluates every displayed step inequality that applies to (d1, d2), d1 in 1..4.
///
/// Integral sides use quad_beta_integral. Product-vs-integral forms carry
/// relative margins, log-forms carry absolute margins. Forms whose region
/// does not hold (e.g. the lower-band step when D <= C) are NotApplicable.
///   all d1:  May1311 (the full reduction of the monotone step), May14z1
///   d1 = 1:  gfd
///   d1 = 2:  L11, L11-H2
///   d1 = 3:  RTD3, RTD3-H3; with D > C > 0: May14z2, May16hg, May17h
///   d1 = 4:  RTD, RTD-H4;   with D > C > 0: May14z2, RTD2, RTD2-R4
StepReport check_step_inequalities(const FParams& p, const Strictness& strict = {});

/// Sign claims on the endpoint coefficients.
///   d1 = 1: (d2+2)A > 1, 3(d2+2)A - 2 - d2 B > 0, d2 B > (d2+2)A
///   d1 = 3: (d2+2)C > d2 D (applicable when D > 0)
StepReport coefficient_sign_checks(int d1, int d2, const Strictness& strict = {});

enum class Direction { Increasing, Decreasing };

/// Strict monotonicity of f over ys (in order). Each sample with a published
/// table value must match it within the table tolerance.
CheckOutcome monotone_table_check(AuxFn f, const std::vector<int>& ys, Direction direction);

/// Sign of f' at y from a central difference with step h, checked against
/// the expected sign. Margin is the signed slope; tolerance is applied by
/// comparing with the analytic derivative where one exists.
CheckOutcome derivative_sign_check(AuxFn f, double y, Direction direction, double h = 1e-5);

/// The log-series bounds L1, L2, L3, L4 < 0 and Q4 > 0 at y.
CheckOutcome bound_sign_check(AuxFn f, double y);

/// V(y) direct vs G1(y)/G2(y): margin = rel_tol - |V - G1/G2| / |V|;
/// requires G1 < 0, G2 < 0, V > 0 as well. y >= 25.
CheckOutcome rational_V_consistency(double y, double rel_tol = 1e-9);

/// shifted_expansion(f, shift) wrapped as an outcome; passes iff all
/// coefficients are positive and (when given) equal to the expected list.
CheckOutcome expansion_check(PolyFamily f, long shift, const std::vector<long long>& expected = {});

/// poly_value(f, first + i) == expected[i] for every i, exactly.
CheckOutcome poly_table_check(PolyFamily f, long first, const std::vector<long long>& expected);

/// For d2 in 5..d2_max: (D > 0 and d_exceeds_c) iff d2 >= first, and the
/// exact verdict agrees with comparing the floating-point D and C.
CheckOutcome region_boundary_check(int d1, int first, int d2_max);

/// Step forms and (for d1 = 1, 3) coefficient signs at one (d1, d2), one
/// outcome per form with claim ids "step/<form>" and "coef/<claim>".
std::vector<CheckOutcome> step_outcomes(const FParams& p, const Strictness& strict = {});

/// The parameter-free part of the d1 = 1..4 programs: published tables,
/// sampled monotonicity beyond the tables, derivative and bound signs,
/// exact polynomial tables and expansions, region boundaries, and (d1 = 3)
/// the V = G1/G2 cross-check.
std::vector<CheckOutcome> table_program(int d1);

struct SeriesForms {
  double J = 0.0;
  double K = 0.0;
};

/// J_{d1}(y), K_{d1}(y) for even d1 >= 6: the log-form plus the finite
/// binomial sums of the even-d1 reduction. DomainError if a log argument is
/// not positive.
SeriesForms series_forms_even(int d1, double y);

/// Both sides of the falling-factorial sufficient conditions for odd d1 >= 5:
///   RT:  2A < d2 sum_{n <= floor(d1/2 - 1)} ...
///   ASD: 2C > d2 sum_{n <= ceil(d1/2 - 1)} ... (only when D > C > 0)
/// The report is exploratory.
StepReport falling_factorial_bounds_odd(int d1, int d2, const Strictness& strict = {});

}  // namespace varcmp
