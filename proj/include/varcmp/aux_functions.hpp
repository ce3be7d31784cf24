#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace varcmp {

/// Auxiliary one-variable functions used by the d1 = 1..4 step arguments.
///
/// H1..H3 are the log-forms H_x(y) = (y/2 + 1) ln(1 + p_x(y)) with
/// p_x(y) = (x/y)(1 + sqrt(2(x+y) / (x(y-2)))); H4 and R4 are the d1 = 4
/// log-forms built from w(y) = sqrt((4+y) / (2(y-2))) with +w and -w.
/// L1..L4 and Q4 are the cubic/quadratic log-series bounds on the
/// derivatives (L_x >= H_x', L4 >= -H4', Q4 <= -R4'). Kfun is the d1 = 1
/// coefficient ratio. V, G1, G2 belong to the d1 = 3 lower-band argument.
enum class AuxFn { H1, H2, H3, H4, R4, Kfun, V, G1, G2, L1, L2, L3, L4, Q4 };

std::string_view to_string(AuxFn f) noexcept;
std::optional<AuxFn> parse_aux_fn(std::string_view name) noexcept;

/// Smallest admissible argument (inclusive).
double aux_domain_min(AuxFn f) noexcept;

/// Direct evaluation; DomainError below aux_domain_min(f) or for non-finite y.
double aux_eval(AuxFn f, double y);

/// Analytic derivative of H1..H4 and R4; DomainError for other functions.
double aux_derivative(AuxFn f, double y);

// Building blocks, exposed for tests and reports.
double p_x(int x, double y);
double r_fn(double y);
double s1(double y);  ///< sqrt((y+1)/(y-4)), y > 4
double s2(double y);  ///< sqrt((y+3)/(y-2)), y > 2
double c_of_y(double y);  ///< C at d1 = 3, d2 = y (no zero clamp)
double d_of_y(double y);  ///< D at d1 = 3, d2 = y (no zero clamp)

/// A value printed in a reference table, with its comparison tolerance.
struct TableValue {
  int y;
  double value;
};

struct ReferenceTable {
  std::vector<TableValue> values;
  double tolerance;  ///< absolute unless `relative`
  bool relative;
};

/// Published tables for H2, H3, H4 (absolute 1e-5) and G1 (relative 1e-5).
std::optional<ReferenceTable> reference_table(AuxFn f);

}  // namespace varcmp
