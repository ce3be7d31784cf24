#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace varcmp {

/// Integer polynomial with unbounded coefficients, stored in ascending degree.
class ExactPoly {
 public:
  ExactPoly(std::string name, std::vector<mpz_class> coeffs);

  const std::string& name() const noexcept { return name_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Exact Horner evaluation.
  mpz_class operator()(const mpz_class& n) const;

  /// p(shift + r) expanded in r (Taylor shift, exact).
  ExactPoly shifted(const mpz_class& shift) const;

  /// True when every coefficient is strictly positive, which certifies
  /// p(r) > 0 for all real r >= 0.
  bool all_coefficients_positive() const;

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::string name_;
  std::vector<mpz_class> coeffs_;
};

/// The transcribed polynomial families used by the d1 = 3, 4 arguments.
///  P3, P4   - the D > C criterion after substituting d1 = 3, 4
///  T1, T2   - numerator pieces of the H4 derivative bound
///  U1, U2   - numerator pieces of the H3 derivative bound
///  Quintic  - 10^4 [(y-4)(2y^2-8y-23)^2 - 1.93^2 (y+1)(y^2-6y+8)^2]
enum class PolyFamily { P3, P4, T1, T2, U1, U2, Quintic };

const ExactPoly& family_poly(PolyFamily f);
std::string_view to_string(PolyFamily f) noexcept;

/// Throws DomainError for an unknown family name.
PolyFamily parse_family(std::string_view name);

mpz_class poly_value(PolyFamily f, const mpz_class& n);
mpz_class poly_value(std::string_view family, const mpz_class& n);

struct ShiftedExpansion {
  ExactPoly poly;
  bool all_positive;
};

ShiftedExpansion shifted_expansion(PolyFamily f, const mpz_class& shift);
ShiftedExpansion shifted_expansion(std::string_view family, const mpz_class& shift);

}  // namespace varcmp
