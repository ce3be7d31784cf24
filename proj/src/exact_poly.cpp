#include "varcmp/exact_poly.hpp"

#include <array>
#include <utility>

#include "varcmp/errors.hpp"

namespace varcmp {

namespace {

std::vector<mpz_class> ints(std::initializer_list<const char*> decimal) {
  std::vector<mpz_class> out;
  out.reserve(decimal.size());
  for (const char* d : decimal) out.emplace_back(d, 10);
  return out;
}

struct FamilyEntry {
  PolyFamily family;
  std::string_view name;
  ExactPoly poly;
};

const std::array<FamilyEntry, 7>& families() {
  static const std::array<FamilyEntry, 7> table = {{
      {PolyFamily::P3, "P3", ExactPoly("P3", ints({"-288", "192", "4", "-25", "1"}))},
      {PolyFamily::P4, "P4", ExactPoly("P4", ints({"-256", "192", "-20", "-16", "1"}))},
      {PolyFamily::T1, "T1", ExactPoly("T1", ints({"2048", "1536", "-1040", "-368", "10", "3"}))},
      {PolyFamily::T2, "T2", ExactPoly("T2", ints({"-2048", "3072", "-112", "-484", "8", "3"}))},
      {PolyFamily::U1, "U1", ExactPoly("U1", ints({"-396", "-87", "19"}))},
      // 2 (-216 - 264 y + 9 y^2 + 1.5 y^3)
      {PolyFamily::U2, "U2", ExactPoly("U2", ints({"-432", "-528", "18", "3"}))},
      {PolyFamily::Quintic, "Quintic",
       ExactPoly("Quintic",
                 ints({"-23543936", "-8238032", "6438956", "-489960", "-70261", "2751"}))},
  }};
  return table;
}

}  // namespace

ExactPoly::ExactPoly(std::string name, std::vector<mpz_class> coeffs)
    : name_(std::move(name)), coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

mpz_class ExactPoly::operator()(const mpz_class& n) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

ExactPoly ExactPoly::shifted(const mpz_class& shift) const {
  std::vector<mpz_class> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += shift * c[j + 1];
  }
  return ExactPoly(name_ + "(" + shift.get_str() + "+r)", std::move(c));
}

bool ExactPoly::all_coefficients_positive() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) <= 0) return false;
  }
  return true;
}

const ExactPoly& family_poly(PolyFamily f) {
  for (const auto& e : families()) {
    if (e.family == f) return e.poly;
  }
  throw DomainError("unknown polynomial family");
}

std::string_view to_string(PolyFamily f) noexcept {
  for (const auto& e : families()) {
    if (e.family == f) return e.name;
  }
  return "?";
}

PolyFamily parse_family(std::string_view name) {
  for (const auto& e : families()) {
    if (e.name == name) return e.family;
  }
  throw DomainError("unknown polynomial family: " + std::string(name));
}

mpz_class poly_value(PolyFamily f, const mpz_class& n) { return family_poly(f)(n); }

mpz_class poly_value(std::string_view family, const mpz_class& n) {
  return poly_value(parse_family(family), n);
}

ShiftedExpansion shifted_expansion(PolyFamily f, const mpz_class& shift) {
  ExactPoly p = family_poly(f).shifted(shift);
  const bool positive = p.all_coefficients_positive();
  return ShiftedExpansion{std::move(p), positive};
}

ShiftedExpansion shifted_expansion(std::string_view family, const mpz_class& shift) {
  return shifted_expansion(parse_family(family), shift);
}

}  // namespace varcmp
