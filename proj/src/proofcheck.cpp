#include "varcmp/proofcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "varcmp/errors.hpp"
#include "varcmp/oracle.hpp"
#include "varcmp/varband.hpp"

namespace varcmp {

namespace {

double rel_scale(double lhs, double rhs) {
  return std::max({std::fabs(lhs), std::fabs(rhs), std::numeric_limits<double>::min()});
}

// Claim lhs < rhs, margin relative to the larger side.
FormCheck less_rel(std::string id, double lhs, double rhs, const Strictness& strict) {
  FormCheck f{std::move(id), lhs, rhs, (rhs - lhs) / rel_scale(lhs, rhs), Status::Fail, ""};
  f.status = classify_margin(f.margin, strict);
  return f;
}

FormCheck greater_rel(std::string id, double lhs, double rhs, const Strictness& strict) {
  FormCheck f{std::move(id), lhs, rhs, (lhs - rhs) / rel_scale(lhs, rhs), Status::Fail, ""};
  f.status = classify_margin(f.margin, strict);
  return f;
}

FormCheck greater_abs(std::string id, double lhs, double rhs, const Strictness& strict) {
  FormCheck f{std::move(id), lhs, rhs, lhs - rhs, Status::Fail, ""};
  f.status = classify_margin(f.margin, strict);
  return f;
}

FormCheck not_applicable(std::string id, std::string note) {
  FormCheck f;
  f.claim_id = std::move(id);
  f.status = Status::NotApplicable;
  f.note = std::move(note);
  return f;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// x^a (1-x)^b, 0 when x = 0.
double beta_kernel(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  return std::exp(a * std::log(x) + b * std::log1p(-x));
}

// Signed integral of t^(a-1)(1-t)^(b-1) from lo to hi.
double signed_integral(double a, double b, double lo, double hi, double tol) {
  if (lo == hi) return 0.0;
  if (lo < hi) return quad_beta_integral(a, b, lo, hi, tol).value;
  return -quad_beta_integral(a, b, hi, lo, tol).value;
}

bool lower_step_applies(const FParams& p, const Endpoints& e) {
  return p.d1 >= 3 && e.region == ConditionRegion::Cond3_DPos && d_exceeds_c(p);
}

std::string lower_step_reason(const Endpoints& e) {
  if (e.C == 0.0) return "C = 0";
  if (e.D == 0.0) return "D = 0";
  return "D <= C";
}

double falling(double x, int n) {
  double v = 1.0;
  for (int i = 0; i < n; ++i) v *= x - i;
  return v;
}

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// d2 sum_{n=0}^{top} (x)_n ((1-lo)/lo)^n / n! sum_l (-1)^l C(n,l)/(d2/2+l) [1 - ((1-hi)/(1-lo))^(d2/2+l)]
double falling_factorial_sum(double x, int top, int d2, double lo, double hi) {
  const double half = 0.5 * d2;
  const double ratio = (1.0 - hi) / (1.0 - lo);
  const double odds = (1.0 - lo) / lo;
  double total = 0.0;
  double fact = 1.0;
  for (int n = 0; n <= top; ++n) {
    if (n > 0) fact *= n;
    double inner = 0.0;
    for (int l = 0; l <= n; ++l) {
      const double sign = (l % 2 == 0) ? 1.0 : -1.0;
      inner += sign * binom(n, l) / (half + l) * -std::expm1((half + l) * std::log(ratio));
    }
    total += falling(x, n) * std::pow(odds, n) / fact * inner;
  }
  return d2 * total;
}

}  // namespace

bool StepReport::pass() const noexcept {
  bool any = false;
  for (const auto& f : forms) {
    if (f.status == Status::NotApplicable) continue;
    if (f.status != Status::Pass) return false;
    any = true;
  }
  return any;
}

std::vector<std::string> StepReport::forms_checked() const {
  std::vector<std::string> out;
  for (const auto& f : forms) {
    if (f.status != Status::NotApplicable) out.push_back(f.claim_id);
  }
  return out;
}

const FormCheck* StepReport::find(const std::string& claim_id) const noexcept {
  for (const auto& f : forms) {
    if (f.claim_id == claim_id) return &f;
  }
  return nullptr;
}

StepReport check_step_inequalities(const FParams& p, const Strictness& strict) {
  if (p.d1 < 1 || p.d1 > 4) {
    throw DomainError("check_step_inequalities: d1 must be 1..4 (d1=" + std::to_string(p.d1) + ")");
  }
  const Endpoints e = band_endpoints(p);
  const double a = 0.5 * p.d1;
  const double b = 0.5 * p.d2;
  const double d2 = p.d2;
  const double A = e.A, B = e.B, C = e.C, D = e.D;

  StepReport r;
  r.d1 = p.d1;
  r.d2 = p.d2;

  const double prod_a = 2.0 * beta_kernel(A, a, b);
  const double prod_c = 2.0 * beta_kernel(C, a, b);
  const double tol_a = kStepQuadRelTol * prod_a / d2;
  const double int_ab = d2 * signed_integral(a, b, A, B, tol_a);
  const double int_cd =
      (C == 0.0 && D == 0.0) ? 0.0
                             : d2 * signed_integral(a, b, C, D, kStepQuadRelTol * std::max(prod_c, prod_a) / d2);

  r.forms.push_back(less_rel("May1311", prod_a + int_cd, int_ab + prod_c, strict));
  r.forms.push_back(less_rel("May14z1", prod_a, int_ab, strict));

  const bool lower = lower_step_applies(p, e);
  if (lower) {
    r.forms.push_back(greater_rel("May14z2", prod_c, int_cd, strict));
  } else {
    r.forms.push_back(not_applicable("May14z2", lower_step_reason(e)));
  }

  const double pow_b = std::pow(1.0 - B, 0.5 * d2);
  const double pow_a = std::pow(1.0 - A, 0.5 * d2 + 1.0);

  switch (p.d1) {
    case 1: {
      r.forms.push_back(less_rel("gfd", (3.0 * (d2 + 2.0) * A - 2.0 - d2 * B) * pow_b,
                                 2.0 * ((d2 + 2.0) * A - 1.0) * pow_a, strict));
      r.forms.push_back(less_rel("L11", pow_b, pow_a, strict));
      r.forms.push_back(greater_abs("L11-H1", aux_eval(AuxFn::H1, d2 - 2.0), aux_eval(AuxFn::H1, d2), strict));
      break;
    }
    case 2: {
      r.forms.push_back(less_rel("L11", pow_b, pow_a, strict));
      r.forms.push_back(greater_abs("L11-H2", aux_eval(AuxFn::H2, d2 - 2.0), aux_eval(AuxFn::H2, d2), strict));
      break;
    }
    case 3: {
      r.forms.push_back(less_rel("RTD3", pow_b, pow_a, strict));
      r.forms.push_back(greater_abs("RTD3-H3", aux_eval(AuxFn::H3, d2 - 2.0), aux_eval(AuxFn::H3, d2), strict));
      if (lower) {
        const double pow_d = std::pow(1.0 - D, 0.5 * d2);
        const double pow_c = std::pow(1.0 - C, 0.5 * d2 + 1.0);
        r.forms.push_back(greater_rel("May16hg", (2.0 * (1.0 + C) + d2 * (C + D)) * pow_d,
                                      2.0 * ((d2 + 2.0) * C + 1.0) * pow_c, strict));
        const double lhs = C / (1.0 - C) * (1.0 - C / (2.0 * (1.0 - C)));
        const double rhs = ((d2 + 2.0) * C - d2 * D) / (2.0 * (1.0 + C) + d2 * (C + D)) +
                           d2 * (D - C) / (2.0 * (1.0 - D));
        r.forms.push_back(greater_abs("May17h", lhs, rhs, strict));
      } else {
        const std::string why = lower_step_reason(e);
        r.forms.push_back(not_applicable("May16hg", why));
        r.forms.push_back(not_applicable("May17h", why));
      }
      break;
    }
    case 4: {
      r.forms.push_back(less_rel("RTD", (d2 * B + 2.0) * pow_b, ((d2 + 2.0) * A + 2.0) * pow_a, strict));
      r.forms.push_back(greater_abs("RTD-H4", aux_eval(AuxFn::H4, d2), aux_eval(AuxFn::H4, d2 - 2.0), strict));
      if (lower) {
        const double pow_d = std::pow(1.0 - D, 0.5 * d2);
        const double pow_c = std::pow(1.0 - C, 0.5 * d2 + 1.0);
        r.forms.push_back(
            greater_rel("RTD2", (d2 * D + 2.0) * pow_d, ((d2 + 2.0) * C + 2.0) * pow_c, strict));
        r.forms.push_back(
            greater_abs("RTD2-R4", aux_eval(AuxFn::R4, d2 - 2.0), aux_eval(AuxFn::R4, d2), strict));
      } else {
        const std::string why = lower_step_reason(e);
        r.forms.push_back(not_applicable("RTD2", why));
        r.forms.push_back(not_applicable("RTD2-R4", why));
      }
      break;
    }
    default:
      break;
  }
  return r;
}

StepReport coefficient_sign_checks(int d1, int d2, const Strictness& strict) {
  if (d1 != 1 && d1 != 3) throw DomainError("coefficient_sign_checks: d1 must be 1 or 3");
  const FParams p{d1, d2};
  const Endpoints e = band_endpoints(p);
  const double y = d2;
  StepReport r;
  r.d1 = d1;
  r.d2 = d2;
  if (d1 == 1) {
    r.forms.push_back(greater_abs("(d2+2)A>1", (y + 2.0) * e.A, 1.0, strict));
    r.forms.push_back(greater_abs("3(d2+2)A-2-d2B>0", 3.0 * (y + 2.0) * e.A - 2.0 - y * e.B, 0.0, strict));
    r.forms.push_back(greater_abs("d2B>(d2+2)A", y * e.B, (y + 2.0) * e.A, strict));
  } else if (e.D > 0.0) {
    r.forms.push_back(greater_abs("(d2+2)C>d2D", (y + 2.0) * e.C, y * e.D, strict));
  } else {
    r.forms.push_back(not_applicable("(d2+2)C>d2D", "D = 0"));
  }
  return r;
}

CheckOutcome monotone_table_check(AuxFn f, const std::vector<int>& ys, Direction direction) {
  if (ys.size() < 2) throw DomainError("monotone_table_check: need at least two sample points");
  const auto table = reference_table(f);

  CheckOutcome out;
  out.claim_id = std::string("monotone-") + std::string(to_string(f));
  out.d2 = ys.front();
  double margin = std::numeric_limits<double>::infinity();
  double prev = aux_eval(f, ys.front());
  for (std::size_t i = 1; i < ys.size(); ++i) {
    const double cur = aux_eval(f, ys[i]);
    margin = std::min(margin, direction == Direction::Increasing ? cur - prev : prev - cur);
    prev = cur;
  }
  out.margin = margin;
  out.status = classify_margin(margin, Strictness{});

  int checked = 0;
  if (table) {
    for (int y : ys) {
      for (const auto& tv : table->values) {
        if (tv.y != y) continue;
        const double v = aux_eval(f, y);
        const double err = table->relative ? std::fabs(v - tv.value) / std::fabs(tv.value)
                                           : std::fabs(v - tv.value);
        ++checked;
        if (!(err <= table->tolerance)) {
          out.status = Status::Fail;
          out.note += "table mismatch at y=" + std::to_string(y) + "; ";
        }
      }
    }
  }
  out.note += "y=" + std::to_string(ys.front()) + ".." + std::to_string(ys.back()) +
              (direction == Direction::Increasing ? " increasing" : " decreasing") +
              ", table values checked " + std::to_string(checked);
  return out;
}

CheckOutcome derivative_sign_check(AuxFn f, double y, Direction direction, double h) {
  if (!(h > 0.0)) throw DomainError("derivative_sign_check: step must be positive");
  const bool central = y - h >= aux_domain_min(f);
  const double slope = central ? (aux_eval(f, y + h) - aux_eval(f, y - h)) / (2.0 * h)
                               : (aux_eval(f, y + h) - aux_eval(f, y)) / h;
  CheckOutcome out;
  out.claim_id = std::string("derivative-") + std::string(to_string(f));
  out.margin = direction == Direction::Increasing ? slope : -slope;
  // Central differences at h = 1e-5 carry roundoff near 1e-11 |f|.
  out.status = classify_margin(out.margin, Strictness{1e-9});
  out.note = "y=" + num(y);
  switch (f) {
    case AuxFn::H1:
    case AuxFn::H2:
    case AuxFn::H3:
    case AuxFn::H4:
    case AuxFn::R4: {
      const double exact = aux_derivative(f, y);
      if (std::fabs(exact - slope) > 1e-3 * std::max(1.0, std::fabs(exact))) {
        out.status = Status::Fail;
        out.note += "; finite difference disagrees with analytic derivative";
      }
      if ((direction == Direction::Increasing) != (exact > 0.0)) {
        out.status = Status::Fail;
        out.note += "; analytic derivative has the wrong sign";
      }
      break;
    }
    default:
      break;
  }
  return out;
}

CheckOutcome bound_sign_check(AuxFn f, double y) {
  CheckOutcome out;
  out.claim_id = std::string("bound-") + std::string(to_string(f));
  const double v = aux_eval(f, y);
  switch (f) {
    case AuxFn::L1:
    case AuxFn::L2:
    case AuxFn::L3:
    case AuxFn::L4:
      out.margin = -v;
      break;
    case AuxFn::Q4:
      out.margin = v;
      break;
    default:
      throw DomainError("bound_sign_check: not a derivative bound: " + std::string(to_string(f)));
  }
  out.status = classify_margin(out.margin, Strictness{});
  out.note = "y=" + num(y);
  return out;
}

CheckOutcome rational_V_consistency(double y, double rel_tol) {
  if (!(y >= 25.0)) throw DomainError("rational_V_consistency: need y >= 25");
  const double v = aux_eval(AuxFn::V, y);
  const double g1 = aux_eval(AuxFn::G1, y);
  const double g2 = aux_eval(AuxFn::G2, y);
  const double rel = std::fabs(v - g1 / g2) / std::fabs(v);

  CheckOutcome out;
  out.claim_id = "V=G1/G2";
  out.d1 = 3;
  out.d2 = static_cast<int>(y);
  out.margin = rel_tol - rel;
  out.status = classify_margin(out.margin, Strictness{0.0});
  out.note = "y=" + num(y) + " rel diff " + num(rel);
  if (!(g1 < 0.0) || !(g2 < 0.0) || !(v > 0.0)) {
    out.status = Status::Fail;
    out.note += "; sign program violated (G1<0, G2<0, V>0)";
  }
  return out;
}

CheckOutcome expansion_check(PolyFamily f, long shift, const std::vector<long long>& expected) {
  const ShiftedExpansion s = shifted_expansion(f, mpz_class(shift));
  CheckOutcome out;
  out.claim_id = std::string("expansion-") + std::string(to_string(f));
  out.d2 = static_cast<int>(shift);
  bool ok = s.all_positive;
  if (!expected.empty()) {
    const auto& c = s.poly.coeffs();
    ok = ok && c.size() == expected.size();
    for (std::size_t i = 0; ok && i < c.size(); ++i) ok = c[i] == mpz_class(static_cast<long>(expected[i]));
  }
  mpz_class smallest = s.poly.coeffs().front();
  for (const auto& c : s.poly.coeffs()) smallest = std::min(smallest, c);
  out.margin = smallest.get_d();
  out.status = ok ? Status::Pass : Status::Fail;
  out.note = s.poly.name() + (s.all_positive ? " all coefficients positive" : " has a non-positive coefficient");
  return out;
}

SeriesForms series_forms_even(int d1, double y) {
  if (d1 < 6 || d1 % 2 != 0) throw DomainError("series_forms_even: d1 must be even and >= 6");
  if (!(y >= 5.0) || !std::isfinite(y)) throw DomainError("series_forms_even: need y >= 5");
  const int m = d1 / 2 - 1;
  const double root = std::sqrt(2.0 * (d1 + y) / (d1 * (y - 2.0)));

  double log_prod = 0.0;
  for (int n = 0; n <= m; ++n) log_prod += std::log(2.0 * n + y + 2.0);

  auto form = [&](double sign, const char* name) {
    const double base = 1.0 + d1 / y * (1.0 + sign * root);
    if (!(base > 0.0)) {
      throw DomainError(std::string(name) + ": log argument not positive at y=" + num(y));
    }
    double sum = 0.0;
    for (int n = 0; n <= m; ++n) {
      const double s = (n % 2 == 0) ? 1.0 : -1.0;
      sum += binom(m, n) * s / ((2.0 * n + y + 2.0) * std::pow(base, n));
    }
    if (!(sum > 0.0)) {
      throw DomainError(std::string(name) + ": binomial sum not positive at y=" + num(y));
    }
    return -(y + 2.0) / 2.0 * std::log(base) + log_prod + std::log(sum);
  };
  return SeriesForms{form(1.0, "J"), form(-1.0, "K")};
}

StepReport falling_factorial_bounds_odd(int d1, int d2, const Strictness& strict) {
  if (d1 < 5 || d1 % 2 == 0) throw DomainError("falling_factorial_bounds_odd: d1 must be odd and >= 5");
  const FParams p{d1, d2};
  const Endpoints e = band_endpoints(p);
  const double x = 0.5 * d1 - 1.0;
  const int floor_top = (d1 - 2) / 2;
  const int ceil_top = floor_top + 1;

  StepReport r;
  r.d1 = d1;
  r.d2 = d2;
  r.exploratory = true;
  r.forms.push_back(less_rel("RT", 2.0 * e.A, falling_factorial_sum(x, floor_top, d2, e.A, e.B), strict));
  if (lower_step_applies(p, e)) {
    r.forms.push_back(greater_rel("ASD", 2.0 * e.C, falling_factorial_sum(x, ceil_top, d2, e.C, e.D), strict));
  } else {
    r.forms.push_back(not_applicable("ASD", lower_step_reason(e)));
  }
  return r;
}

CheckOutcome poly_table_check(PolyFamily f, long first, const std::vector<long long>& expected) {
  CheckOutcome out;
  out.claim_id = std::string("values-") + std::string(to_string(f));
  out.d2 = static_cast<int>(first);
  int mismatches = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const long n = first + static_cast<long>(i);
    const mpz_class v = poly_value(f, mpz_class(n));
    if (v != mpz_class(static_cast<long>(expected[i]))) {
      ++mismatches;
      out.note += "mismatch at " + std::to_string(n) + " (" + v.get_str() + "); ";
    }
  }
  out.margin = mismatches == 0 ? 1.0 : -static_cast<double>(mismatches);
  out.status = mismatches == 0 ? Status::Pass : Status::Fail;
  out.note += std::to_string(expected.size()) + " exact values from " + std::to_string(first);
  return out;
}

CheckOutcome region_boundary_check(int d1, int first, int d2_max) {
  if (d1 < 3) throw DomainError("region_boundary_check: d1 must be >= 3");
  CheckOutcome out;
  out.claim_id = "boundary-D>C>0";
  out.d1 = d1;
  out.d2 = first;
  int mismatches = 0;
  for (int d2 = 5; d2 <= d2_max; ++d2) {
    const FParams p{d1, d2};
    const Endpoints e = band_endpoints(p);
    const bool exact = e.region == ConditionRegion::Cond3_DPos && d_exceeds_c(p);
    bool bad = exact != (d2 >= first);
    if (e.D > 0.0 && std::fabs(e.D - e.C) > 1e-9 && (e.D > e.C) != exact) bad = true;
    if (bad) {
      ++mismatches;
      out.note += "mismatch at d2=" + std::to_string(d2) + "; ";
    }
  }
  out.margin = mismatches == 0 ? 1.0 : -static_cast<double>(mismatches);
  out.status = mismatches == 0 ? Status::Pass : Status::Fail;
  out.note += "D > C > 0 iff d2 >= " + std::to_string(first) + " on 5.." + std::to_string(d2_max);
  return out;
}

std::vector<CheckOutcome> step_outcomes(const FParams& p, const Strictness& strict) {
  std::vector<CheckOutcome> out;
  auto append = [&](const StepReport& r, const std::string& prefix) {
    for (const auto& f : r.forms) {
      CheckOutcome o;
      o.claim_id = prefix + f.claim_id;
      o.d1 = r.d1;
      o.d2 = r.d2;
      o.margin = f.margin;
      o.status = f.status;
      o.exploratory = r.exploratory;
      o.note = f.note;
      out.push_back(std::move(o));
    }
  };
  append(check_step_inequalities(p, strict), "step/");
  if (p.d1 == 1 || p.d1 == 3) append(coefficient_sign_checks(p.d1, p.d2, strict), "coef/");
  return out;
}

namespace {

std::vector<int> int_grid(int lo, int hi) {
  std::vector<int> ys;
  for (int y = lo; y <= hi; ++y) ys.push_back(y);
  return ys;
}

int severity(Status s) {
  switch (s) {
    case Status::Fail:
      return 3;
    case Status::Inconclusive:
      return 2;
    case Status::Pass:
      return 1;
    case Status::NotApplicable:
      return 0;
  }
  return 3;
}

// Folds per-point outcomes on y = lo, lo + 1/2, ..., hi into one row.
template <typename PointCheck>
CheckOutcome over_half_grid(double lo, double hi, PointCheck check) {
  CheckOutcome worst;
  bool first = true;
  int points = 0;
  for (double y = lo; y <= hi; y += 0.5, ++points) {
    CheckOutcome o = check(y);
    if (first || severity(o.status) > severity(worst.status) ||
        (severity(o.status) == severity(worst.status) && o.margin < worst.margin)) {
      worst = std::move(o);
      first = false;
    }
  }
  worst.note = "y=" + std::to_string(static_cast<int>(lo)) + ".." + std::to_string(static_cast<int>(hi)) +
               " step 1/2 (" + std::to_string(points) + " points); worst at " + worst.note;
  worst.d2 = static_cast<int>(lo);
  return worst;
}

CheckOutcome derivative_grid(AuxFn f, double lo, double hi, Direction dir) {
  return over_half_grid(lo, hi, [&](double y) { return derivative_sign_check(f, y, dir); });
}

CheckOutcome bound_grid(AuxFn f, double lo, double hi) {
  return over_half_grid(lo, hi, [&](double y) { return bound_sign_check(f, y); });
}

}  // namespace

std::vector<CheckOutcome> table_program(int d1) {
  std::vector<CheckOutcome> rows;
  auto add = [&](CheckOutcome o, std::string suffix = "") {
    o.d1 = d1;
    if (!suffix.empty()) o.claim_id += suffix;
    rows.push_back(std::move(o));
  };
  const auto dec = Direction::Decreasing;
  const auto inc = Direction::Increasing;
  switch (d1) {
    case 1:
      add(monotone_table_check(AuxFn::H1, int_grid(3, 200), dec));
      add(derivative_grid(AuxFn::H1, 3, 200, dec));
      add(bound_grid(AuxFn::L1, 3, 200));
      add(monotone_table_check(AuxFn::Kfun, int_grid(5, 200), dec));
      add(derivative_grid(AuxFn::Kfun, 5, 200, dec));
      break;
    case 2:
      add(monotone_table_check(AuxFn::H2, {3, 4, 5}, dec), "/table");
      add(monotone_table_check(AuxFn::H2, int_grid(5, 200), dec));
      add(derivative_grid(AuxFn::H2, 5, 200, dec));
      add(bound_grid(AuxFn::L2, 5, 200));
      break;
    case 3:
      add(monotone_table_check(AuxFn::H3, int_grid(3, 12), dec), "/table");
      add(monotone_table_check(AuxFn::H3, int_grid(12, 200), dec));
      add(derivative_grid(AuxFn::H3, 12, 200, dec));
      add(bound_grid(AuxFn::L3, 12, 200));
      add(expansion_check(PolyFamily::U1, 12, {1296, 369, 19}));
      add(expansion_check(PolyFamily::U2, 12, {1008, 1200, 126, 3}));
      add(poly_table_check(PolyFamily::P3, 15,
                           {-30258, -33056, -35172, -36360, -36350, -34848, -31536, -26072, -18090, -7200}));
      add(expansion_check(PolyFamily::P3, 25, {7012, 16017, 1879, 75, 1}));
      add(expansion_check(PolyFamily::Quintic, 30,
                          {2233345504LL, 2608569328LL, 325703156LL, 15837720LL, 342389LL, 2751LL}));
      add(region_boundary_check(3, 25, 400));
      add(monotone_table_check(AuxFn::G1, int_grid(25, 33), dec), "/table");
      for (int y = 25; y <= 40; ++y) add(rational_V_consistency(y));
      break;
    case 4:
      add(monotone_table_check(AuxFn::H4, int_grid(3, 12), inc), "/table");
      add(monotone_table_check(AuxFn::H4, int_grid(12, 200), inc));
      add(derivative_grid(AuxFn::H4, 12, 200, inc));
      add(bound_grid(AuxFn::L4, 12, 200));
      add(expansion_check(PolyFamily::T1, 12, {188672, 197760, 46192, 4432, 190, 3}));
      add(expansion_check(PolyFamily::T2, 12, {94720, 157632, 41216, 4220, 188, 3}));
      add(poly_table_check(PolyFamily::P4, 11, {-7219, -7744, -7731, -6976, -5251, -2304}));
      add(expansion_check(PolyFamily::P4, 17, {2141, 5292, 898, 52, 1}));
      add(region_boundary_check(4, 17, 400));
      add(monotone_table_check(AuxFn::R4, int_grid(15, 200), dec));
      add(derivative_grid(AuxFn::R4, 15, 200, dec));
      add(bound_grid(AuxFn::Q4, 15, 200));
      break;
    default:
      throw DomainError("table_program: d1 must be 1..4 (d1=" + std::to_string(d1) + ")");
  }
  return rows;
}

}  // namespace varcmp
