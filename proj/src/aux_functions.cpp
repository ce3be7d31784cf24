#include "varcmp/aux_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "varcmp/errors.hpp"

namespace varcmp {

namespace {

constexpr double kSqrt6 = 2.4494897427831780981972840747059;

struct Named {
  AuxFn fn;
  std::string_view name;
  double domain_min;
};

constexpr std::array<Named, 14> kNames = {{
    {AuxFn::H1, "H1", 3.0},   {AuxFn::H2, "H2", 3.0},  {AuxFn::H3, "H3", 3.0},
    {AuxFn::H4, "H4", 3.0},   {AuxFn::R4, "R4", 15.0}, {AuxFn::Kfun, "K", 5.0},
    {AuxFn::V, "V", 5.0},     {AuxFn::G1, "G1", 5.0},  {AuxFn::G2, "G2", 5.0},
    {AuxFn::L1, "L1", 3.0},   {AuxFn::L2, "L2", 5.0},  {AuxFn::L3, "L3", 12.0},
    {AuxFn::L4, "L4", 12.0},  {AuxFn::Q4, "Q4", 15.0},
}};

void require_domain(AuxFn f, double y) {
  if (!std::isfinite(y) || y < aux_domain_min(f)) {
    throw DomainError(std::string(to_string(f)) + ": argument " + std::to_string(y) +
                      " outside domain y >= " + std::to_string(aux_domain_min(f)));
  }
}

// sqrt(2(x+y) / (x(y-2))) and its derivative.
struct Root {
  double value;
  double slope;
};

Root h_root(int x, double y) {
  const double q = 2.0 * (x + y) / (x * (y - 2.0));
  const double dq = -2.0 * (x + 2.0) / (x * (y - 2.0) * (y - 2.0));
  const double v = std::sqrt(q);
  return {v, dq / (2.0 * v)};
}

struct PSeries {
  double p;
  double dp;
};

PSeries p_series(int x, double y) {
  const Root r = h_root(x, y);
  const double p = x / y * (1.0 + r.value);
  const double dp = -x / (y * y) * (1.0 + r.value) + x / y * r.slope;
  return {p, dp};
}

double h_x(int x, double y) { return (0.5 * y + 1.0) * std::log1p(p_series(x, y).p); }

double h_x_derivative(int x, double y) {
  const PSeries s = p_series(x, y);
  return 0.5 * std::log1p(s.p) + (0.5 * y + 1.0) * s.dp / (1.0 + s.p);
}

double l_x(int x, double y) {
  const PSeries s = p_series(x, y);
  const double cubic = s.p - s.p * s.p / 2.0 + s.p * s.p * s.p / 3.0;
  return 0.5 * cubic + (0.5 * y + 1.0) * s.dp / (1.0 + s.p);
}

// Pieces of the d1 = 4 forms with w -> sign * w:
//   M = 4 (1 + sign w) + y,  N = 4 (y + 4)(1 + sign w) + 2 y.
struct D4Parts {
  double p;    // 4 (1 + sign w) / y
  double m;
  double dm;
  double n;
  double dn;
};

D4Parts d4_parts(double y, double sign) {
  const double w = std::sqrt((4.0 + y) / (2.0 * (y - 2.0)));
  const double dw = -3.0 / (2.0 * w * (y - 2.0) * (y - 2.0));
  const double one_w = 1.0 + sign * w;
  D4Parts out;
  out.p = 4.0 * one_w / y;
  out.m = 4.0 * one_w + y;
  out.dm = 4.0 * sign * dw + 1.0;
  out.n = 4.0 * (y + 4.0) * one_w + 2.0 * y;
  out.dn = 4.0 * one_w + 4.0 * (y + 4.0) * sign * dw + 2.0;
  return out;
}

double d4_form(double y, double sign) {
  const D4Parts d = d4_parts(y, sign);
  if (!(d.p > -1.0) || !(d.m > 0.0) || !(d.n > 0.0)) {
    throw DomainError("d1 = 4 log-form undefined at y = " + std::to_string(y));
  }
  return -(y + 2.0) / 2.0 * std::log1p(d.p) + std::log(d.n / d.m);
}

double d4_derivative(double y, double sign) {
  const D4Parts d = d4_parts(y, sign);
  return -0.5 * std::log1p(d.p) + (y + 2.0) / (2.0 * y) - (y + 4.0) / 2.0 * d.dm / d.m + d.dn / d.n;
}

// The derivative with its -1/2 ln(1 + p) term removed and sign flipped; the
// log term is then replaced by a truncated series by the caller.
double d4_bound_rest(double y, double sign) {
  const D4Parts d = d4_parts(y, sign);
  return -(y + 2.0) / (2.0 * y) + (y + 4.0) / 2.0 * d.dm / d.m - d.dn / d.n;
}

double k_fun(double y) {
  const double t = 1.0 + std::sqrt(2.0 * (y - 1.0) / (y - 4.0));
  return y * t / (t + (y - 2.0));
}

// 1 - sqrt(2(3+y)/(3(y-2))) and 1 - sqrt(2(y+1)/(3(y-4))) without cancellation.
double one_minus_sigma(double y) {
  const double sigma = kSqrt6 * s2(y) / 3.0;
  return (y - 12.0) / (3.0 * (y - 2.0)) / (1.0 + sigma);
}

double one_minus_tau(double y) {
  const double tau = kSqrt6 * s1(y) / 3.0;
  return (y - 14.0) / (3.0 * (y - 4.0)) / (1.0 + tau);
}

double v_direct(double y) {
  const double c = c_of_y(y);
  const double d = d_of_y(y);
  const double ratio = c / (1.0 - c);
  return ratio * (1.0 - c / (2.0 * (1.0 - c))) -
         ((y + 2.0) * c - y * d) / (2.0 * (1.0 + c) + y * (c + d)) -
         y * (d - c) / (2.0 * (1.0 - d));
}

// One row of G1: c0 + c1 sqrt6 s1 + c2 sqrt6 s2 + c3 s1 s2, by power of y.
struct G1Row {
  double c0, c1, c2, c3;
};

constexpr std::array<G1Row, 9> kG1Rows = {{
    {6912.0 * -1, 6912.0 * 1, 0.0, 0.0},                        // y^0
    {192.0 * -54, 192.0 * 11, 0.0, 192.0 * -66},                // y^1
    {16.0 * 435, 16.0 * -237, 16.0 * 160, 16.0 * 192},          // y^2
    {4.0 * 1134, 4.0 * -108, 4.0 * -457, 4.0 * 654},            // y^3
    {-500, 410, -364, -304},                                    // y^4
    {-392, 77, 125, -70},                                       // y^5
    {-16, -25, 23, -20},                                        // y^6
    {-4, -8, 8, 4},                                             // y^7
    {0, 2, -2, 0},                                              // y^8
}};

double g1_from_rows(double y) {
  const double a = s1(y);
  const double b = s2(y);
  const double sum = a + b;
  const double diff = 10.0 / ((y - 4.0) * (y - 2.0)) / sum;  // s1 - s2
  double acc = 0.0;
  for (std::size_t k = kG1Rows.size(); k-- > 0;) {
    const G1Row& row = kG1Rows[k];
    // c1 s1 + c2 s2 = (c1 + c2)/2 (s1 + s2) + (c1 - c2)/2 (s1 - s2)
    const double mixed = 0.5 * (row.c1 + row.c2) * sum + 0.5 * (row.c1 - row.c2) * diff;
    acc = acc * y + (row.c0 + kSqrt6 * mixed + row.c3 * a * b);
  }
  return -3.0 * acc;
}

double g2(double y) {
  const double a = s1(y);
  const double b = s2(y);
  const double r6a = kSqrt6 * a;
  const double r6b = kSqrt6 * b;
  const double inner = y * y * (-8.0 + r6a + r6b) + 4.0 * (-3.0 + 3.0 * r6a + r6b - 6.0 * a * b) +
                       2.0 * y * (-13.0 + 4.0 * r6a + 4.0 * r6b - 6.0 * a * b);
  return 2.0 * (y - 4.0) * (y - 2.0) * (y - 2.0) * y * y * (3.0 + y - r6b) * inner;
}

}  // namespace

std::string_view to_string(AuxFn f) noexcept {
  for (const auto& n : kNames) {
    if (n.fn == f) return n.name;
  }
  return "?";
}

std::optional<AuxFn> parse_aux_fn(std::string_view name) noexcept {
  for (const auto& n : kNames) {
    if (n.name == name) return n.fn;
  }
  return std::nullopt;
}

double aux_domain_min(AuxFn f) noexcept {
  for (const auto& n : kNames) {
    if (n.fn == f) return n.domain_min;
  }
  return 0.0;
}

double p_x(int x, double y) {
  if (x < 1 || !(y > 2.0)) throw DomainError("p_x: need x >= 1 and y > 2");
  return p_series(x, y).p;
}

double r_fn(double y) {
  if (!(y > 2.0)) throw DomainError("r: need y > 2");
  return d4_parts(y, -1.0).p;
}

double s1(double y) {
  if (!(y > 4.0) || !std::isfinite(y)) throw DomainError("s1: need y > 4");
  return std::sqrt((y + 1.0) / (y - 4.0));
}

double s2(double y) {
  if (!(y > 2.0) || !std::isfinite(y)) throw DomainError("s2: need y > 2");
  return std::sqrt((y + 3.0) / (y - 2.0));
}

double c_of_y(double y) {
  const double g = one_minus_sigma(y);
  return 3.0 * g / (3.0 * g + y);
}

double d_of_y(double y) {
  const double g = one_minus_tau(y);
  return 3.0 * g / (3.0 * g + (y - 2.0));
}

double aux_eval(AuxFn f, double y) {
  require_domain(f, y);
  switch (f) {
    case AuxFn::H1:
      return h_x(1, y);
    case AuxFn::H2:
      return h_x(2, y);
    case AuxFn::H3:
      return h_x(3, y);
    case AuxFn::H4:
      return d4_form(y, 1.0);
    case AuxFn::R4:
      return d4_form(y, -1.0);
    case AuxFn::Kfun:
      return k_fun(y);
    case AuxFn::V:
      return v_direct(y);
    case AuxFn::G1:
      return g1_from_rows(y);
    case AuxFn::G2:
      return g2(y);
    case AuxFn::L1:
      return l_x(1, y);
    case AuxFn::L2:
      return l_x(2, y);
    case AuxFn::L3:
      return l_x(3, y);
    case AuxFn::L4: {
      const double p = d4_parts(y, 1.0).p;
      return 0.5 * (p - p * p / 2.0 + p * p * p / 3.0) + d4_bound_rest(y, 1.0);
    }
    case AuxFn::Q4: {
      const double r = d4_parts(y, -1.0).p;
      return 0.5 * (r - r * r / 2.0) + d4_bound_rest(y, -1.0);
    }
  }
  throw DomainError("aux_eval: unknown function");
}

double aux_derivative(AuxFn f, double y) {
  require_domain(f, y);
  switch (f) {
    case AuxFn::H1:
      return h_x_derivative(1, y);
    case AuxFn::H2:
      return h_x_derivative(2, y);
    case AuxFn::H3:
      return h_x_derivative(3, y);
    case AuxFn::H4:
      return d4_derivative(y, 1.0);
    case AuxFn::R4:
      return d4_derivative(y, -1.0);
    default:
      throw DomainError("aux_derivative: no analytic derivative for " + std::string(to_string(f)));
  }
}

std::optional<ReferenceTable> reference_table(AuxFn f) {
  switch (f) {
    case AuxFn::H2:
      return ReferenceTable{{{3, 2.87436}, {4, 2.58363}, {5, 2.44523}}, 1e-5, false};
    case AuxFn::H3:
      return ReferenceTable{{{3, 3.46574},
                             {4, 3.18962},
                             {5, 3.06414},
                             {6, 2.99125},
                             {7, 2.94353},
                             {8, 2.9099},
                             {9, 2.88497},
                             {10, 2.86578},
                             {11, 2.85058},
                             {12, 2.83826}},
                            1e-5,
                            false};
    case AuxFn::H4:
      return ReferenceTable{{{3, -2.15017},
                             {4, -1.85244},
                             {5, -1.70932},
                             {6, -1.62225},
                             {7, -1.563},
                             {8, -1.51983},
                             {9, -1.48688},
                             {10, -1.46088},
                             {11, -1.43981},
                             {12, -1.42238}},
                            1e-5,
                            false};
    case AuxFn::G1:
      return ReferenceTable{{{25, -1.46179e9},
                             {26, -1.91825e9},
                             {27, -2.48438e9},
                             {28, -3.17992e9},
                             {29, -4.02709e9},
                             {30, -5.05084e9},
                             {31, -6.27904e9},
                             {32, -7.74269e9},
                             {33, -9.47617e9}},
                            1e-5,
                            true};
    default:
      return std::nullopt;
  }
}

}  // namespace varcmp
