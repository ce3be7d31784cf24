#include "varcmp/distributions.hpp"

#include <cmath>
#include <string>

#include "varcmp/errors.hpp"
#include "varcmp/specfun.hpp"

namespace varcmp {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void FParams::validate() const {
  if (d1 < 1 || d2 < 1) {
    throw DomainError("F degrees of freedom must be positive integers (d1=" + std::to_string(d1) +
                      ", d2=" + std::to_string(d2) + ")");
  }
}

void ChiSquareParams::validate() const {
  if (k < 1) throw DomainError("chi-square degrees of freedom must be a positive integer");
}

double f_mean(const FParams& p) {
  p.validate();
  if (!p.has_mean()) throw MomentUndefinedError("mean undefined for d2 ≤ 2");
  const double d2 = p.d2;
  return d2 / (d2 - 2.0);
}

double f_variance(const FParams& p) {
  p.validate();
  if (!p.has_variance()) throw MomentUndefinedError("variance undefined for d2 ≤ 4");
  const double d1 = p.d1;
  const double d2 = p.d2;
  return 2.0 * d2 * d2 * (d1 + d2 - 2.0) / (d1 * (d2 - 2.0) * (d2 - 2.0) * (d2 - 4.0));
}

double mean(const Dist& d) {
  return std::visit(Overloaded{
                        [](const FParams& p) { return f_mean(p); },
                        [](const ChiSquareParams& c) {
                          c.validate();
                          return static_cast<double>(c.k);
                        },
                        [](const StdNormal&) { return 0.0; },
                    },
                    d);
}

double variance(const Dist& d) {
  return std::visit(Overloaded{
                        [](const FParams& p) { return f_variance(p); },
                        [](const ChiSquareParams& c) {
                          c.validate();
                          return 2.0 * c.k;
                        },
                        [](const StdNormal&) { return 1.0; },
                    },
                    d);
}

double cdf(const Dist& d, double x) {
  if (std::isnan(x)) throw DomainError("cdf: NaN argument");
  return std::visit(Overloaded{
                        [x](const FParams& p) {
                          p.validate();
                          if (x <= 0.0) return 0.0;
                          if (std::isinf(x)) return 1.0;
                          const double d1x = p.d1 * x;
                          return reg_inc_beta(d1x / (d1x + p.d2), 0.5 * p.d1, 0.5 * p.d2);
                        },
                        [x](const ChiSquareParams& c) {
                          c.validate();
                          if (x <= 0.0) return 0.0;
                          if (std::isinf(x)) return 1.0;
                          return reg_lower_gamma(0.5 * c.k, 0.5 * x);
                        },
                        [x](const StdNormal&) {
                          if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
                          return std_normal_cdf(x);
                        },
                    },
                    d);
}

}  // namespace varcmp
