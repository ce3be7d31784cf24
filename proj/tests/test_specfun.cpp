#include <doctest.h>

#include <cmath>
#include <random>

#include "varcmp/errors.hpp"
#include "varcmp/specfun.hpp"

using namespace varcmp;

namespace {

// mpmath, 40 digits
struct Ref1 {
  double x, v;
};
struct Ref2 {
  double a, b, v;
};
struct Ref3 {
  double x, a, b, v;
};

constexpr Ref1 kLogGamma[] = {
    {0.001, 6.9071788853838537}, {0.5, 0.57236494292470009}, {1.0, 0.0},
    {2.5, 0.28468287047291916},  {5.0, 3.1780538303479456},  {10.25, 13.368023671476046},
    {100.0, 359.1342053695754},  {1e5, 1.0512877089736569e+6}, {1e10, 2.2025850928881058e+11},
};

constexpr Ref2 kLogBeta[] = {
    {0.5, 0.5, 1.1447298858494002},     {1.5, 2.5, -1.6278588363903811},
    {2.0, 200.0, -10.601622274607112},  {0.5, 5000.0, -3.6862066527834603},
    {300.0, 400.0, -479.688451037132},  {1e-3, 1e6, 6.8933633753253895},
};

constexpr Ref3 kIncBeta[] = {
    {0.1, 0.5, 0.5, 0.20483276469913346}, {0.3, 1.5, 2.5, 0.41568785229802533},
    {0.43, 300, 400, 0.53186763252570125}, {0.999, 5, 1.5, 0.99971533794914717},
    {0.2, 50, 3, 9.6489622016413142e-33}, {0.05, 2, 100, 0.96447682467799586},
};

constexpr Ref2 kLowerGamma[] = {
    {0.5, 0.1, 0.34527915398142298}, {1.5, 3.0, 0.88838977490528744},
    {10.0, 5.0, 0.031828057306204812}, {10.0, 20.0, 0.99500458769169241},
    {100.0, 95.0, 0.3173568111698},    {2.5, 40.0, 0.99999999999999916},
};

constexpr Ref1 kNormal[] = {
    {-8.0, 6.2209605742717841e-16}, {-3.0, 0.0013498980316300945}, {-1.0, 0.15865525393145705},
    {0.3, 0.61791142218895263},     {1.0, 0.84134474606854295},    {2.5, 0.99379033467422386},
};

double rel_err(double got, double want) {
  return want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}

}  // namespace

TEST_CASE("log_gamma reference values") {
  for (const auto& r : kLogGamma) {
    CAPTURE(r.x);
    if (r.v == 0.0) {
      CHECK(std::fabs(log_gamma(r.x)) < 1e-15);
    } else {
      CHECK(rel_err(log_gamma(r.x), r.v) < 1e-13);
    }
  }
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
}

TEST_CASE("log_gamma rejects non-positive and non-finite input") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(NAN), DomainError);
  CHECK_THROWS_AS(log_gamma(INFINITY), DomainError);
}

TEST_CASE("log_gamma recurrence on random arguments") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logx(std::log(0.5), std::log(1e5));
  for (int i = 0; i < 2000; ++i) {
    const double x = std::exp(logx(rng));
    const double lhs = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
    const double scale = std::max(1.0, std::fabs(log_gamma(x + 1.0)));
    CAPTURE(x);
    REQUIRE(std::fabs(lhs) <= 1e-12 * scale);
  }
}

TEST_CASE("log_gamma agrees with std::lgamma") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> logx(std::log(0.5), std::log(1e6));
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(logx(rng));
    CAPTURE(x);
    REQUIRE(rel_err(log_gamma(x), std::lgamma(x)) < 1e-13);
  }
}

TEST_CASE("log_beta reference values") {
  for (const auto& r : kLogBeta) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CHECK(rel_err(log_beta(r.a, r.b), r.v) < 1e-13);
  }
  CHECK_THROWS_AS(log_beta(0.0, 1.0), DomainError);
}

TEST_CASE("reg_inc_beta worked values") {
  CHECK(reg_inc_beta(0.0, 2.0, 3.0) == 0.0);
  CHECK(reg_inc_beta(1.0, 2.0, 3.0) == 1.0);
  CHECK(reg_inc_beta(0.5, 3.0, 3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(reg_inc_beta(0.5, 1.0, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
  for (const auto& r : kIncBeta) {
    CAPTURE(r.x);
    CAPTURE(r.a);
    CAPTURE(r.b);
    CHECK(std::fabs(reg_inc_beta(r.x, r.a, r.b) - r.v) < 1e-13);
    if (r.v < 1e-3) CHECK(rel_err(reg_inc_beta(r.x, r.a, r.b), r.v) < 1e-11);
  }
}

TEST_CASE("reg_inc_beta domain errors") {
  CHECK_THROWS_AS(reg_inc_beta(-0.1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(1.1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(0.5, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(0.5, 1.0, -2.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(NAN, 1.0, 1.0), DomainError);
}

TEST_CASE("reg_inc_beta reports an exhausted iteration cap") {
  Accuracy acc;
  acc.max_iter = 50;
  acc.rel_tol = 1e-300;
  CHECK_THROWS_AS(reg_inc_beta(0.5, 1e5, 1e5, acc), ConvergenceError);
  acc.max_iter = 10;
  CHECK_THROWS_AS(acc.validate(), DomainError);
}

TEST_CASE("incomplete beta symmetry and recurrence on random triples") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ab(0.1, 200.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = ab(rng);
    const double b = ab(rng);
    const double x = unit(rng);
    CAPTURE(x);
    CAPTURE(a);
    CAPTURE(b);
    REQUIRE(std::fabs(reg_inc_beta(x, a, b) + reg_inc_beta(1.0 - x, b, a) - 1.0) <= 1e-12);
    const double bt = std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
    const double term = std::exp(a * std::log(x) + b * std::log1p(-x)) / (b * bt);
    REQUIRE(std::fabs(reg_inc_beta(x, a, b + 1.0) - reg_inc_beta(x, a, b) - term) <= 1e-12);
  }
}

TEST_CASE("incomplete beta is nondecreasing in x") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> ab(0.1, 200.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = ab(rng);
    const double b = ab(rng);
    double x1 = unit(rng);
    double x2 = unit(rng);
    if (x1 > x2) std::swap(x1, x2);
    REQUIRE(reg_inc_beta(x1, a, b) <= reg_inc_beta(x2, a, b));
  }
}

TEST_CASE("reg_lower_gamma worked values") {
  CHECK(reg_lower_gamma(3.0, 0.0) == 0.0);
  CHECK(reg_lower_gamma(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK(std::fabs(reg_lower_gamma(0.5, 0.5) - (2.0 * std_normal_cdf(1.0) - 1.0)) < 1e-10);
  for (const auto& r : kLowerGamma) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CHECK(std::fabs(reg_lower_gamma(r.a, r.b) - r.v) < 1e-13);
  }
  CHECK_THROWS_AS(reg_lower_gamma(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_lower_gamma(1.0, -1.0), DomainError);
}

TEST_CASE("reg_lower_gamma matches closed forms on random arguments") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> xs(0.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = xs(rng);
    CAPTURE(x);
    REQUIRE(std::fabs(reg_lower_gamma(1.0, x) - (-std::expm1(-x))) < 1e-14);
    REQUIRE(std::fabs(reg_lower_gamma(0.5, x) - std::erf(std::sqrt(x))) < 1e-14);
    // P(s+1, x) = P(s, x) - x^s e^-x / Gamma(s+1)
    const double s = 0.5 + 0.01 * i;
    const double step = std::exp(s * std::log(x) - x - log_gamma(s + 1.0));
    REQUIRE(std::fabs(reg_lower_gamma(s + 1.0, x) - reg_lower_gamma(s, x) + step) < 1e-13);
  }
}

TEST_CASE("std_normal_cdf") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  for (const auto& r : kNormal) {
    CAPTURE(r.x);
    CHECK(std::fabs(std_normal_cdf(r.x) - r.v) < 1e-14);
    CHECK(rel_err(std_normal_cdf(r.x), r.v) < 1e-13);
  }
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> zs(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double z = zs(rng);
    REQUIRE(std::fabs(std_normal_cdf(z) + std_normal_cdf(-z) - 1.0) <= 1e-15);
  }
  CHECK_THROWS_AS(std_normal_cdf(NAN), DomainError);
}
