#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "varcmp/distributions.hpp"
#include "varcmp/errors.hpp"
#include "varcmp/specfun.hpp"

using namespace varcmp;

TEST_CASE("F moments") {
  CHECK(f_mean(FParams{4, 6}) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(f_mean(FParams{1, 4}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(f_variance(FParams{4, 6}) == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(f_variance(FParams{1, 5}) == doctest::Approx(200.0 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(f_mean(FParams{7, 2}), MomentUndefinedError);
  CHECK_THROWS_AS(f_variance(FParams{3, 4}), MomentUndefinedError);
  CHECK_THROWS_WITH_AS(f_variance(FParams{3, 4}), doctest::Contains("variance undefined for d2 ≤ 4"),
                       MomentUndefinedError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FParams({0, 5}).validate(), DomainError);
  CHECK_THROWS_AS(FParams({3, 0}).validate(), DomainError);
  CHECK_THROWS_AS(ChiSquareParams{0}.validate(), DomainError);
  CHECK_NOTHROW(FParams({1, 1}).validate());
  CHECK(FParams{1, 3}.has_mean());
  CHECK_FALSE(FParams{1, 3}.has_variance());
}

TEST_CASE("moments through the variant") {
  CHECK(mean(Dist{StdNormal{}}) == 0.0);
  CHECK(variance(Dist{StdNormal{}}) == 1.0);
  CHECK(mean(Dist{ChiSquareParams{7}}) == 7.0);
  CHECK(variance(Dist{ChiSquareParams{7}}) == 14.0);
  CHECK(mean(Dist{FParams{4, 12}}) == doctest::Approx(1.2));
}

TEST_CASE("cdf worked values") {
  CHECK(cdf(Dist{FParams{3, 8}}, 0.0) == 0.0);
  CHECK(cdf(Dist{FParams{3, 8}}, -1.0) == 0.0);
  CHECK(cdf(Dist{FParams{3, 8}}, std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(cdf(Dist{StdNormal{}}, 0.0) == 0.5);
  CHECK(cdf(Dist{FParams{2, 4}}, 1.0) == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
  CHECK(cdf(Dist{ChiSquareParams{2}}, 3.0) == doctest::Approx(-std::expm1(-1.5)).epsilon(1e-14));
  CHECK(cdf(Dist{ChiSquareParams{1}}, 1.0) ==
        doctest::Approx(2.0 * std_normal_cdf(1.0) - 1.0).epsilon(1e-13));
}

TEST_CASE("F(1, d2) is the square of a t variable") {
  // P{F(1, k) <= t^2} = 2 T_k(t) - 1; for k = 1 the t law is Cauchy
  for (double t : {0.1, 0.5, 1.0, 3.0, 20.0}) {
    const double want = 2.0 * std::atan(t) / std::acos(-1.0);
    CHECK(cdf(Dist{FParams{1, 1}}, t * t) == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("F(d1, d2) and F(d2, d1) are reciprocal") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> df(1, 60);
  std::uniform_real_distribution<double> logx(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const int d1 = df(rng);
    const int d2 = df(rng);
    const double x = std::exp(logx(rng));
    const double lhs = cdf(Dist{FParams{d1, d2}}, x);
    const double rhs = 1.0 - cdf(Dist{FParams{d2, d1}}, 1.0 / x);
    CAPTURE(d1);
    CAPTURE(d2);
    CAPTURE(x);
    REQUIRE(std::fabs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("d1 F(d1, d2) approaches chi-square(d1)") {
  for (int d1 : {1, 3, 8}) {
    const double x = static_cast<double>(d1);
    const double chi = cdf(Dist{ChiSquareParams{d1}}, x);
    double prev = std::fabs(cdf(Dist{FParams{d1, 100}}, x / d1) - chi);
    for (int d2 : {1000, 10000, 100000}) {
      const double gap = std::fabs(cdf(Dist{FParams{d1, d2}}, x / d1) - chi);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < 1e-5);
  }
}

TEST_CASE("cdf is nondecreasing") {
  for (int d1 : {1, 2, 5}) {
    double prev = 0.0;
    for (double x = 0.0; x < 20.0; x += 0.05) {
      const double v = cdf(Dist{FParams{d1, 9}}, x);
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}
