#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <random>

#include "varcmp/errors.hpp"
#include "varcmp/oracle.hpp"
#include "varcmp/specfun.hpp"
#include "varcmp/varband.hpp"

using namespace varcmp;

namespace {

struct QuadRef {
  double a, b, lo, hi, v;
};

// mpmath betainc, unregularized
constexpr QuadRef kQuad[] = {
    {0.5, 2.5, 0.0, 0.3, 0.93881313171792061},
    {1.5, 6.5, 0.0, 0.0035, 0.00013645641807924444},
    {0.5, 0.5, 0.1, 0.99, 2.2977567024733892},
    {2.0, 100.0, 0.001, 0.05, 9.5024572921096614e-5},
    {0.5, 200.0, 0.0, 0.01, 0.11975452865090445},
};

double beta_fn(double a, double b) { return std::exp(log_beta(a, b)); }

}  // namespace

TEST_CASE("quadrature worked values") {
  CHECK(quad_beta_integral(1.0, 1.0, 0.0, 0.3, 1e-12).value == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(quad_beta_integral(1.0, 2.0, 0.0, 0.5, 1e-12).value == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(quad_beta_integral(2.0, 3.0, 0.4, 0.4, 1e-12).value == 0.0);
  for (const auto& r : kQuad) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    const QuadResult q = quad_beta_integral(r.a, r.b, r.lo, r.hi, 1e-12 * r.v);
    CHECK(std::fabs(q.value - r.v) <= 1e-11 * r.v);
    CHECK(q.abs_error_bound <= 1e-12 * r.v);
    CHECK(q.evaluations > 0);
  }
}

TEST_CASE("quadrature matches the incomplete beta on random cases") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> df(1, 40);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double a = 0.5 * df(rng);
    const double b = 0.5 * df(rng);
    const double x = unit(rng);
    const double bt = beta_fn(a, b);
    const QuadResult q = quad_beta_integral(a, b, 0.0, x, 1e-12 * bt);
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(x);
    REQUIRE(std::fabs(q.value / bt - reg_inc_beta(x, a, b)) < 1e-10);
  }
}

TEST_CASE("quadrature normalization") {
  for (double a : {0.5, 1.0, 1.5, 3.0}) {
    for (double b : {0.5, 2.5, 50.0}) {
      const double bt = beta_fn(a, b);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(quad_beta_integral(a, b, 0.0, 1.0, 1e-11 * bt).value == doctest::Approx(bt).epsilon(1e-10));
    }
  }
  // non-half-integer exponents below one take the power substitution
  const double bt = beta_fn(0.3, 0.7);
  CHECK(quad_beta_integral(0.3, 0.7, 0.0, 1.0, 1e-11 * bt).value == doctest::Approx(bt).epsilon(1e-9));
}

TEST_CASE("quadrature errors") {
  CHECK_THROWS_AS(quad_beta_integral(0.0, 1.0, 0.0, 1.0, 1e-8), DomainError);
  CHECK_THROWS_AS(quad_beta_integral(1.0, 1.0, 0.5, 0.2, 1e-8), DomainError);
  CHECK_THROWS_AS(quad_beta_integral(1.0, 1.0, 0.0, 1.5, 1e-8), DomainError);
  CHECK_THROWS_AS(quad_beta_integral(1.0, 1.0, 0.0, 1.0, 0.0), DomainError);
  try {
    quad_beta_integral(2.5, 3.5, 0.0, 0.9, 1e-300);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    const double exact = beta_fn(2.5, 3.5) * reg_inc_beta(0.9, 2.5, 3.5);
    CHECK(e.error_bound() > 1e-300);
    CHECK(std::fabs(e.best_value() - exact) <= 10.0 * e.error_bound());
    CHECK(std::fabs(e.best_value() - exact) < 1e-3 * exact);
  }
}

TEST_CASE("F sampler passes a KS test") {
  const FParams p{4, 12};
  const auto xs = sample_f_batch(p, 100000, 1);
  const double d = ks_statistic(xs, [&](double x) { return cdf(Dist{p}, x); });
  CHECK(d < 1.95 / std::sqrt(1e5));
  const FParams q{1, 5};
  const auto ys = sample_f_batch(q, 100000, 2);
  CHECK(ks_statistic(ys, [&](double x) { return cdf(Dist{q}, x); }) < 1.95 / std::sqrt(1e5));
}

TEST_CASE("both chi-square paths pass a KS test") {
  for (int k : {1, 3, 16, 17, 40}) {
    Rng r1 = stream_engine(9, k, 0, 0);
    Rng r2 = stream_engine(9, k, 0, 1);
    std::vector<double> a(100000), b(100000);
    for (auto& v : a) v = sample_chi2_normal_sum(k, r1);
    for (auto& v : b) v = sample_chi2_gamma(k, r2);
    const auto chi = [k](double x) { return cdf(Dist{ChiSquareParams{k}}, x); };
    CAPTURE(k);
    CHECK(ks_statistic(a, chi) < 1.95 / std::sqrt(1e5));
    CHECK(ks_statistic(b, chi) < 1.95 / std::sqrt(1e5));
  }
  Rng r = stream_engine(0, 0, 0, 0);
  CHECK_THROWS_AS(sample_chi2(0, r), DomainError);
}

TEST_CASE("sample moments") {
  const auto xs = sample_f_batch(FParams{4, 12}, 1000000, 3);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  CHECK(std::fabs(mean - 1.2) < 4.0 * sd / std::sqrt(1e6));
}

TEST_CASE("Monte Carlo agrees with the analytic probability") {
  const McEstimate a = mc_variation_probability(FParams{1, 5}, 1000000, 42);
  CHECK(std::fabs(a.estimate - variation_probability(Dist{FParams{1, 5}})) < 4.0 * a.std_error);
  CHECK(a.n == 1000000);
  CHECK(a.seed == 42);
  const McEstimate b = mc_variation_probability(FParams{4, 100}, 1000000, 0);
  CHECK(std::fabs(b.estimate - variation_probability(Dist{FParams{4, 100}})) < 4.0 * b.std_error);
  CHECK(b.std_error == doctest::Approx(std::sqrt(b.estimate * (1.0 - b.estimate) / 1e6)));
}

TEST_CASE("parallel and serial Monte Carlo are identical") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (std::uint64_t seed : {0ULL, 7ULL}) {
    const McEstimate par = mc_variation_probability(FParams{3, 9}, 200000, seed);
    const McEstimate ser = mc_variation_probability_serial(FParams{3, 9}, 200000, seed);
    CHECK(par.estimate == ser.estimate);
    CHECK(par.std_error == ser.std_error);
  }
  const McEstimate again = mc_variation_probability(FParams{3, 9}, 200000, 0);
  omp_set_num_threads(1);
  CHECK(again.estimate == mc_variation_probability(FParams{3, 9}, 200000, 0).estimate);
  omp_set_num_threads(saved);
}

TEST_CASE("streams are keyed") {
  CHECK(stream_engine(1, 2, 3, 4)() == stream_engine(1, 2, 3, 4)());
  CHECK(stream_engine(1, 2, 3, 4)() != stream_engine(1, 2, 3, 5)());
  CHECK(stream_engine(1, 2, 3, 4)() != stream_engine(1, 3, 2, 4)());
  CHECK(stream_engine(0, 1, 5, 0)() != stream_engine(1, 1, 5, 0)());
  CHECK(sample_f_batch(FParams{2, 8}, 50000, 5) == sample_f_batch(FParams{2, 8}, 50000, 5));
}

TEST_CASE("Monte Carlo guards") {
  CHECK_THROWS_AS(mc_variation_probability(FParams{2, 4}, 100000, 0), MomentUndefinedError);
  CHECK_THROWS_AS(mc_variation_probability(FParams{2, 8}, 100, 0), DomainError);
  CHECK_THROWS_AS(ks_statistic({}, [](double) { return 0.0; }), DomainError);
}
