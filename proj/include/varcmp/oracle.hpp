#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "varcmp/distributions.hpp"

namespace varcmp {

// ---- Monte Carlo ----------------------------------------------------------

using Rng = std::mt19937_64;

/// Engine for one chunk of a stream keyed by (seed, d1, d2, chunk).
/// The key is mixed with splitmix64, so neighbouring keys give unrelated streams.
Rng stream_engine(std::uint64_t seed, int d1, int d2, std::uint64_t chunk);

/// chi-square(k) as a sum of k squared standard normals.
double sample_chi2_normal_sum(int k, Rng& rng);
/// chi-square(k) as gamma(k/2, scale 2).
double sample_chi2_gamma(int k, Rng& rng);
/// Dispatches to the normal-sum path for k <= 16, the gamma path above.
double sample_chi2(int k, Rng& rng);

/// (chi2(d1)/d1) / (chi2(d2)/d2). A zero denominator draw is redrawn.
double sample_f(const FParams& p, Rng& rng);

/// n draws from one stream, in chunk order.
std::vector<double> sample_f_batch(const FParams& p, std::size_t n, std::uint64_t seed);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  ///< sqrt(estimate (1 - estimate) / n)
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

constexpr std::size_t kMcChunk = std::size_t{1} << 15;

/// Fraction of n draws inside [max(0, E - sd), E + sd]. Chunks of kMcChunk
/// draws run in parallel with OpenMP; the result does not depend on the
/// thread count. Requires n >= 1e4 and d2 >= 5.
McEstimate mc_variation_probability(const FParams& p, std::size_t n, std::uint64_t seed);

/// Single-threaded reference; identical output to the parallel version.
McEstimate mc_variation_probability_serial(const FParams& p, std::size_t n, std::uint64_t seed);

/// sup_x |F_n(x) - cdf(x)| for the empirical CDF of xs.
double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf);

// ---- Quadrature -----------------------------------------------------------

struct QuadResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
  std::size_t evaluations = 0;
};

/// Integral of t^(a-1) (1-t)^(b-1) over [lo, hi] by adaptive Simpson.
///
/// The range is split at clamp(1/2, lo, hi). The left part is integrated in
/// u = sqrt(t) when 2a is an odd integer, else in u = t^a when a < 1; the
/// right part likewise in 1 - t with b. This removes the endpoint
/// singularities of t^(a-1) and (1-t)^(b-1). Throws QuadratureError
/// (carrying the best value) if tol is not reached.
QuadResult quad_beta_integral(double a, double b, double lo, double hi, double tol);

}  // namespace varcmp
