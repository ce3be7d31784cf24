#include "varcmp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "varcmp/errors.hpp"
#include "varcmp/varband.hpp"

namespace varcmp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_mc_params(const FParams& p, std::size_t n) {
  p.validate();
  if (p.d2 < 5) {
    throw MomentUndefinedError("variance undefined for d2 ≤ 4 (d2=" + std::to_string(p.d2) + ")");
  }
  if (n < 10000) throw DomainError("mc_variation_probability: need n >= 10000");
}

std::size_t count_chunk(const FParams& p, std::size_t begin, std::size_t end, std::uint64_t seed,
                        std::uint64_t chunk, double lo, double hi) {
  Rng rng = stream_engine(seed, p.d1, p.d2, chunk);
  std::size_t inside = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const double x = sample_f(p, rng);
    if (x >= lo && x <= hi) ++inside;
  }
  return inside;
}

McEstimate finish(std::size_t inside, std::size_t n, std::uint64_t seed) {
  McEstimate out;
  out.n = n;
  out.seed = seed;
  out.estimate = static_cast<double>(inside) / static_cast<double>(n);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n));
  return out;
}

// ---- adaptive Simpson ----

struct Integrand {
  // g(x) = scale * x^(p-1) * (1 - x^e)^(q-1), evaluated in logs.
  double p;
  double e;
  double q;
  double scale;

  double operator()(double x) const {
    if (x <= 0.0) {
      if (p == 1.0) return scale;
      return p > 1.0 ? 0.0 : HUGE_VAL;
    }
    const double xe = e == 1.0 ? x : std::pow(x, e);
    if (xe >= 1.0) {
      if (q > 1.0) return 0.0;
      return q == 1.0 ? scale * std::pow(x, p - 1.0) : HUGE_VAL;
    }
    const double lg = (p - 1.0) * std::log(x) + (q - 1.0) * std::log1p(-xe);
    return scale * std::exp(lg);
  }
};

struct Simpson {
  const Integrand& f;
  std::size_t evaluations = 0;
  double error = 0.0;
  bool failed = false;

  static constexpr int kMaxDepth = 60;
  static constexpr std::size_t kMaxEvaluations = 20'000'000;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || !(m > a && b > m)) {
      error += std::fabs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth >= kMaxDepth || evaluations > kMaxEvaluations) {
      failed = true;
      error += std::fabs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  double run(double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = eval(a);
    const double fb = eval(b);
    const double fm = eval(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(a, b, fa, fm, fb, whole, tol, 0);
  }
};

struct Piece {
  double value;
  double error;
  std::size_t evaluations;
  bool failed;
};

// Singular endpoint values (HUGE_VAL) only occur at x = 0 of an unsubstituted
// piece, which the caller avoids by substitution; guard anyway.
// 0.5, 1.5, 2.5, ...
bool is_half_integer(double x) { return std::fmod(2.0 * x, 2.0) == 1.0; }

Piece integrate(const Integrand& f, double lo, double hi, double tol) {
  Simpson s{f};
  const double v = s.run(lo, hi, tol);
  return Piece{v, s.error, s.evaluations, s.failed || !std::isfinite(v)};
}

}  // namespace

Rng stream_engine(std::uint64_t seed, int d1, int d2, std::uint64_t chunk) {
  std::uint64_t state = seed;
  std::uint64_t key = splitmix64(state);
  state = key ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(d1));
  key = splitmix64(state);
  state = key ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(d2));
  key = splitmix64(state);
  state = key ^ chunk;
  std::seed_seq seq{splitmix64(state), splitmix64(state), splitmix64(state), splitmix64(state)};
  return Rng(seq);
}

double sample_chi2_normal_sum(int k, Rng& rng) {
  if (k < 1) throw DomainError("chi-square degrees of freedom must be >= 1");
  std::normal_distribution<double> z(0.0, 1.0);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double v = z(rng);
    sum += v * v;
  }
  return sum;
}

double sample_chi2_gamma(int k, Rng& rng) {
  if (k < 1) throw DomainError("chi-square degrees of freedom must be >= 1");
  std::gamma_distribution<double> g(0.5 * k, 2.0);
  return g(rng);
}

double sample_chi2(int k, Rng& rng) {
  return k <= 16 ? sample_chi2_normal_sum(k, rng) : sample_chi2_gamma(k, rng);
}

double sample_f(const FParams& p, Rng& rng) {
  const double num = sample_chi2(p.d1, rng) / p.d1;
  double den = 0.0;
  while (!(den > 0.0)) den = sample_chi2(p.d2, rng) / p.d2;
  return num / den;
}

std::vector<double> sample_f_batch(const FParams& p, std::size_t n, std::uint64_t seed) {
  p.validate();
  std::vector<double> out(n);
  for (std::size_t begin = 0, chunk = 0; begin < n; begin += kMcChunk, ++chunk) {
    Rng rng = stream_engine(seed, p.d1, p.d2, chunk);
    const std::size_t end = std::min(n, begin + kMcChunk);
    for (std::size_t i = begin; i < end; ++i) out[i] = sample_f(p, rng);
  }
  return out;
}

McEstimate mc_variation_probability(const FParams& p, std::size_t n, std::uint64_t seed) {
  require_mc_params(p, n);
  const VariationBand band = variation_band(p);
  const auto chunks = static_cast<long long>((n + kMcChunk - 1) / kMcChunk);
  std::size_t inside = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : inside)
  for (long long c = 0; c < chunks; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kMcChunk;
    const std::size_t end = std::min(n, begin + kMcChunk);
    inside += count_chunk(p, begin, end, seed, static_cast<std::uint64_t>(c), band.lower, band.upper);
  }
  return finish(inside, n, seed);
}

McEstimate mc_variation_probability_serial(const FParams& p, std::size_t n, std::uint64_t seed) {
  require_mc_params(p, n);
  const VariationBand band = variation_band(p);
  std::size_t inside = 0;
  for (std::size_t begin = 0, chunk = 0; begin < n; begin += kMcChunk, ++chunk) {
    inside += count_chunk(p, begin, std::min(n, begin + kMcChunk), seed, chunk, band.lower, band.upper);
  }
  return finish(inside, n, seed);
}

double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  if (xs.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

QuadResult quad_beta_integral(double a, double b, double lo, double hi, double tol) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("quad_beta_integral: a and b must be positive and finite");
  }
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw DomainError("quad_beta_integral: need 0 <= lo <= hi <= 1");
  }
  if (!(tol > 0.0)) throw DomainError("quad_beta_integral: tol must be positive");

  const double mid = std::clamp(0.5, lo, hi);
  const double half_tol = 0.5 * tol;
  QuadResult out;
  bool failed = false;

  auto add = [&](const Piece& piece) {
    out.value += piece.value;
    out.abs_error_bound += piece.error;
    out.evaluations += piece.evaluations;
    failed = failed || piece.failed;
  };

  if (mid > lo) {
    if (is_half_integer(a)) {
      // t = u^2: t^(a-1) dt = 2 u^(2a-1) du
      add(integrate(Integrand{2.0 * a, 2.0, b, 2.0}, std::sqrt(lo), std::sqrt(mid), half_tol));
    } else if (a < 1.0) {
      // t = u^(1/a): t^(a-1) dt = du / a
      add(integrate(Integrand{1.0, 1.0 / a, b, 1.0 / a}, std::pow(lo, a), std::pow(mid, a), half_tol));
    } else {
      add(integrate(Integrand{a, 1.0, b, 1.0}, lo, mid, half_tol));
    }
  }
  if (hi > mid) {
    if (is_half_integer(b)) {
      // 1 - t = v^2
      add(integrate(Integrand{2.0 * b, 2.0, a, 2.0}, std::sqrt(1.0 - hi), std::sqrt(1.0 - mid), half_tol));
    } else if (b < 1.0) {
      // 1 - t = v^(1/b): (1-t)^(b-1) dt = -dv / b
      add(integrate(Integrand{1.0, 1.0 / b, a, 1.0 / b}, std::pow(1.0 - hi, b), std::pow(1.0 - mid, b),
                    half_tol));
    } else {
      add(integrate(Integrand{b, 1.0, a, 1.0}, 1.0 - hi, 1.0 - mid, half_tol));
    }
  }

  if (failed || out.abs_error_bound > tol) {
    throw QuadratureError("quad_beta_integral: tolerance " + std::to_string(tol) + " not reached",
                          out.value, out.abs_error_bound);
  }
  return out;
}

}  // namespace varcmp
