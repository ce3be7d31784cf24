// Serial reference vs OpenMP kernels: wall time and output equality.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "varcmp/oracle.hpp"
#include "varcmp/sweep.hpp"

using namespace varcmp;

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

std::string csv_of(const SweepReport& r) {
  std::ostringstream os;
  write_csv(os, r);
  return os.str();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel timings", "bench_parallel"};
  int reps = 3;
  int threads = 0;
  std::string d2 = "5..400";
  std::size_t samples = 2000000;
  app.add_option("--reps", reps, "repetitions, best time reported");
  app.add_option("--threads", threads, "OpenMP threads (0: all available)");
  app.add_option("--d2", d2, "d2 range of the sweep");
  app.add_option("--samples", samples, "Monte Carlo draws");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("threads %d\n", omp_get_max_threads());

  SweepSpec spec;
  spec.d1 = {1, 4};
  spec.d2 = IntRange::parse(d2);
  spec.checks = {CheckKind::Bound, CheckKind::Monotone, CheckKind::Steps};
  spec.jobs = threads;
  SweepReport ser, par;
  const double ts = best_of(reps, [&] { ser = run_sweep_serial(spec); });
  const double tp = best_of(reps, [&] { par = run_sweep(spec); });
  row("sweep bound,monotone,steps", ts, tp, csv_of(ser) == csv_of(par));

  const FParams p{4, 12};
  McEstimate ms, mp;
  const double ms_t = best_of(reps, [&] { ms = mc_variation_probability_serial(p, samples, 42); });
  const double mp_t = best_of(reps, [&] { mp = mc_variation_probability(p, samples, 42); });
  row("monte carlo F(4,12)", ms_t, mp_t, ms.estimate == mp.estimate);
  return 0;
}
