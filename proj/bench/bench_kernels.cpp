// Microbenchmarks for the tensor product kernels and the signature builder.
// Each case takes the best of five timed runs; the parallel kernel
// and the serial scatter kernel are also checked for bitwise agreement on
// the benchmarked inputs, since the test suite relies on that equivalence.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathsig/path.hpp"
#include "pathsig/tensor.hpp"

namespace ps = pathsig;

namespace {

double g_sink = 0.0;  // defeats dead-code elimination of timed work

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <class F>
double best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

ps::TruncatedTensor random_tensor(std::mt19937_64& g, std::size_t d,
                                  std::size_t depth) {
  ps::TruncatedTensor a(d, depth);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t k = 0; k <= depth; ++k)
    for (double& c : a.level(k)) c = u(g);
  return a;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-26s %12s %12s %9s  %s\n", "case", "parallel s", "serial s",
              "speedup", "bitwise");

  std::mt19937_64 g(42);
  const std::size_t cases[][2] = {{2, 16}, {2, 18}, {3, 12}};
  for (const auto& c : cases) {
    const std::size_t d = c[0], depth = c[1];
    ps::TruncatedTensor a = random_tensor(g, d, depth);
    ps::TruncatedTensor b = random_tensor(g, d, depth);
    ps::TruncatedTensor p = ps::mul(a, b);
    ps::TruncatedTensor q = ps::mul_serial(a, b);
    bool same = true;
    for (std::size_t k = 0; k <= depth; ++k)
      same = same && p.level(k) == q.level(k);

    const double tp = best_of(5, [&] { p = ps::mul(a, b); });
    const double ts = best_of(5, [&] { q = ps::mul_serial(a, b); });
    g_sink += p.level(depth)[0] + q.level(depth)[0];

    char name[64];
    std::snprintf(name, sizeof name, "mul d=%zu N=%zu (%zu coeffs)", d, depth,
                  ps::total_entries(d, depth));
    std::printf("%-26s %12.6f %12.6f %8.2fx  %s\n", name, tp, ts, ts / tp,
                same ? "yes" : "NO");
  }

  // signature builder throughput on a random walk
  {
    const std::size_t d = 2, depth = 10, segs = 200;
    ps::SampledPath path;
    path.d = d;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> x(d, 0.0);
    for (std::size_t i = 0; i <= segs; ++i) {
      path.times.push_back(static_cast<double>(i) / segs);
      for (std::size_t j = 0; j < d; ++j) {
        path.points.push_back(x[j]);
        x[j] += u(g) / segs;
      }
    }
    ps::SignaturePath sp;
    const double t = best_of(5, [&] { sp = ps::signature_path(path, depth); });
    g_sink += sp.tensors.back().level(depth)[0];
    std::printf("%-26s %12.6f %12s %9s  %.0f segs/s\n",
                "signature_path d=2 N=10", t, "-", "-", segs / t);
  }

  std::printf("checksum: %.3g\n", g_sink);
  return 0;
}
