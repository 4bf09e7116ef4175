// times the parallel batch kernels against their serial reference
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fibered/batch.hpp"
#include "fibered/surface.hpp"
#include "fibered/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fibered;

namespace {

using clk = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  auto t0 = clk::now();
  f();
  auto t1 = clk::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 20000;
  int max_len = argc > 2 ? std::atoi(argv[2]) : 12;
  if (count <= 0 || max_len <= 0) {
    std::fprintf(stderr, "usage: %s [word-count] [max-word-len]\n", argv[0]);
    return 2;
  }

  surface_context s(2);
  auto words = generate_fixture_words(2, 99, count, max_len);
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("%d genus-2 words, length <= %d, parallel kernels %s, %d thread(s)\n", count,
              max_len, parallel_enabled() ? "on" : "off", threads);

  std::vector<dehn_result> ds, dp;
  double t_ds = time_ms([&] { ds = dehn_reduce_batch_serial(s, words); });
  double t_dp = time_ms([&] { dp = dehn_reduce_batch_parallel(s, words); });
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!(ds[i].residual == dp[i].residual) || ds[i].relator_count != dp[i].relator_count) {
      std::printf("reduction kernels disagree at word %zu\n", i);
      return 1;
    }
  }
  std::printf("reduction   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", t_ds, t_dp,
              t_dp > 0 ? t_ds / t_dp : 0.0);

  oracle_limits lim;
  lim.max_insertions = 1;
  lim.max_states = 200000;
  std::vector<std::optional<int>> os, op;
  double t_os = time_ms([&] { os = oracle_count_batch_serial(s, words, lim); });
  double t_op = time_ms([&] { op = oracle_count_batch_parallel(s, words, lim); });
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (os[i] != op[i]) {
      std::printf("certificate kernels disagree at word %zu\n", i);
      return 1;
    }
  }
  std::printf("certificate serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", t_os, t_op,
              t_op > 0 ? t_os / t_op : 0.0);
  return 0;
}
