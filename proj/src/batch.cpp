#include "fibered/batch.hpp"

#include <exception>
#include <string>

#include "fibered/errors.hpp"

namespace fibered {

namespace {

// first exception wins; later ones are dropped
struct error_box {
  std::exception_ptr ptr;

  void capture() {
#ifdef _OPENMP
#pragma omp critical(fibered_error_box)
#endif
    {
      if (!ptr) ptr = std::current_exception();
    }
  }

  void rethrow() const {
    if (ptr) std::rethrow_exception(ptr);
  }
};

}  // namespace

std::vector<dehn_result> dehn_reduce_batch_serial(const surface_context& ctx,
                                                  const std::vector<free_word>& words) {
  std::vector<dehn_result> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = ctx.dehn_reduce(words[i]);
  return out;
}

std::vector<dehn_result> dehn_reduce_batch_parallel(const surface_context& ctx,
                                                    const std::vector<free_word>& words) {
  std::vector<dehn_result> out(words.size());
  error_box err;
  const long long n = (long long)words.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long long i = 0; i < n; ++i) {
    try {
      out[(std::size_t)i] = ctx.dehn_reduce(words[(std::size_t)i]);
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
  return out;
}

std::vector<std::optional<int>> oracle_count_batch_serial(const surface_context& ctx,
                                                          const std::vector<free_word>& words,
                                                          const oracle_limits& lim) {
  std::vector<std::optional<int>> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      out[i] = ctx.oracle_count(words[i], lim);
    } catch (const resource_error&) {
      out[i] = std::nullopt;
    }
  }
  return out;
}

std::vector<std::optional<int>> oracle_count_batch_parallel(const surface_context& ctx,
                                                            const std::vector<free_word>& words,
                                                            const oracle_limits& lim) {
  std::vector<std::optional<int>> out(words.size());
  error_box err;
  const long long n = (long long)words.size();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long long i = 0; i < n; ++i) {
    try {
      out[(std::size_t)i] = ctx.oracle_count(words[(std::size_t)i], lim);
    } catch (const resource_error&) {
      out[(std::size_t)i] = std::nullopt;
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
  return out;
}

namespace {

trial_outcome guarded(int i, const std::function<trial_outcome(int)>& fn) {
  try {
    trial_outcome t = fn(i);
    t.index = i;
    return t;
  } catch (const std::exception& e) {
    return {i, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<trial_outcome> map_trials_serial(int n, const std::function<trial_outcome(int)>& fn) {
  std::vector<trial_outcome> out((std::size_t)std::max(0, n));
  for (int i = 0; i < n; ++i) out[(std::size_t)i] = guarded(i, fn);
  return out;
}

std::vector<trial_outcome> map_trials_parallel(int n, const std::function<trial_outcome(int)>& fn) {
  std::vector<trial_outcome> out((std::size_t)std::max(0, n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) out[(std::size_t)i] = guarded(i, fn);
  return out;
}

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace fibered
