#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fibered/surface.hpp"
#include "fibered/verify.hpp"
#include "fibered/words.hpp"

namespace fibered {

// serial and parallel kernels compute identical results; the serial form is
// the reference the parallel form is tested against

std::vector<dehn_result> dehn_reduce_batch_serial(const surface_context& ctx,
                                                  const std::vector<free_word>& words);
std::vector<dehn_result> dehn_reduce_batch_parallel(const surface_context& ctx,
                                                    const std::vector<free_word>& words);

// a budget overrun counts as no verdict here, same as search exhaustion
std::vector<std::optional<int>> oracle_count_batch_serial(const surface_context& ctx,
                                                          const std::vector<free_word>& words,
                                                          const oracle_limits& lim);
std::vector<std::optional<int>> oracle_count_batch_parallel(const surface_context& ctx,
                                                            const std::vector<free_word>& words,
                                                            const oracle_limits& lim);

// outcomes land at their own index; fn must derive any randomness from the
// index alone so scheduling cannot change results
std::vector<trial_outcome> map_trials_serial(int n, const std::function<trial_outcome(int)>& fn);
std::vector<trial_outcome> map_trials_parallel(int n, const std::function<trial_outcome(int)>& fn);

bool parallel_enabled();

}  // namespace fibered
