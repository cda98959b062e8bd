#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace rankcalc {

/// Selects the OpenMP driver or the plain serial loop for the independent
/// per-item kernels (per anchor object, per object pair, per covering vertex).
/// Both drivers run the same per-item routine and return results in index
/// order, so outputs are identical.
enum class Execution { serial, parallel };

int max_threads() noexcept;

template <class R, class F>
std::vector<R> map_indices(std::size_t n, F&& fn, Execution exec) {
  std::vector<R> out(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace rankcalc
