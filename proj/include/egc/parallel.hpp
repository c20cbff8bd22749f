#pragma once

// OpenMP helpers shared by the data-parallel kernels. Every kernel has a
// serial reference path selected by Execution::kSerial; both paths evaluate
// the same per-index work and reduce in index order, so their results are
// bit-identical regardless of thread count.

#include <omp.h>

#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

namespace egc {

enum class Execution { kSerial, kParallel };

inline int max_threads() { return omp_get_max_threads(); }
inline void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

// Calls body(i) for every i in [0, n). Exceptions thrown by body are
// captured per index; the one with the lowest index is rethrown once all
// iterations finish, so the reported error does not depend on scheduling.
template <class Body>
void for_each_index(std::size_t n, Execution policy, Body&& body) {
  if (policy == Execution::kSerial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::size_t first_index = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(egc_for_each_index_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

// Evaluates fn(i) for every index into a vector ordered by index.
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Execution policy, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  if (policy == Execution::kSerial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
  }
  std::vector<std::optional<T>> slots(n);
  for_each_index(n, policy, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace egc
