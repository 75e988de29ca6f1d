#pragma once

#include <cstddef>
#include <exception>

namespace spherical {

/// Serial is the reference path; Parallel fans independent items out over OpenMP threads.
/// Both visit every index exactly once, and callers merge results by index, so the two
/// paths produce identical output.
enum class Execution { Serial, Parallel };

template <class Fn>
void for_each_index(std::size_t count, Execution execution, Fn&& fn) {
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(spherical_for_each_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace spherical
