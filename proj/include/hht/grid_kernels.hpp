#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

namespace hht {

// Serial is the reference path; parallel must reproduce it bit for bit,
// which holds because every grid point writes its own slot and no
// reduction crosses threads.
enum class Execution { serial, parallel };

template <class R, class Fn>
std::vector<R> map_grid(std::span<const double> xs, Fn&& fn, Execution ex = Execution::parallel) {
  std::vector<R> out(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  if (ex == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(xs[i]);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(xs[i]);
    } catch (...) {
#pragma omp critical(hht_map_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace hht
