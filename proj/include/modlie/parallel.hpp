#pragma once

// Row-partitioned loop drivers. Each row writes into its own output buffer
// and buffers are concatenated in row order, so serial and OpenMP runs give
// identical results.

#include <cstddef>
#include <exception>
#include <vector>

namespace modlie::par {

enum class Exec { Serial, Parallel };

template <class R, class Body>
std::vector<R> collect_rows(std::size_t rows, Exec exec, Body&& body) {
  std::vector<std::vector<R>> per_row(rows);
  if (exec == Exec::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long r = 0; r < static_cast<long>(rows); ++r) {
      try {
        body(static_cast<std::size_t>(r), per_row[r]);
      } catch (...) {
#pragma omp critical(modlie_collect_rows)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t r = 0; r < rows; ++r) body(r, per_row[r]);
  }
  std::vector<R> out;
  for (auto& v : per_row)
    for (auto& x : v) out.push_back(std::move(x));
  return out;
}

int max_threads();

}  // namespace modlie::par
