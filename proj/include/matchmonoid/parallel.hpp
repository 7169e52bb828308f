#ifndef MATCHMONOID_PARALLEL_HPP
#define MATCHMONOID_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "matchmonoid/config.hpp"

namespace matchmonoid {

// Runs fn(begin, end) over contiguous chunks of [0, total). Exceptions are
// replayed from the lowest chunk index, so failure behaviour is deterministic.
// Callers guarantee chunk independence; deterministic results come from
// merging chunk outputs in chunk order.
template <typename Fn>
void parallel_chunks(std::size_t total, Fn&& fn) {
  if (total == 0) return;
  std::size_t nthreads = config::workers();
  if (nthreads > total) nthreads = total;
  if (nthreads <= 1) {
    fn(std::size_t{0}, total);
    return;
  }
  std::vector<std::exception_ptr> errors(nthreads);
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  std::size_t chunk = (total + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = begin + chunk < total ? begin + chunk : total;
    if (begin >= end) break;
    threads.emplace_back([&, t, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace matchmonoid

#endif
