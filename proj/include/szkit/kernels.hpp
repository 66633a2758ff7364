#pragma once

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

namespace szkit {

enum class Backend { Serial, Parallel };

namespace detail {

// Collects the first exception thrown inside a parallel region.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr first_;
};

}  // namespace detail

// Smallest index i < count with pred(i), or nullopt. The parallel version
// scans in blocks so it stops soon after the first hit, and always returns
// the same index as the serial one.
template <class Pred>
std::optional<std::uint64_t> first_index(std::uint64_t count, Pred&& pred, Backend backend = Backend::Parallel) {
  if (backend == Backend::Serial || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const std::uint64_t block = std::max<std::uint64_t>(64, static_cast<std::uint64_t>(omp_get_max_threads()) * 16);
  detail::ExceptionSlot errors;
  for (std::uint64_t start = 0; start < count; start += block) {
    const std::uint64_t stop = std::min(count, start + block);
    std::uint64_t best = stop;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::uint64_t i = start; i < stop; ++i) {
      if (i >= best) continue;
      errors.run([&] {
        if (pred(i)) best = std::min(best, i);
      });
    }
    errors.rethrow();
    if (best < stop) return best;
  }
  return std::nullopt;
}

template <class Pred>
std::uint64_t count_where(std::uint64_t count, Pred&& pred, Backend backend = Backend::Parallel) {
  std::uint64_t total = 0;
  if (backend == Backend::Serial) {
    for (std::uint64_t i = 0; i < count; ++i) total += pred(i) ? 1 : 0;
    return total;
  }
  detail::ExceptionSlot errors;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::uint64_t i = 0; i < count; ++i) {
    errors.run([&] { total += pred(i) ? 1 : 0; });
  }
  errors.rethrow();
  return total;
}

// out[i] = f(i) for every i < count.
template <class T, class F>
std::vector<T> map_indices(std::uint64_t count, F&& f, Backend backend = Backend::Parallel) {
  std::vector<T> out(count);
  if (backend == Backend::Serial) {
    for (std::uint64_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  detail::ExceptionSlot errors;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::uint64_t i = 0; i < count; ++i) {
    errors.run([&] { out[i] = f(i); });
  }
  errors.rethrow();
  return out;
}

// Point of S_q^n with lexicographic index idx; the first coordinate is the
// most significant digit.
inline std::vector<std::uint64_t> cube_point(std::uint64_t idx, std::size_t n, std::uint64_t q) {
  std::vector<std::uint64_t> p(n, 0);
  for (std::size_t j = n; j-- > 0;) {
    p[j] = idx % q;
    idx /= q;
  }
  return p;
}

// q^n, or nullopt when it exceeds cap.
inline std::optional<std::uint64_t> cube_size(std::size_t n, std::uint64_t q, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (q != 0 && total > cap / q) return std::nullopt;
    total *= q;
  }
  if (total > cap) return std::nullopt;
  return total;
}

}  // namespace szkit
