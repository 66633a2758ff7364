#pragma once

#include <cstdint>
#include <random>

namespace szkit {

// Seedable, splittable generator. Streams derived by split() are independent
// of how many values the parent has drawn.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  Rng split(std::uint64_t stream) const;

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace szkit
