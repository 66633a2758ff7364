#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "szkit/bigint.hpp"
#include "szkit/circuit.hpp"

namespace szkit {

struct EvalLimits {
  // Maximum bit length of any intermediate value.
  std::size_t bitlen_guard = std::size_t{1} << 20;
};

struct Assignment {
  std::vector<Int> vars;
  // Either one entry per parameter, or empty when every parameter is plugged.
  // Plugged values take precedence over supplied ones.
  std::vector<Int> params;
};

// Validated evaluation context. The degree check runs once at construction;
// calls are const and may run concurrently.
class Evaluator {
 public:
  Evaluator(Circuit c, const Int& degree_bound, EvalLimits limits = {});

  const Circuit& circuit() const { return c_; }
  const Int& total_degree() const { return total_; }

  Int operator()(const Assignment& asg) const;
  // Variables only; every parameter must be plugged. A longer point is
  // accepted and truncated to the first n_vars coordinates.
  Int operator()(std::span<const Int> point) const;
  Int operator()(std::span<const std::uint64_t> point) const;

  bool vanishes_at(std::span<const std::uint64_t> point) const { return (*this)(point) == 0; }

 private:
  template <class Load>
  Int run(Load&& load_var, std::span<const Int> params) const;

  Circuit c_;
  Int total_;
  EvalLimits limits_;
  std::vector<std::size_t> cone_;
};

Int eval_arithmetic(const Circuit& c, const Assignment& asg, const Int& degree_bound, EvalLimits limits = {});

}  // namespace szkit
