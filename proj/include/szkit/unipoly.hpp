#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "szkit/bigint.hpp"
#include "szkit/circuit.hpp"
#include "szkit/evaluator.hpp"

namespace szkit {

// c_0 + c_1 x + ... + c_d x^d; trailing zeros are allowed.
class UniPoly {
 public:
  explicit UniPoly(std::vector<Int> coeffs);

  std::size_t degree_bound() const { return coeffs_.size() - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // Maximum sign-magnitude bit complexity of the coefficients.
  std::size_t bit_complexity() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Int> coeffs_;
};

struct RootLimits {
  std::uint64_t q_cap = std::uint64_t{1} << 16;
};

Int coef(const UniPoly& p, std::size_t i);
Int eval_unipoly(const UniPoly& p, const Int& u, EvalLimits limits = {});

// Requires n_vars <= 1, every parameter plugged and individual degree on x1 <= d.
UniPoly extract_unipoly(const Circuit& c, std::size_t d);

// Coefficient vectors of every gate (truncated to degree d), indexed by gate.
// Gates outside the output cone are left empty.
std::vector<std::vector<Int>> extract_gate_coeffs(const Circuit& c, std::size_t d);

// Sorted distinct roots in {0,...,q-1}, padded or truncated to length
// degree_bound() with the marker q.
std::vector<std::uint64_t> enumerate_roots(const UniPoly& p, std::uint64_t q, RootLimits limits = {});

// b with a(u) = (u - v) b(u) for all u.
UniPoly deflate(const UniPoly& a, const Int& v);

UniPoly parse_unipoly(std::string_view text);
std::string format_unipoly(const UniPoly& p);

}  // namespace szkit
