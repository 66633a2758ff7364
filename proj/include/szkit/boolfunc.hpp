#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szkit/bitstring.hpp"

namespace szkit {

// A total function {0,1}^in_bits -> {0,1}^out_bits stored as a table indexed
// by the input read as a number.
class BoolFunc {
 public:
  static constexpr std::size_t kMaxInBits = 24;

  BoolFunc() : BoolFunc(0, 0, {Bits{}}) {}
  BoolFunc(std::size_t in_bits, std::size_t out_bits, std::vector<Bits> table);
  static BoolFunc tabulate(std::size_t in_bits, std::size_t out_bits, const std::function<Bits(const Bits&)>& f);

  std::size_t in_bits() const { return in_bits_; }
  std::size_t out_bits() const { return out_bits_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << in_bits_; }
  const std::vector<Bits>& table() const { return table_; }

  const Bits& at(std::uint64_t x) const { return table_.at(x); }
  const Bits& operator()(const Bits& x) const;

  // Smallest x with f(x) = y.
  std::optional<std::uint64_t> preimage(const Bits& y) const;
  bool in_range(const Bits& y) const { return preimage(y).has_value(); }

  // Stable hex digest of the table.
  std::string digest() const;

 private:
  std::size_t in_bits_;
  std::size_t out_bits_;
  std::vector<Bits> table_;
};

// f : [a] -> [b] with b >= 2a >= 2; table[x - 1] = f(x).
struct AvoidInstance {
  std::uint64_t a = 1;
  std::uint64_t b = 2;
  std::vector<std::uint64_t> table;
  std::string blob;

  std::uint64_t operator()(std::uint64_t x) const { return table.at(x - 1); }
};

void check_instance(const AvoidInstance& inst);

// Lines "x<TAB>f(x)" with 1-based decimal values; b defaults to 2a.
AvoidInstance parse_tsv_instance(std::string_view text, std::optional<std::uint64_t> b = std::nullopt);
std::string format_tsv_instance(const AvoidInstance& inst);

// Boolean circuit text (.bc):
//   g<k> = in <i> | const 0|1 | and g<i> g<j> | or g<i> g<j> | xor g<i> g<j> | not g<i>
//   out g<k> g<l> ...      output bits, least significant first
//   domain <a>             optional, defaults to 2^(number of inputs)
//   codomain <b>           optional, defaults to 2a
// x in [a] is fed as the bits of x - 1; the output bits read as a number v give f(x) = v + 1.
AvoidInstance parse_bc_instance(std::string_view text);

}  // namespace szkit
