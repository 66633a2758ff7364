#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace szkit {

using Int = mpz_class;

// Number of binary digits of |v|; zero has length 0.
std::size_t bitlen(const Int& v);

// |x| = ceil(log2(x + 1)) for x >= 0.
std::size_t length_of(std::uint64_t x);

// Sign-magnitude bit complexity: bitlen(|v|) + 1.
std::size_t bit_complexity(const Int& v);

Int parse_int(std::string_view text);
std::string to_string(const Int& v);

Int pow_int(const Int& base, std::uint64_t exp);
Int from_u64(std::uint64_t v);

// Throws if v does not fit.
std::uint64_t to_u64(const Int& v);

}  // namespace szkit
