#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace szkit {

// Bit strings are 1-indexed in prose and 0-indexed in storage: bits[0] is x_1.
// As numbers they are read least-significant-bit first.
using Bits = std::vector<std::uint8_t>;

Bits bits_from_uint(std::uint64_t value, std::size_t length);
std::uint64_t bits_to_uint(const Bits& bits);

// x[i, j] with 1-based inclusive endpoints; empty when i > j.
Bits substring(const Bits& x, std::size_t i, std::size_t j);
Bits concat(const Bits& x, const Bits& y);

std::string bits_to_string(const Bits& bits);
Bits bits_from_string(std::string_view text);

}  // namespace szkit
