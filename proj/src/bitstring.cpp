#include "szkit/bitstring.hpp"

#include "szkit/errors.hpp"

namespace szkit {

Bits bits_from_uint(std::uint64_t value, std::size_t length) {
  Bits out(length, 0);
  for (std::size_t i = 0; i < length && i < 64; ++i) out[i] = static_cast<std::uint8_t>((value >> i) & 1U);
  return out;
}

std::uint64_t bits_to_uint(const Bits& bits) {
  if (bits.size() > 64) throw InputError("bit string longer than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) v |= static_cast<std::uint64_t>(bits[i] & 1U) << i;
  return v;
}

Bits substring(const Bits& x, std::size_t i, std::size_t j) {
  if (i > j) return {};
  if (i == 0 || j > x.size()) throw InputError("substring bounds out of range");
  return Bits(x.begin() + static_cast<std::ptrdiff_t>(i - 1), x.begin() + static_cast<std::ptrdiff_t>(j));
}

Bits concat(const Bits& x, const Bits& y) {
  Bits out(x);
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError("bit string may contain only 0 and 1");
    out.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

}  // namespace szkit
