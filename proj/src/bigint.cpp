#include "szkit/bigint.hpp"

#include <cctype>

#include "szkit/errors.hpp"

namespace szkit {

std::size_t bitlen(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t length_of(std::uint64_t x) {
  std::size_t n = 0;
  while (x != 0) {
    ++n;
    x >>= 1;
  }
  return n;
}

std::size_t bit_complexity(const Int& v) { return bitlen(v) + 1; }

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Int(digits, 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

Int pow_int(const Int& base, std::uint64_t exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "64-bit unsigned long required");

Int from_u64(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

std::uint64_t to_u64(const Int& v) {
  if (v < 0 || !v.fits_ulong_p()) throw InputError("value " + to_string(v) + " does not fit in 64 bits");
  return v.get_ui();
}

}  // namespace szkit
