#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "szkit/bigint.hpp"
#include "szkit/circuit.hpp"
#include "szkit/evaluator.hpp"
#include "szkit/kernels.hpp"
#include "szkit/unipoly.hpp"

namespace szkit {

using Point = std::vector<std::uint64_t>;

struct RootCode {
  std::size_t k = 1;
  std::size_t i = 1;
  Point rest;

  friend bool operator==(const RootCode&, const RootCode&) = default;
};

RootCode default_code(std::size_t n);
// Throws InputError unless code lies in [n] x [d] x S_q^{n-1}.
void check_code(const RootCode& code, std::size_t n, std::size_t d, std::uint64_t q);

std::string format_code(const RootCode& code);
RootCode parse_code(std::string_view text);

struct CodecLimits {
  std::uint64_t q_cap = std::uint64_t{1} << 16;
  std::uint64_t exhaustion_cap = std::uint64_t{1} << 22;
  EvalLimits eval;
};

// P with parameters plugged, together with a fixed point a (the non-root).
class SZContext {
 public:
  SZContext(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t q, std::vector<Int> nonroot,
            CodecLimits limits = {});

  const Circuit& circuit() const { return eval_.circuit(); }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::uint64_t q() const { return q_; }
  const std::vector<Int>& nonroot() const { return nonroot_; }
  const CodecLimits& limits() const { return limits_; }
  const Evaluator& evaluator() const { return eval_; }

  // False when P(a) = 0; encode and decode then return default values.
  bool nonroot_ok() const { return nonroot_ok_; }

  Int eval(std::span<const Int> point) const { return eval_(point); }

  // The univariate polynomial x -> P(prefix, x, a_{k+1}, ..., a_n).
  UniPoly slice_poly(std::size_t k, std::span<const std::uint64_t> prefix) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::uint64_t q_;
  std::vector<Int> nonroot_;
  CodecLimits limits_;
  Evaluator eval_;
  bool nonroot_ok_ = false;
};

// Replaces x_j by values[j-1] for every j != k and renames x_k to x_1.
Circuit restrict_circuit(const Circuit& c, std::size_t k, std::span<const Int> values);

RootCode encode_root(const SZContext& ctx, std::span<const std::uint64_t> b);
Point decode_code(const SZContext& ctx, const RootCode& code);

// Every decode_code value over all of [n] x [d] x S_q^{n-1}, in code order.
std::vector<Point> decode_image(const SZContext& ctx);

Int code_space_size(std::size_t n, std::size_t d, std::uint64_t q);
Int pack_code(const RootCode& code, std::size_t n, std::size_t d, std::uint64_t q);
RootCode unpack_code(const Int& idx, std::size_t n, std::size_t d, std::uint64_t q);

std::uint64_t count_roots_brute(const Circuit& c, std::size_t n, std::uint64_t q,
                                std::uint64_t cap = std::uint64_t{1} << 22, Backend backend = Backend::Parallel);

}  // namespace szkit
