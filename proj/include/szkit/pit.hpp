#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "szkit/circuit.hpp"
#include "szkit/hitting.hpp"
#include "szkit/kernels.hpp"

namespace szkit {

enum class VerdictKind { NonZero, ZeroOnCube, ProbablyZero };
enum class Provenance { Cube, Random, HittingSet };

const char* to_string(VerdictKind kind);
const char* to_string(Provenance p);

struct PitVerdict {
  VerdictKind kind = VerdictKind::ZeroOnCube;
  std::optional<Point> witness;
  std::uint64_t trials = 0;
  Provenance provenance = Provenance::Cube;
  std::uint64_t q = 0;

  bool is_zero() const { return kind != VerdictKind::NonZero; }
};

struct PitOptions {
  // 0 means q = 2nd; a larger value enlarges the cube, a smaller one is rejected.
  std::uint64_t q = 0;
  std::uint64_t exhaustion_cap = std::uint64_t{1} << 22;
  Backend backend = Backend::Parallel;
};

// 2nd, or 1 when n = 0.
std::uint64_t pit_side_length(std::size_t n, std::size_t d);

PitVerdict pit_cube_brute(const Circuit& c, std::size_t n, std::size_t d, PitOptions opts = {});
PitVerdict pit_random(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t trials, std::uint64_t seed,
                      PitOptions opts = {});
PitVerdict pit_with_hitting_set(const Circuit& c, const HittingSet& h, PitOptions opts = {});

enum class PitMethod { Cube, Random, HittingSet };

struct EquivParams {
  PitMethod method = PitMethod::Cube;
  std::uint64_t trials = 40;
  std::uint64_t seed = 0;
  const HittingSet* hitting_set = nullptr;
  PitOptions options;
};

// f + (-1) * g over x_1..x_n, n the larger of the two variable counts.
Circuit difference_circuit(const Circuit& f, const Circuit& g);
PitVerdict equiv_test(const Circuit& f, const Circuit& g, const EquivParams& params);

}  // namespace szkit
