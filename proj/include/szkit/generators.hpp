#pragma once

#include <cstddef>
#include <cstdint>

#include "szkit/boolfunc.hpp"
#include "szkit/circuit.hpp"
#include "szkit/rng.hpp"
#include "szkit/unipoly.hpp"

namespace szkit {

struct RandomCircuitSpec {
  std::size_t n_vars = 2;
  std::size_t ops = 6;  // add/mul gates after the inputs
  std::size_t consts = 2;
  std::int64_t const_lo = -3;
  std::int64_t const_hi = 3;
  std::uint64_t mul_percent = 50;
};

// Inputs x_1..x_n, then random constants, then random add/mul gates over
// earlier gates; the last gate is the output.
Circuit random_circuit(Rng& rng, const RandomCircuitSpec& spec);

// Rejection-samples random_circuit until the maximum individual degree on
// the variables lies in [1, d].
Circuit random_circuit_max_degree(Rng& rng, std::size_t n, std::size_t d, std::size_t max_ops = 8);

// A product of at most d affine forms c_0 + sum c_j x_j with small
// coefficients; such circuits vanish on many cube points.
Circuit random_affine_product(Rng& rng, std::size_t n, std::size_t d, std::int64_t coeff_range = 3);

// Random tree-shaped circuit (each gate used at most once).
Circuit random_formula(Rng& rng, std::size_t n_vars, std::size_t leaves);

UniPoly random_unipoly(Rng& rng, std::size_t d, std::size_t coeff_bits);
// A polynomial with the given roots times a random cofactor of degree extra.
UniPoly planted_unipoly(Rng& rng, const std::vector<std::int64_t>& roots, std::size_t extra, std::size_t coeff_bits);

AvoidInstance random_instance(Rng& rng, std::uint64_t a, std::uint64_t b);

}  // namespace szkit
