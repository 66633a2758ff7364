#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "szkit/boolfunc.hpp"
#include "szkit/hitting.hpp"

namespace szkit {

// ---------------------------------------------------------------------------
// Oracle for the existential queries of the inversion procedure.

// y_0..y_k and w_0..w_{k-1} with g(w_j) = y_j and y_{j+1} = w_j : a_{m+j+2}.
struct Walk {
  std::vector<Bits> ys;
  std::vector<Bits> ws;
  std::size_t length() const { return ws.size(); }
};

class Oracle {
 public:
  virtual ~Oracle() = default;
  // NO answers are trusted only from exhaustive oracles.
  virtual bool exhaustive() const = 0;
  // "exists w with g(w) = y"
  virtual std::optional<Bits> preimage(const BoolFunc& g, const Bits& y) = 0;
  // Longest walk from y[1, m+1] with at most max_len steps; ties go to the
  // lexicographically least sequence of w's.
  virtual Walk longest_walk(const BoolFunc& g, const Bits& y, std::size_t max_len) = 0;
  // "exists x in [a] with f(x) = v"
  virtual std::optional<std::uint64_t> value_preimage(const AvoidInstance& inst, std::uint64_t v) = 0;

  std::uint64_t queries() const { return queries_; }

 protected:
  std::uint64_t queries_ = 0;
};

class ExhaustiveOracle : public Oracle {
 public:
  bool exhaustive() const override { return true; }
  std::optional<Bits> preimage(const BoolFunc& g, const Bits& y) override;
  Walk longest_walk(const BoolFunc& g, const Bits& y, std::size_t max_len) override;
  std::optional<std::uint64_t> value_preimage(const AvoidInstance& inst, std::uint64_t v) override;
};

// ---------------------------------------------------------------------------
// Normalization

enum class NormalMode { Direct, Squared };
const char* to_string(NormalMode mode);

struct Normalized {
  NormalMode mode = NormalMode::Direct;
  std::size_t m = 0;       // g : {0,1}^m -> {0,1}^(m+1)
  std::uint64_t fold = 0;  // codewords below fold name values of the folded instance
  AvoidInstance source;    // the instance given to normalize
  AvoidInstance folded;    // equals source in direct mode, f x f in squared mode
  BoolFunc g;
};

// bitlen(a - 1), with bitlen(0) = 0.
std::size_t normal_width(std::uint64_t a);
// (val(x) mod a) + 1 with x_1 the least significant bit.
std::uint64_t num_a(const Bits& x, std::uint64_t a);

Normalized normalize(const AvoidInstance& inst);

struct BackmapResult {
  std::uint64_t value = 0;
  std::uint64_t oracle_queries = 0;
};

// For y outside range(g) the value lies outside range(f).
BackmapResult backmap(const Normalized& norm, const Bits& y, Oracle& oracle);

// ---------------------------------------------------------------------------
// Amplification and inversion

BoolFunc amplify(const BoolFunc& g, std::size_t t);

struct Inversion {
  std::optional<Bits> output;  // empty on Fail
  Walk walk;
  std::uint64_t oracle_queries = 0;
  std::string failure;
};

Inversion invert_amplified(const BoolFunc& g, std::size_t t, const Bits& y, Oracle& oracle);

// ---------------------------------------------------------------------------
// The class A_{e,x}

struct AvoidClassParams {
  std::size_t m = 0;       // description length
  std::size_t n = 2;
  std::size_t d = 1;
  std::size_t s = 1;
  std::size_t r = 1;
  std::uint64_t q = 2;
  std::size_t length = 1;  // output length of h

  std::size_t w() const;   // |q|
};

struct Schedule {
  std::string name;
  AvoidClassParams params;
  std::vector<std::string> violations;
};

Schedule desk_schedule(std::size_t m);
Schedule paper_schedule(std::size_t m);
std::vector<std::string> check_class_params(const AvoidClassParams& p);

std::size_t triple_encode(std::size_t i, std::size_t j, std::size_t k, std::size_t r, std::size_t n, std::size_t w);
struct Triple {
  std::size_t i, j, k;
  friend bool operator==(const Triple&, const Triple&) = default;
};
Triple triple_decode(std::size_t index, std::size_t r, std::size_t n, std::size_t w);

// A_{e,x} for the output hx = h(x).
Circuit build_a_circuit(const Bits& hx, const AvoidClassParams& p);
DefinableClass build_avoid_class(const BoolFunc& h, const AvoidClassParams& p);

// The string whose bit e(i,j,k) is bit k of h_{i,j}; zero elsewhere.
Bits encode_hitting_set(const HittingSet& h, const AvoidClassParams& p);

// ---------------------------------------------------------------------------
// End to end

using HsSolver = std::function<HittingSet(const DefinableClass&, std::uint64_t q, std::size_t r)>;

HsSolver default_hs_solver(std::uint64_t seed, std::uint64_t budget = 64);

struct AvoidTrace {
  Normalized norm;
  Schedule schedule;
  std::size_t t = 0;
  std::string g_digest;
  std::string h_digest;
  std::uint64_t class_size = 0;
  HittingSet hitting_set;
  Bits y;
  Inversion inversion;
  BackmapResult back;
  std::uint64_t value = 0;
};

enum class ScheduleKind { Desk, Paper };

AvoidTrace avoid_via_hitting(const AvoidInstance& inst, const HsSolver& solver, Oracle& oracle,
                             ScheduleKind kind = ScheduleKind::Desk);

std::uint64_t solve_avoid_brute(const AvoidInstance& inst, std::uint64_t cap = std::uint64_t{1} << 22);

}  // namespace szkit
