#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "szkit/evaluator.hpp"
#include "szkit/generators.hpp"

using namespace szkit;

namespace {

Circuit prod() { return parse_circuit("g0 = var x1\ng1 = var x2\ng2 = mul g0 g1\noutput g2"); }

std::size_t ceil_log2(std::size_t v) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

}  // namespace

TEST(Eval, Product) {
  EXPECT_EQ(eval_arithmetic(prod(), {{3, 5}, {}}, 2), 15);
}

TEST(Eval, DifferenceOfSquares) {
  CircuitBuilder b;
  auto x = b.var(1);
  auto c = b.mul(b.add(x, b.constant(1)), b.add(x, b.constant(-1)));
  EXPECT_EQ(eval_arithmetic(b.build(c), {{7}, {}}, 2), 48);
}

TEST(Eval, DegreeBoundEnforced) {
  CircuitBuilder b;
  auto g = b.var(1);
  for (int i = 0; i < 3; ++i) g = b.mul(g, g);
  Circuit c = b.build(g);
  EXPECT_THROW(eval_arithmetic(c, {{2}, {}}, 4), DegreeBoundError);
  EXPECT_EQ(eval_arithmetic(c, {{2}, {}}, 8), 256);
}

TEST(Eval, DimensionMismatch) {
  EXPECT_THROW(eval_arithmetic(prod(), {{3}, {}}, 2), DimensionError);
  Circuit p = parse_circuit("g0 = param p1\ng1 = var x1\ng2 = add g0 g1\noutput g2");
  EXPECT_THROW(eval_arithmetic(p, {{1}, {}}, 1), DimensionError);
  EXPECT_EQ(eval_arithmetic(p, {{1}, {10}}, 1), 11);
}

TEST(Eval, PluggedValuesWin) {
  Circuit p = parse_circuit("g0 = param p1\ng1 = var x1\ng2 = add g0 g1\n# plug p1 = 4\noutput g2");
  EXPECT_EQ(eval_arithmetic(p, {{1}, {}}, 1), 5);
  EXPECT_EQ(eval_arithmetic(p, {{1}, {100}}, 1), 5);
}

TEST(Eval, BitLengthGuard) {
  CircuitBuilder b;
  auto g = b.constant(3);
  for (int i = 0; i < 12; ++i) g = b.mul(g, g);
  Circuit c = b.build(g);
  EXPECT_THROW(eval_arithmetic(c, {{}, {}}, pow_int(2, 12), EvalLimits{1000}), BitLengthExceeded);
  EXPECT_EQ(bitlen(eval_arithmetic(c, {{}, {}}, pow_int(2, 12))), bitlen(pow_int(3, 4096)));
}

TEST(Eval, AgreesWithNaiveRecursion) {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    RandomCircuitSpec spec;
    spec.n_vars = 1 + rng.below(3);
    spec.ops = 1 + rng.below(6);
    spec.const_lo = -50;
    spec.const_hi = 50;
    Circuit c = random_circuit(rng, spec);
    std::vector<Int> x;
    for (std::size_t j = 0; j < c.n_vars(); ++j) x.push_back(Int(static_cast<long>(rng.below(2001))) - 1000);
    Evaluator ev(c, analyze_degrees(c).total);
    ASSERT_EQ(ev(std::span<const Int>(x)), oracle::naive_eval(c, x)) << serialize_circuit(c);
  }
}

TEST(Eval, TruncatesLongPoints) {
  Evaluator ev(prod(), 2);
  std::vector<std::uint64_t> p{2, 3, 99};
  EXPECT_EQ(ev(std::span<const std::uint64_t>(p)), 6);
}

// With inputs of bit length <= s, total degree d and t gates the value has
// bit length at most d (s + t): additions gain one bit, products add lengths.
TEST(BitBound, LinearInGatesTimesDegree) {
  Rng rng(9);
  for (int t = 0; t < 500; ++t) {
    RandomCircuitSpec spec;
    spec.n_vars = 1 + rng.below(3);
    spec.ops = 1 + rng.below(8);
    spec.const_lo = -1000;
    spec.const_hi = 1000;
    Circuit c = random_circuit(rng, spec);
    std::vector<Int> x;
    std::size_t s = 0;
    for (std::size_t j = 0; j < c.n_vars(); ++j) {
      x.push_back(Int(static_cast<long>(rng.below(1u << 16))));
      s = std::max(s, bitlen(x.back()));
    }
    for (const auto& g : c.gates())
      if (g.kind == GateKind::Const) s = std::max(s, bitlen(g.value));
    Int d = oracle::total_degree(c);
    Int v = oracle::naive_eval(c, x);
    ASSERT_LE(Int(static_cast<unsigned long>(bitlen(v))), d * Int(static_cast<unsigned long>(s + c.size())));
  }
}

// The textbook form (s + 2)(2d - 1) + d ceil(log2(t + 1)) misses chains of
// doublings: x + x repeated 8 times at x = 1.
TEST(BitBound, DoublingChainBeatsLogTerm) {
  CircuitBuilder b;
  auto g = b.var(1);
  for (int i = 0; i < 8; ++i) g = b.add(g, g);
  Circuit c = b.build(g);
  Int v = eval_arithmetic(c, {{1}, {}}, 1);
  EXPECT_EQ(v, 256);
  std::size_t s = 1, d = 1, t = c.size();
  std::size_t formula = (s + 2) * (2 * d - 1) + d * ceil_log2(t + 1);
  EXPECT_GT(bitlen(v), formula);
  EXPECT_LE(bitlen(v), d * (s + t));
}
