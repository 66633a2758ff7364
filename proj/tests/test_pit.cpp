#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "szkit/generators.hpp"
#include "szkit/pit.hpp"

using namespace szkit;

namespace {

Circuit prod() { return parse_circuit("g0 = var x1\ng1 = var x2\ng2 = mul g0 g1\noutput g2"); }

Circuit commutator() {
  CircuitBuilder b;
  auto x = b.var(1);
  auto y = b.var(2);
  return b.build(b.sub(b.mul(x, y), b.mul(y, x)));
}

}  // namespace

TEST(Cube, Examples) {
  auto v = pit_cube_brute(prod(), 2, 1);
  EXPECT_EQ(v.kind, VerdictKind::NonZero);
  EXPECT_EQ(v.witness, (Point{1, 1}));
  EXPECT_EQ(v.q, 4u);

  CircuitBuilder b;
  auto x = b.var(1);
  auto y = b.var(2);
  auto c = b.add(b.add(x, y), b.mul(b.constant(-1), b.add(y, x)));
  EXPECT_EQ(pit_cube_brute(b.build(c), 2, 1).kind, VerdictKind::ZeroOnCube);
  EXPECT_EQ(pit_cube_brute(zero_circuit(), 2, 1).kind, VerdictKind::ZeroOnCube);
}

TEST(Cube, SideLength) {
  EXPECT_EQ(pit_side_length(3, 2), 12u);
  EXPECT_EQ(pit_side_length(0, 5), 1u);
  EXPECT_THROW(pit_cube_brute(prod(), 2, 1, PitOptions{3}), InputError);
  EXPECT_EQ(pit_cube_brute(prod(), 2, 1, PitOptions{9}).q, 9u);
  EXPECT_THROW(pit_cube_brute(prod(), 2, 1, PitOptions{0, 10}), CapExceeded);
}

TEST(Cube, FirstWitnessIsLexicographicallyLeast) {
  Rng rng(14);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + rng.below(3);
    Circuit c = random_affine_product(rng, n, 1 + rng.below(2));
    std::size_t d = std::max<std::size_t>(1, static_cast<std::size_t>(to_u64(analyze_degrees(c).max_var_individual())));
    auto v = pit_cube_brute(c, n, d);
    std::uint64_t q = 2 * n * d;
    std::uint64_t total = to_u64(pow_int(from_u64(q), n));
    std::optional<Point> first;
    for (std::uint64_t i = 0; i < total && !first; ++i) {
      Point p = cube_point(i, n, q);
      if (oracle::naive_eval_u64(c, p) != 0) first = p;
    }
    ASSERT_EQ(v.witness, first);
    PitOptions serial;
    serial.backend = Backend::Serial;
    ASSERT_EQ(pit_cube_brute(c, n, d, serial).witness, v.witness);
  }
}

TEST(Random, Examples) {
  EXPECT_EQ(pit_random(zero_circuit(), 2, 1, 17, 5).kind, VerdictKind::ProbablyZero);
  EXPECT_EQ(pit_random(zero_circuit(), 2, 1, 17, 5).trials, 17u);
  auto one = pit_random(parse_circuit("g0 = const 1\noutput g0"), 1, 1, 1, 5);
  EXPECT_EQ(one.kind, VerdictKind::NonZero);
  auto cm = pit_random(commutator(), 2, 2, 40, 7);
  EXPECT_EQ(cm.kind, VerdictKind::ProbablyZero);
  EXPECT_EQ(cm.trials, 40u);
}

TEST(Random, DeterministicUnderSeed) {
  Rng rng(15);
  for (int t = 0; t < 30; ++t) {
    Circuit c = random_affine_product(rng, 2, 2);
    auto a = pit_random(c, 2, 2, 10, 99);
    PitOptions serial;
    serial.backend = Backend::Serial;
    auto b = pit_random(c, 2, 2, 10, 99, serial);
    ASSERT_EQ(a.kind, b.kind);
    ASSERT_EQ(a.witness, b.witness);
    ASSERT_EQ(a.trials, b.trials);
  }
}

TEST(WithHittingSet, Examples) {
  auto v = pit_with_hitting_set(prod(), HittingSet{2, 4, {{1, 1}}});
  EXPECT_EQ(v.kind, VerdictKind::NonZero);
  EXPECT_EQ(v.witness, (Point{1, 1}));
  EXPECT_EQ(v.provenance, Provenance::HittingSet);
  EXPECT_TRUE(pit_with_hitting_set(zero_circuit(), HittingSet{2, 4, {{1, 3}, {2, 2}}}).is_zero());
  EXPECT_TRUE(pit_with_hitting_set(prod(), HittingSet{2, 4, {{0, 0}}}).is_zero());
}

TEST(Equiv, Examples) {
  CircuitBuilder f;
  auto x = f.var(1);
  auto s = f.add(x, f.constant(1));
  Circuit sq = f.build(f.mul(s, s));
  CircuitBuilder g;
  auto y = g.var(1);
  Circuit expanded = g.build(g.add(g.add(g.mul(y, y), g.mul(g.constant(2), y)), g.constant(1)));
  EXPECT_TRUE(equiv_test(sq, expanded, EquivParams{}).is_zero());
  EXPECT_TRUE(equiv_test(sq, sq, EquivParams{}).is_zero());
  Circuit x1 = parse_circuit("g0 = var x1\noutput g0");
  Circuit x2 = parse_circuit("g0 = var x1\ng1 = var x2\noutput g1");
  EXPECT_EQ(equiv_test(x1, x2, EquivParams{}).kind, VerdictKind::NonZero);
  EquivParams rnd;
  rnd.method = PitMethod::Random;
  rnd.seed = 3;
  EXPECT_EQ(equiv_test(x1, x2, rnd).kind, VerdictKind::NonZero);
  EXPECT_TRUE(equiv_test(sq, expanded, rnd).is_zero());
}

TEST(Equiv, DifferenceCircuitValue) {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    Circuit f = random_circuit_max_degree(rng, 2, 2);
    Circuit g = random_circuit_max_degree(rng, 2, 2);
    Circuit diff = difference_circuit(f, g);
    std::vector<Int> p{Int(static_cast<long>(rng.below(9))) - 4, Int(static_cast<long>(rng.below(9))) - 4};
    auto pf = p, pg = p;
    pf.resize(f.n_vars());
    pg.resize(g.n_vars());
    auto pd = p;
    pd.resize(diff.n_vars());
    ASSERT_EQ(oracle::naive_eval(diff, pd), oracle::naive_eval(f, pf) - oracle::naive_eval(g, pg));
  }
}

// A non-vanishing cube verdict is always re-checkable; a zero verdict on the
// 2nd cube means the sparse expansion is empty.
TEST(Cube, CompleteAtSideTwoND) {
  Rng rng(18);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = 1 + rng.below(2);
    Circuit c = random_circuit_max_degree(rng, n, 2);
    std::size_t d = static_cast<std::size_t>(to_u64(analyze_degrees(c).max_var_individual()));
    auto v = pit_cube_brute(c, n, d);
    bool zero = oracle::expand(c, std::max(n, c.n_vars())).empty();
    ASSERT_EQ(v.is_zero(), zero) << serialize_circuit(c);
    if (v.witness) ASSERT_NE(oracle::naive_eval_u64(c, *v.witness), 0);
  }
}
