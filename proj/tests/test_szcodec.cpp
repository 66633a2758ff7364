#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "szkit/generators.hpp"
#include "szkit/hitting.hpp"
#include "szkit/szcodec.hpp"

using namespace szkit;

namespace {

Circuit prod() { return parse_circuit("g0 = var x1\ng1 = var x2\ng2 = mul g0 g1\noutput g2"); }

SZContext prod_ctx(std::vector<Int> a, std::uint64_t q = 2) { return SZContext(prod(), 2, 1, q, std::move(a)); }

RootCode code(std::size_t k, std::size_t i, Point rest) { return RootCode{k, i, std::move(rest)}; }

}  // namespace

TEST(Encode, Examples) {
  auto ctx = prod_ctx({1, 1});
  EXPECT_TRUE(ctx.nonroot_ok());
  EXPECT_EQ(encode_root(ctx, Point{0, 1}), code(1, 1, {1}));
  EXPECT_EQ(encode_root(ctx, Point{1, 0}), code(2, 1, {1}));
}

TEST(Encode, RootAsNonrootGivesDefault) {
  auto ctx = prod_ctx({0, 0});
  EXPECT_FALSE(ctx.nonroot_ok());
  for (Point b : {Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}}) EXPECT_EQ(encode_root(ctx, b), code(1, 1, {0}));
}

TEST(Encode, NonRootGivesDefault) {
  EXPECT_EQ(encode_root(prod_ctx({1, 1}), Point{1, 1}), default_code(2));
}

TEST(Encode, RangeChecked) {
  auto ctx = prod_ctx({1, 1});
  EXPECT_THROW(encode_root(ctx, Point{0, 2}), InputError);
  EXPECT_THROW(encode_root(ctx, Point{0}), InputError);
}

TEST(Decode, Examples) {
  auto ctx = prod_ctx({1, 1});
  EXPECT_EQ(decode_code(ctx, code(1, 1, {1})), (Point{0, 1}));
  EXPECT_EQ(decode_code(ctx, code(2, 1, {1})), (Point{1, 0}));
  EXPECT_EQ(decode_code(ctx, code(1, 1, {0})), (Point{0, 0}));
}

TEST(Decode, TotalOnValidCodes) {
  auto ctx = SZContext(prod(), 2, 2, 3, {1, 1});
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 1; i <= 2; ++i)
      for (std::uint64_t c = 0; c < 3; ++c) EXPECT_NO_THROW(decode_code(ctx, code(k, i, {c})));
  EXPECT_THROW(decode_code(ctx, code(3, 1, {0})), InputError);
  EXPECT_THROW(decode_code(ctx, code(1, 3, {0})), InputError);
}

TEST(Context, Preconditions) {
  EXPECT_THROW(SZContext(prod(), 2, 1, 2, {1}), InputError);
  Circuit sq = parse_circuit("g0 = var x1\ng1 = mul g0 g0\noutput g1");
  EXPECT_THROW(SZContext(sq, 1, 1, 4, {1}), InputError);
  EXPECT_NO_THROW(SZContext(sq, 1, 2, 4, {1}));
}

TEST(Context, LargeNonroot) {
  auto big = pow_int(10, 40);
  auto ctx = prod_ctx({big, big}, 3);
  EXPECT_TRUE(ctx.nonroot_ok());
  EXPECT_EQ(decode_code(ctx, encode_root(ctx, Point{0, 2})), (Point{0, 2}));
}

TEST(CodeText, RoundTrip) {
  EXPECT_EQ(format_code(code(1, 3, {3, 2})), "1:3:3,2");
  EXPECT_EQ(parse_code("1:3:3,2"), code(1, 3, {3, 2}));
  EXPECT_EQ(parse_code("2:1:"), code(2, 1, {}));
  EXPECT_THROW(parse_code("1:3"), InputError);
}

TEST(Pack, Extremes) {
  EXPECT_EQ(pack_code(code(1, 1, {0, 0}), 3, 2, 4), 1);
  EXPECT_EQ(pack_code(code(3, 2, {3, 3}), 3, 2, 4), 3 * 2 * 16);
  EXPECT_EQ(code_space_size(3, 2, 4), 96);
  EXPECT_THROW(unpack_code(0, 3, 2, 4), InputError);
  EXPECT_THROW(unpack_code(97, 3, 2, 4), InputError);
}

TEST(Pack, ExhaustiveBijection) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::uint64_t q = 1; q <= 4; ++q) {
        std::uint64_t total = to_u64(code_space_size(n, d, q));
        std::set<std::string> seen;
        for (std::uint64_t idx = 1; idx <= total; ++idx) {
          RootCode c = unpack_code(idx, n, d, q);
          ASSERT_NO_THROW(check_code(c, n, d, q));
          ASSERT_EQ(pack_code(c, n, d, q), idx);
          seen.insert(format_code(c));
        }
        ASSERT_EQ(seen.size(), total);
      }
}

TEST(Pack, TwelveCodes) {
  std::vector<RootCode> all;
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 1; i <= 2; ++i)
      for (std::uint64_t c = 0; c < 3; ++c) all.push_back(code(k, i, {c}));
  ASSERT_EQ(all.size(), 12u);
  for (const auto& c : all) EXPECT_EQ(unpack_code(pack_code(c, 2, 2, 3), 2, 2, 3), c);
}

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots_brute(prod(), 2, 2), 3u);
  EXPECT_EQ(count_roots_brute(zero_circuit(), 2, 3), 9u);
  CircuitBuilder b;
  auto c = b.sub(b.var(1), b.var(2));
  EXPECT_EQ(count_roots_brute(b.build(c), 2, 3), 3u);
  EXPECT_THROW(count_roots_brute(prod(), 2, 4096, 1000), CapExceeded);
}

TEST(CountRoots, SerialMatchesParallelAndOracle) {
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng.below(3);
    Circuit c = random_affine_product(rng, n, 1 + rng.below(3));
    std::uint64_t q = 2 + rng.below(6);
    auto par = count_roots_brute(c, n, q, 1 << 22, Backend::Parallel);
    ASSERT_EQ(par, count_roots_brute(c, n, q, 1 << 22, Backend::Serial));
    ASSERT_EQ(par, oracle::brute_zero_set(c, n, q).size());
  }
}

TEST(Restrict, MatchesEvaluation) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    Circuit c = random_circuit_max_degree(rng, 3, 3);
    std::vector<Int> vals{Int(static_cast<long>(rng.below(7))) - 3, Int(static_cast<long>(rng.below(7))) - 3,
                          Int(static_cast<long>(rng.below(7))) - 3};
    std::size_t k = 1 + rng.below(3);
    Circuit r = restrict_circuit(c, k, vals);
    ASSERT_LE(r.n_vars(), 1u);
    for (long u = -3; u <= 3; ++u) {
      auto pt = vals;
      pt[k - 1] = u;
      pt.resize(c.n_vars());
      ASSERT_EQ(oracle::naive_eval(r, {Int(u)}), oracle::naive_eval(c, pt));
    }
  }
}

// Round trip and surjectivity on random affine products, which have many roots.
TEST(Codec, RoundTripAndImage) {
  Rng rng(10);
  int contexts = 0;
  while (contexts < 40) {
    std::size_t n = 1 + rng.below(3);
    std::size_t d = 1 + rng.below(3);
    std::uint64_t q = 2 + rng.below(5);
    Circuit c = random_affine_product(rng, n, d);
    std::size_t dv = static_cast<std::size_t>(to_u64(analyze_degrees(c).max_var_individual()));
    if (dv == 0) continue;
    auto w = try_find_small_witness(c, n, dv, std::max<std::uint64_t>(q, 2 * dv * n), std::nullopt);
    if (!w.witness) continue;
    std::vector<Int> a;
    for (auto v : *w.witness) a.push_back(Int(static_cast<unsigned long>(v)));
    SZContext ctx(c, n, d < dv ? dv : d, q, a);
    ASSERT_TRUE(ctx.nonroot_ok());
    auto roots = oracle::brute_zero_set(c, n, q);
    auto image = decode_image(ctx);
    std::set<Point> image_set(image.begin(), image.end());
    for (const auto& b : roots) {
      RootCode code = encode_root(ctx, b);
      ASSERT_EQ(decode_code(ctx, code), b) << serialize_circuit(c) << format_code(code);
      ASSERT_TRUE(image_set.count(b));
    }
    ASSERT_LE(roots.size(), ctx.d() * n * to_u64(pow_int(from_u64(q), n - 1)));
    ++contexts;
  }
}
