#include "szkit/selftest.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "szkit/avoid.hpp"
#include "szkit/classes.hpp"
#include "szkit/generators.hpp"
#include "szkit/pit.hpp"
#include "szkit/szcodec.hpp"

namespace szkit {

namespace {

using Check = std::function<std::string(Rng&, std::uint64_t&)>;

SelftestRow run(const std::string& name, Rng rng, const Check& check) {
  SelftestRow row;
  row.name = name;
  try {
    row.detail = check(rng, row.cases);
    row.passed = row.detail.empty();
  } catch (const std::exception& e) {
    row.detail = std::string("exception: ") + e.what();
  }
  return row;
}

std::string circuit_roundtrip(Rng& rng, std::uint64_t& cases) {
  for (int i = 0; i < 200; ++i, ++cases) {
    RandomCircuitSpec spec;
    spec.n_vars = rng.below(4);
    spec.ops = rng.below(10);
    spec.consts = 1 + rng.below(3);
    Circuit c = random_circuit(rng, spec);
    if (!(parse_circuit(serialize_circuit(c)) == c)) return "round trip differs on\n" + serialize_circuit(c);
  }
  return {};
}

std::string degree_bounds(Rng& rng, std::uint64_t& cases) {
  for (int i = 0; i < 200; ++i, ++cases) {
    Circuit c = random_formula(rng, 1 + rng.below(3), 1 + rng.below(8));
    auto rep = analyze_degrees(c);
    Int sum = 0;
    for (const auto& [k, v] : rep.individual) sum += v;
    if (rep.max_individual > rep.total || rep.total > sum) return "individual/total ordering fails";
    if (rep.total > Int(static_cast<unsigned long>(c.size()))) return "formula degree exceeds gate count";
  }
  return {};
}

std::string fta_half(Rng& rng, std::uint64_t& cases) {
  for (int i = 0; i < 300; ++i, ++cases) {
    std::size_t d = 1 + rng.below(6);
    std::vector<std::int64_t> roots;
    for (std::size_t k = rng.below(d + 1); k > 0; --k) roots.push_back(static_cast<std::int64_t>(rng.below(16)));
    UniPoly p = planted_unipoly(rng, roots, d - std::min(d, roots.size()), 4);
    if (p.is_zero()) continue;
    std::uint64_t q = 1 + rng.below(32);
    auto got = enumerate_roots(p, q);
    std::vector<std::uint64_t> want;
    for (std::uint64_t u = 0; u < q; ++u) {
      if (eval_unipoly(p, from_u64(u)) == 0) want.push_back(u);
    }
    if (want.size() > p.degree_bound()) return "more roots than the degree bound";
    want.resize(p.degree_bound(), q);
    if (got != want) return "root list differs from the scan for " + format_unipoly(p);
  }
  return {};
}

std::string deflation(Rng& rng, std::uint64_t& cases) {
  for (int i = 0; i < 200; ++i, ++cases) {
    std::int64_t v = static_cast<std::int64_t>(rng.below(21)) - 10;
    UniPoly a = planted_unipoly(rng, {v}, rng.below(5), 6);
    UniPoly b = deflate(a, Int(static_cast<long>(v)));
    for (int t = 0; t < 5; ++t) {
      Int u = Int(static_cast<long>(rng.below(41))) - 20;
      if (eval_unipoly(a, u) != (u - v) * eval_unipoly(b, u)) return "deflation identity fails";
    }
  }
  return {};
}

std::string codec_roundtrip(Rng& rng, std::uint64_t& cases) {
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng.below(2);
    std::size_t d = 1 + rng.below(2);
    std::uint64_t q = 2 + rng.below(4);
    Circuit c = rng.coin() ? random_affine_product(rng, n, d) : random_circuit_max_degree(rng, n, d);
    std::uint64_t qw = std::max<std::uint64_t>(q, 2 * n * d);
    auto found = try_find_small_witness(c, n, d, qw, std::nullopt, {32, rng.below(1000), 1 << 16});
    if (!found.witness) continue;
    std::vector<Int> a(found.witness->begin(), found.witness->end());
    for (std::size_t j = 0; j < n; ++j) a[j] = from_u64((*found.witness)[j]);
    SZContext ctx(c, n, d, q, a);
    auto total = *cube_size(n, q, 1 << 20);
    std::uint64_t roots = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Point b = cube_point(idx, n, q);
      if (!ctx.evaluator().vanishes_at(b)) continue;
      ++roots;
      ++cases;
      if (decode_code(ctx, encode_root(ctx, b)) != b) return "decode(encode(b)) != b";
    }
    if (Int(static_cast<unsigned long>(roots)) > code_space_size(n, d, q)) return "root count exceeds d n q^(n-1)";
  }
  return {};
}

std::string pack_roundtrip(Rng&, std::uint64_t& cases) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (std::uint64_t q = 1; q <= 4; ++q) {
        Int size = code_space_size(n, d, q);
        for (Int idx = 1; idx <= size; ++idx, ++cases) {
          if (pack_code(unpack_code(idx, n, d, q), n, d, q) != idx) return "pack/unpack mismatch";
        }
      }
    }
  }
  return {};
}

std::string pit_agreement(Rng& rng, std::uint64_t& cases) {
  for (int i = 0; i < 60; ++i, ++cases) {
    std::size_t n = 1 + rng.below(2);
    std::size_t d = 1 + rng.below(2);
    Circuit c = random_circuit_max_degree(rng, n, d);
    auto cube = pit_cube_brute(c, n, d);
    auto rnd = pit_random(c, n, d, 40, rng.below(1 << 30));
    if (cube.is_zero() && !rnd.is_zero()) return "random test contradicts the cube";
    if (rnd.witness && Evaluator(c, analyze_degrees(c).total)(*rnd.witness) == 0) return "witness does not re-verify";
  }
  return {};
}

std::string normalization(Rng& rng, std::uint64_t& cases) {
  ExhaustiveOracle oracle;
  for (std::uint64_t a = 1; a <= 6; ++a) {
    for (int rep = 0; rep < 6; ++rep, ++cases) {
      AvoidInstance inst = random_instance(rng, a, 2 * a + rng.below(8));
      auto norm = normalize(inst);
      std::set<std::uint64_t> range(inst.table.begin(), inst.table.end());
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << (norm.m + 1)); ++y) {
        Bits yb = bits_from_uint(y, norm.m + 1);
        if (norm.g.in_range(yb)) continue;
        auto v = backmap(norm, yb, oracle).value;
        if (v < 1 || v > inst.b || range.count(v)) return "backmap lands in range(f)";
      }
    }
  }
  return {};
}

std::string amplification(Rng& rng, std::uint64_t& cases) {
  ExhaustiveOracle oracle;
  for (std::size_t m = 1; m <= 3; ++m) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<Bits> table;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) table.push_back(bits_from_uint(rng.below(1u << (m + 1)), m + 1));
      BoolFunc g(m, m + 1, table);
      for (std::size_t t = 1; t <= 3; ++t) {
        BoolFunc h = amplify(g, t);
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << (m + t)); ++y) {
          Bits yb = bits_from_uint(y, m + t);
          if (h.in_range(yb)) continue;
          ++cases;
          auto inv = invert_amplified(g, t, yb, oracle);
          if (!inv.output) return "inversion failed on a non-range point";
          if (g.in_range(*inv.output)) return "inversion output lies in range(g)";
        }
      }
    }
  }
  return {};
}

std::string triples(Rng&, std::uint64_t& cases) {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t w = 1; w <= 4; ++w) {
        for (std::size_t idx = 1; idx <= r * n * w; ++idx, ++cases) {
          auto t = triple_decode(idx, r, n, w);
          if (triple_encode(t.i, t.j, t.k, r, n, w) != idx) return "triple encoding is not a bijection";
        }
      }
    }
  }
  return {};
}

std::string hitting(Rng& rng, std::uint64_t& cases) {
  SliceParams sl{2, 2, 4096, 4};
  auto cls = grid_class(sl);
  SliceTable table(cls, 8);
  std::uint64_t hits = 0;
  for (int i = 0; i < 40; ++i, ++cases) {
    Rng draw = rng.split(static_cast<std::uint64_t>(i));
    hits += table.verify(sample_hitting_set(2, 8, 13, draw)).hits ? 1 : 0;
  }
  if (hits * 10 < cases * 4) return "hitting-set density below 0.4";
  if (!largeness_holds(4, 2, 2, 8, 13)) return "largeness inequality fails";
  return {};
}

}  // namespace

std::vector<SelftestRow> run_selftest(std::uint64_t seed) {
  Rng root(seed);
  std::vector<std::pair<std::string, Check>> checks = {
      {"circuit.roundtrip", circuit_roundtrip},
      {"circuit.degree_bounds", degree_bounds},
      {"unipoly.fta_half", fta_half},
      {"unipoly.deflate", deflation},
      {"szcodec.roundtrip_and_count", codec_roundtrip},
      {"szcodec.pack", pack_roundtrip},
      {"pit.agreement", pit_agreement},
      {"hitting.density", hitting},
      {"avoid.normalize", normalization},
      {"avoid.amplify_invert", amplification},
      {"avoid.triples", triples},
  };
  std::vector<SelftestRow> rows;
  for (std::size_t i = 0; i < checks.size(); ++i) rows.push_back(run(checks[i].first, root.split(i), checks[i].second));
  return rows;
}

}  // namespace szkit
