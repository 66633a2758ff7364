#include "szkit/generators.hpp"

#include <algorithm>

namespace szkit {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Int random_int(Rng& rng, std::size_t bits) {
  Int v = 0;
  for (std::size_t i = 0; i < bits; ++i) v = v * 2 + (rng.coin() ? 1 : 0);
  return rng.coin() ? Int(-v) : v;
}

}  // namespace

Circuit random_circuit(Rng& rng, const RandomCircuitSpec& spec) {
  CircuitBuilder b;
  for (std::size_t j = 1; j <= spec.n_vars; ++j) b.var(j);
  for (std::size_t i = 0; i < spec.consts; ++i) b.constant(uniform(rng, spec.const_lo, spec.const_hi));
  if (b.size() == 0) b.constant(uniform(rng, spec.const_lo, spec.const_hi));
  for (std::size_t i = 0; i < spec.ops; ++i) {
    std::size_t x = rng.below(b.size());
    std::size_t y = rng.below(b.size());
    if (rng.below(100) < spec.mul_percent) b.mul(x, y);
    else b.add(x, y);
  }
  return b.build();
}

Circuit random_circuit_max_degree(Rng& rng, std::size_t n, std::size_t d, std::size_t max_ops) {
  for (;;) {
    RandomCircuitSpec spec;
    spec.n_vars = n;
    spec.ops = 1 + rng.below(max_ops);
    spec.consts = rng.below(3);
    spec.mul_percent = 40;
    Circuit c = random_circuit(rng, spec);
    auto deg = analyze_degrees(c).max_var_individual();
    if (deg >= 1 && deg <= d) return c;
  }
}

Circuit random_affine_product(Rng& rng, std::size_t n, std::size_t d, std::int64_t coeff_range) {
  CircuitBuilder b;
  std::vector<std::size_t> z(n + 1);
  for (std::size_t j = 1; j <= n; ++j) z[j] = b.var(j);
  // Individual degree is the number of factors mentioning the variable.
  std::size_t factors = 1 + rng.below(d);
  std::optional<std::size_t> product;
  for (std::size_t f = 0; f < factors; ++f) {
    std::size_t form = b.constant(uniform(rng, -coeff_range * 2, coeff_range));
    bool any = false;
    for (std::size_t j = 1; j <= n; ++j) {
      if (!rng.coin() && !(j == n && !any)) continue;
      any = true;
      std::int64_t c = uniform(rng, -coeff_range, coeff_range);
      if (c == 0) c = 1;
      std::size_t term = c == 1 ? z[j] : b.mul(b.constant(c), z[j]);
      form = b.add(form, term);
    }
    product = product ? b.mul(*product, form) : form;
  }
  return b.build(*product);
}

Circuit random_formula(Rng& rng, std::size_t n_vars, std::size_t leaves) {
  CircuitBuilder b;
  for (std::size_t j = 1; j <= n_vars; ++j) b.var(j);
  // Leaves are fresh gates so the result is a tree over them; the leading
  // variable declarations are shared only through fresh copies.
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < std::max<std::size_t>(leaves, 1); ++i) {
    if (n_vars > 0 && rng.coin()) pool.push_back(b.var(1 + rng.below(n_vars)));
    else pool.push_back(b.constant(uniform(rng, -3, 3)));
  }
  while (pool.size() > 1) {
    std::size_t i = rng.below(pool.size());
    std::size_t x = pool[i];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    std::size_t j = rng.below(pool.size());
    std::size_t y = pool[j];
    pool[j] = rng.coin() ? b.mul(x, y) : b.add(x, y);
  }
  return b.build(pool.front());
}

UniPoly random_unipoly(Rng& rng, std::size_t d, std::size_t coeff_bits) {
  std::vector<Int> c(d + 1);
  for (auto& v : c) v = random_int(rng, coeff_bits);
  return UniPoly(std::move(c));
}

UniPoly planted_unipoly(Rng& rng, const std::vector<std::int64_t>& roots, std::size_t extra, std::size_t coeff_bits) {
  std::vector<Int> c = random_unipoly(rng, extra, coeff_bits).coeffs();
  for (auto r : roots) {
    // multiply by (x - r)
    std::vector<Int> next(c.size() + 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

AvoidInstance random_instance(Rng& rng, std::uint64_t a, std::uint64_t b) {
  AvoidInstance inst;
  inst.a = a;
  inst.b = b;
  inst.table.resize(a);
  for (auto& v : inst.table) v = 1 + rng.below(b);
  return inst;
}

}  // namespace szkit
