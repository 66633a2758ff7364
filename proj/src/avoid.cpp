#include "szkit/avoid.hpp"

#include <algorithm>
#include <memory>

namespace szkit {

// ---------------------------------------------------------------------------
// Oracle

std::optional<Bits> ExhaustiveOracle::preimage(const BoolFunc& g, const Bits& y) {
  ++queries_;
  auto x = g.preimage(y);
  if (!x) return std::nullopt;
  return bits_from_uint(*x, g.in_bits());
}

std::optional<std::uint64_t> ExhaustiveOracle::value_preimage(const AvoidInstance& inst, std::uint64_t v) {
  ++queries_;
  for (std::uint64_t x = 1; x <= inst.a; ++x) {
    if (inst(x) == v) return x;
  }
  return std::nullopt;
}

Walk ExhaustiveOracle::longest_walk(const BoolFunc& g, const Bits& y, std::size_t max_len) {
  ++queries_;
  const std::size_t m = g.in_bits();
  if (g.out_bits() != m + 1) throw DimensionError("walks need g : {0,1}^m -> {0,1}^(m+1)");
  if (y.size() < m + 1 + max_len) throw DimensionError("y is too short for the requested walk length");
  if (m + 1 > 62) throw CapExceeded("codewords too wide for the exhaustive oracle");

  std::vector<std::vector<std::uint64_t>> pre(std::size_t{1} << (m + 1));
  for (std::uint64_t w = 0; w < g.domain_size(); ++w) pre[bits_to_uint(g.at(w))].push_back(w);

  // y_{j+1} = w : a_{m+j+2}; position m+j+2 is index m+j+1.
  auto next = [&](std::uint64_t w, std::size_t j) { return w | (static_cast<std::uint64_t>(y[m + j + 1]) << m); };

  std::vector<std::vector<std::uint64_t>> layers{{bits_to_uint(substring(y, 1, m + 1))}};
  while (layers.size() - 1 < max_len) {
    const std::size_t j = layers.size() - 1;
    std::vector<std::uint64_t> nxt;
    for (auto v : layers.back()) {
      for (auto w : pre[v]) nxt.push_back(next(w, j));
    }
    if (nxt.empty()) break;
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    layers.push_back(std::move(nxt));
  }
  const std::size_t k = layers.size() - 1;

  // alive[j]: points of layer j from which a walk reaches layer k.
  std::vector<std::vector<std::uint64_t>> alive(k + 1);
  alive[k] = layers[k];
  for (std::size_t j = k; j-- > 0;) {
    for (auto v : layers[j]) {
      bool ok = std::any_of(pre[v].begin(), pre[v].end(), [&](std::uint64_t w) {
        return std::binary_search(alive[j + 1].begin(), alive[j + 1].end(), next(w, j));
      });
      if (ok) alive[j].push_back(v);
    }
  }

  Walk walk;
  std::uint64_t cur = layers[0][0];
  walk.ys.push_back(bits_from_uint(cur, m + 1));
  for (std::size_t j = 0; j < k; ++j) {
    for (auto w : pre[cur]) {
      auto nv = next(w, j);
      if (std::binary_search(alive[j + 1].begin(), alive[j + 1].end(), nv)) {
        walk.ws.push_back(bits_from_uint(w, m));
        walk.ys.push_back(bits_from_uint(nv, m + 1));
        cur = nv;
        break;
      }
    }
  }
  return walk;
}

// ---------------------------------------------------------------------------
// Normalization

const char* to_string(NormalMode mode) { return mode == NormalMode::Direct ? "direct" : "squared"; }

std::size_t normal_width(std::uint64_t a) { return a == 0 ? 0 : length_of(a - 1); }

std::uint64_t num_a(const Bits& x, std::uint64_t a) { return bits_to_uint(x) % a + 1; }

namespace {

bool direct_applies(const AvoidInstance& inst) {
  std::size_t m = normal_width(inst.a);
  return (std::uint64_t{1} << m) + inst.a <= inst.b;
}

AvoidInstance square_instance(const AvoidInstance& inst) {
  if (inst.a > (std::uint64_t{1} << 16) || inst.b > (std::uint64_t{1} << 31)) {
    throw CapExceeded("instance too large to square");
  }
  AvoidInstance sq;
  sq.a = inst.a * inst.a;
  sq.b = inst.b * inst.b;
  sq.blob = inst.blob;
  sq.table.reserve(sq.a);
  for (std::uint64_t x1 = 1; x1 <= inst.a; ++x1) {
    for (std::uint64_t x2 = 1; x2 <= inst.a; ++x2) sq.table.push_back((inst(x1) - 1) * inst.b + inst(x2));
  }
  return sq;
}

}  // namespace

Normalized normalize(const AvoidInstance& inst) {
  check_instance(inst);
  Normalized out;
  out.source = inst;
  out.mode = direct_applies(inst) ? NormalMode::Direct : NormalMode::Squared;
  out.folded = out.mode == NormalMode::Direct ? inst : square_instance(inst);
  const AvoidInstance& f = out.folded;
  out.m = normal_width(f.a);
  const std::size_t m = out.m;
  if (m > BoolFunc::kMaxInBits) throw CapExceeded("normalized width exceeds the tabulation cap");
  const std::uint64_t full = std::uint64_t{1} << (m + 1);
  out.fold = std::min(f.b, full);
  const std::uint64_t fakes = full - out.fold;
  const std::uint64_t fold = out.fold;
  out.g = BoolFunc::tabulate(m, m + 1, [&](const Bits& x) {
    std::uint64_t v = bits_to_uint(x);
    std::uint64_t code;
    if (v < f.a) {
      code = (f(v + 1) - 1) % fold;
    } else if (v - f.a < fakes) {
      code = fold + (v - f.a);
    } else {
      code = (f(num_a(x, f.a)) - 1) % fold;
    }
    return bits_from_uint(code, m + 1);
  });
  return out;
}

BackmapResult backmap(const Normalized& norm, const Bits& y, Oracle& oracle) {
  if (y.size() != norm.m + 1) throw DimensionError("backmap expects m+1 bits");
  BackmapResult out;
  std::uint64_t code = bits_to_uint(y);
  std::uint64_t v = code < norm.fold ? code + 1 : norm.fold;
  if (norm.mode == NormalMode::Direct) {
    out.value = v;
    return out;
  }
  const std::uint64_t b = norm.source.b;
  std::uint64_t y1 = (v - 1) / b + 1;
  std::uint64_t y2 = (v - 1) % b + 1;
  out.oracle_queries = 1;
  out.value = oracle.value_preimage(norm.source, y1) ? y2 : y1;
  return out;
}

// ---------------------------------------------------------------------------
// Amplification

BoolFunc amplify(const BoolFunc& g, std::size_t t) {
  const std::size_t m = g.in_bits();
  if (g.out_bits() != m + 1) throw DimensionError("amplification needs g : {0,1}^m -> {0,1}^(m+1)");
  if (t == 0) throw InputError("amplification needs t >= 1");
  std::vector<Bits> table;
  table.reserve(g.domain_size());
  for (std::uint64_t x = 0; x < g.domain_size(); ++x) {
    Bits cur = g.at(x);
    for (std::size_t i = 1; i < t; ++i) {
      Bits head = g(substring(cur, 1, m));
      Bits tail = substring(cur, m + 1, cur.size());
      cur = concat(head, tail);
    }
    table.push_back(std::move(cur));
  }
  return BoolFunc(m, m + t, std::move(table));
}

Inversion invert_amplified(const BoolFunc& g, std::size_t t, const Bits& y, Oracle& oracle) {
  const std::size_t m = g.in_bits();
  if (g.out_bits() != m + 1) throw DimensionError("inversion needs g : {0,1}^m -> {0,1}^(m+1)");
  if (t == 0) throw InputError("inversion needs t >= 1");
  if (y.size() != m + t) throw DimensionError("y must have m+t bits");
  Inversion inv;
  inv.walk = oracle.longest_walk(g, y, t - 1);
  inv.oracle_queries = 1;
  const Bits& yk = inv.walk.ys.back();
  auto w = oracle.preimage(g, yk);
  inv.oracle_queries = 2;
  if (w) {
    inv.failure = "y_" + std::to_string(inv.walk.length()) + " has a preimage under g";
    return inv;
  }
  inv.output = yk;
  return inv;
}

// ---------------------------------------------------------------------------
// The class A_{e,x}

std::size_t AvoidClassParams::w() const { return length_of(q); }

std::vector<std::string> check_class_params(const AvoidClassParams& p) {
  std::vector<std::string> v;
  const std::size_t w = p.w();
  auto show = [](auto x) { return std::to_string(x); };
  if (p.n == 0 || p.r == 0 || p.q == 0) v.push_back("n, r and q must be positive");
  if (p.length < p.r * p.n * w) {
    v.push_back("t' >= r n |q| fails: " + show(p.length) + " < " + show(p.r * p.n * w));
  }
  if (p.d < 2 * p.r * w) v.push_back("d >= 2 r |q| fails: " + show(p.d) + " < " + show(2 * p.r * w));
  if (static_cast<long double>(p.q) < 2.0L * p.d * p.n) {
    v.push_back("q >= 2 d n fails: " + show(p.q) + " < " + show(2 * p.d * p.n));
  }
  if (p.r <= p.m + p.n * w) v.push_back("r > m + n |q| fails: " + show(p.r) + " <= " + show(p.m + p.n * w));
  if (p.length < p.m + 1) v.push_back("t' >= m + 1 fails: " + show(p.length) + " < " + show(p.m + 1));
  return v;
}

namespace {

std::size_t decimal_digits(std::size_t v) { return std::to_string(v).size(); }

// Bound on the serialized size of a circuit with g gates whose constants have
// at most two characters.
std::size_t serialization_bound(std::size_t g) { return 8 * (g + 1) * (3 * decimal_digits(g) + 12); }

}  // namespace

Schedule desk_schedule(std::size_t m) {
  Schedule s;
  s.name = "desk";
  auto& p = s.params;
  p.m = m;
  p.n = 2;
  std::size_t w = 1;
  for (;; ++w) {
    if (w >= 40) throw CapExceeded("no desk schedule below |q| = 40");
    std::size_t r = m + p.n * w + 1;
    if ((std::uint64_t{1} << w) - 1 >= 4 * r * p.n * w) break;
  }
  p.r = m + p.n * w + 1;
  p.q = (std::uint64_t{1} << w) - 1;
  p.d = 2 * p.r * w;
  p.length = p.r * p.n * w;
  p.s = 1;
  std::size_t gates = build_a_circuit(Bits(p.length, 0), p).size();
  p.s = serialization_bound(gates);
  s.violations = check_class_params(p);
  return s;
}

Schedule paper_schedule(std::size_t m) {
  Schedule s;
  s.name = "paper";
  auto& p = s.params;
  p.m = m;
  p.n = m;
  p.d = m * m;
  p.s = m * m * m;
  p.r = 4 * m * length_of(m);
  p.q = 2 * static_cast<std::uint64_t>(m) * m * m;
  p.length = m * m * m;
  s.violations = check_class_params(p);
  return s;
}

std::size_t triple_encode(std::size_t i, std::size_t j, std::size_t k, std::size_t r, std::size_t n, std::size_t w) {
  if (i < 1 || i > r || j < 1 || j > n || k < 1 || k > w) throw InputError("triple outside [r] x [n] x [w]");
  return ((i - 1) * n + (j - 1)) * w + (k - 1) + 1;
}

Triple triple_decode(std::size_t index, std::size_t r, std::size_t n, std::size_t w) {
  if (index < 1 || index > r * n * w) throw InputError("triple index out of range");
  std::size_t v = index - 1;
  Triple t;
  t.k = v % w + 1;
  v /= w;
  t.j = v % n + 1;
  t.i = v / n + 1;
  return t;
}

Circuit build_a_circuit(const Bits& hx, const AvoidClassParams& p) {
  const std::size_t w = p.w();
  if (hx.size() < p.r * p.n * w) throw DimensionError("h(x) is shorter than r n |q|");
  CircuitBuilder b;
  const auto c0 = b.constant(0);
  const auto c1 = b.constant(1);
  const auto cm1 = b.constant(-1);
  const auto c2 = b.constant(2);
  std::vector<std::size_t> z(p.n + 1);
  for (std::size_t j = 1; j <= p.n; ++j) z[j] = b.var(j);
  std::vector<std::size_t> pow2(w + 1, 0);  // pow2[k] = 2^(k-1) for k >= 2
  if (w >= 2) pow2[2] = c2;
  for (std::size_t k = 3; k <= w; ++k) pow2[k] = b.mul(pow2[k - 1], c2);

  std::optional<std::size_t> product;
  for (std::size_t i = 1; i <= p.r; ++i) {
    std::optional<std::size_t> factor;
    for (std::size_t j = 1; j <= p.n; ++j) {
      std::optional<std::size_t> inner;
      for (std::size_t k = 1; k <= w; ++k) {
        auto bit = hx[triple_encode(i, j, k, p.r, p.n, w) - 1] ? c1 : c0;
        auto term = k == 1 ? bit : b.mul(bit, pow2[k]);
        inner = inner ? b.add(*inner, term) : term;
      }
      auto diff = b.add(z[j], b.mul(cm1, *inner));
      auto sq = b.mul(diff, diff);
      factor = factor ? b.add(*factor, sq) : sq;
    }
    product = product ? b.mul(*product, *factor) : *factor;
  }
  return b.build(*product);
}

DefinableClass build_avoid_class(const BoolFunc& h, const AvoidClassParams& p) {
  auto violations = check_class_params(p);
  if (!violations.empty()) {
    std::string msg = "class parameters violate:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw InputError(msg);
  }
  if (h.in_bits() != p.m) throw DimensionError("h must take m input bits");
  if (h.out_bits() != p.length) throw DimensionError("h must produce t' output bits");
  auto table = std::make_shared<const BoolFunc>(h);
  auto decoder = [table, p](const SliceParams&, const Bits& x, const std::string&) {
    return build_a_circuit((*table)(x), p);
  };
  return DefinableClass("avoid:A", SliceParams{p.n, p.d, p.s, p.m}, decoder, h.digest());
}

Bits encode_hitting_set(const HittingSet& h, const AvoidClassParams& p) {
  const std::size_t w = p.w();
  if (h.n != p.n || h.r() != p.r) throw DimensionError("hitting set shape differs from the class parameters");
  Bits y(p.length, 0);
  for (std::size_t i = 1; i <= p.r; ++i) {
    for (std::size_t j = 1; j <= p.n; ++j) {
      std::uint64_t v = h.points[i - 1][j - 1];
      if (w < 64 && v >> w) throw InputError("coordinate does not fit in |q| bits");
      for (std::size_t k = 1; k <= w; ++k) y[triple_encode(i, j, k, p.r, p.n, w) - 1] = (v >> (k - 1)) & 1U;
    }
  }
  return y;
}

// ---------------------------------------------------------------------------

HsSolver default_hs_solver(std::uint64_t seed, std::uint64_t budget) {
  return [seed, budget](const DefinableClass& cls, std::uint64_t q, std::size_t r) {
    return search_hitting_set(cls, q, r, seed, budget).set;
  };
}

namespace {

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(std::string(stage) + ": " + e.what());
  } catch (const GuardError& e) {
    throw GuardError(std::string(stage) + ": " + e.what());
  }
}

}  // namespace

AvoidTrace avoid_via_hitting(const AvoidInstance& inst, const HsSolver& solver, Oracle& oracle, ScheduleKind kind) {
  AvoidTrace tr;
  tr.norm = staged("normalize", [&] { return normalize(inst); });
  tr.g_digest = tr.norm.g.digest();
  tr.schedule = kind == ScheduleKind::Desk ? desk_schedule(tr.norm.m) : paper_schedule(tr.norm.m);
  if (!tr.schedule.violations.empty()) {
    std::string msg = "schedule: " + tr.schedule.name + " parameters at m=" + std::to_string(tr.norm.m) + " violate:";
    for (const auto& v : tr.schedule.violations) msg += " [" + v + "]";
    throw InputError(msg);
  }
  const auto& p = tr.schedule.params;
  tr.t = p.length - tr.norm.m;
  BoolFunc h = staged("amplify", [&] { return amplify(tr.norm.g, tr.t); });
  tr.h_digest = h.digest();
  DefinableClass cls = staged("class", [&] { return build_avoid_class(h, p); });
  tr.class_size = std::uint64_t{1} << p.m;
  tr.hitting_set = staged("hitting-set", [&] { return solver(cls, p.q, p.r); });
  tr.y = staged("encode", [&] { return encode_hitting_set(tr.hitting_set, p); });
  if (h.in_range(tr.y)) throw GuardError("compression: the encoded hitting set lies in the range of h");
  tr.inversion = staged("invert", [&] { return invert_amplified(tr.norm.g, tr.t, tr.y, oracle); });
  if (!tr.inversion.output) throw GuardError("invert: " + tr.inversion.failure);
  if (tr.norm.g.in_range(*tr.inversion.output)) throw GuardError("invert: output lies in the range of g");
  tr.back = staged("backmap", [&] { return backmap(tr.norm, *tr.inversion.output, oracle); });
  tr.value = tr.back.value;
  for (std::uint64_t x = 1; x <= inst.a; ++x) {
    if (inst(x) == tr.value) throw GuardError("backmap: value " + std::to_string(tr.value) + " is f(" + std::to_string(x) + ")");
  }
  if (tr.value < 1 || tr.value > inst.b) throw GuardError("backmap: value outside [b]");
  return tr;
}

std::uint64_t solve_avoid_brute(const AvoidInstance& inst, std::uint64_t cap) {
  check_instance(inst);
  if (inst.a > cap) throw CapExceeded("a exceeds the exhaustion cap");
  std::vector<std::uint64_t> values(inst.table);
  std::sort(values.begin(), values.end());
  std::uint64_t y = 1;
  for (auto v : values) {
    if (v == y) ++y;
    else if (v > y) break;
  }
  return y;
}

}  // namespace szkit
