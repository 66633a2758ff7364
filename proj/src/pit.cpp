#include "szkit/pit.hpp"

#include <algorithm>

#include "szkit/rng.hpp"

namespace szkit {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NonZero: return "NonZero";
    case VerdictKind::ZeroOnCube: return "ZeroOnCube";
    case VerdictKind::ProbablyZero: return "ProbablyZero";
  }
  return "?";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Cube: return "cube";
    case Provenance::Random: return "random";
    case Provenance::HittingSet: return "hitting_set";
  }
  return "?";
}

std::uint64_t pit_side_length(std::size_t n, std::size_t d) { return n == 0 ? 1 : 2 * static_cast<std::uint64_t>(n) * d; }

namespace {

struct Prepared {
  Circuit c;
  Evaluator ev;
  std::uint64_t q;
};

Prepared prepare(const Circuit& c, std::size_t n, std::size_t d, const PitOptions& opts) {
  Circuit p = plug_parameters(c);
  if (p.n_params() != 0) throw InputError("every parameter must be plugged");
  if (p.n_vars() > n) {
    throw DimensionError("circuit has " + std::to_string(p.n_vars()) + " variables, dimension is " + std::to_string(n));
  }
  auto rep = analyze_degrees(p);
  if (rep.max_var_individual() > d) {
    throw DegreeBoundError("maximum individual degree " + to_string(rep.max_var_individual()) + " exceeds d=" +
                           std::to_string(d));
  }
  if (n > 0 && d == 0) throw DegreeBoundError("degree bound d must be positive");
  std::uint64_t q = pit_side_length(n, d);
  if (opts.q != 0) {
    if (opts.q < q) throw InputError("q=" + std::to_string(opts.q) + " is below 2nd=" + std::to_string(q));
    q = opts.q;
  }
  Evaluator ev(p, rep.total);
  return Prepared{std::move(p), std::move(ev), q};
}

}  // namespace

PitVerdict pit_cube_brute(const Circuit& c, std::size_t n, std::size_t d, PitOptions opts) {
  auto prep = prepare(c, n, d, opts);
  auto total = cube_size(n, prep.q, opts.exhaustion_cap);
  if (!total) throw CapExceeded("(2nd)^n exceeds the exhaustion cap " + std::to_string(opts.exhaustion_cap));
  PitVerdict v;
  v.provenance = Provenance::Cube;
  v.q = prep.q;
  auto idx = first_index(*total, [&](std::uint64_t i) { return !prep.ev.vanishes_at(cube_point(i, n, prep.q)); },
                         opts.backend);
  v.trials = idx ? *idx + 1 : *total;
  if (idx) {
    v.kind = VerdictKind::NonZero;
    v.witness = cube_point(*idx, n, prep.q);
  } else {
    v.kind = VerdictKind::ZeroOnCube;
  }
  return v;
}

PitVerdict pit_random(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t trials, std::uint64_t seed,
                      PitOptions opts) {
  if (trials == 0) throw InputError("trials must be at least 1");
  auto prep = prepare(c, n, d, opts);
  Rng rng(seed);
  std::vector<Point> samples(trials, Point(n));
  for (auto& p : samples) {
    for (auto& v : p) v = rng.below(prep.q);
  }
  PitVerdict v;
  v.provenance = Provenance::Random;
  v.q = prep.q;
  auto idx = first_index(trials, [&](std::uint64_t i) { return !prep.ev.vanishes_at(samples[i]); }, opts.backend);
  if (idx) {
    v.kind = VerdictKind::NonZero;
    v.witness = samples[*idx];
    v.trials = *idx + 1;
  } else {
    v.kind = VerdictKind::ProbablyZero;
    v.trials = trials;
  }
  return v;
}

PitVerdict pit_with_hitting_set(const Circuit& c, const HittingSet& h, PitOptions opts) {
  check_hitting_set(h);
  Circuit p = plug_parameters(c);
  if (p.n_params() != 0) throw InputError("every parameter must be plugged");
  if (p.n_vars() > h.n) {
    throw DimensionError("circuit has " + std::to_string(p.n_vars()) + " variables, hitting set dimension is " +
                         std::to_string(h.n));
  }
  Evaluator ev(p, analyze_degrees(p).total);
  PitVerdict v;
  v.provenance = Provenance::HittingSet;
  v.q = h.q;
  auto idx = first_index(h.r(), [&](std::uint64_t i) { return !ev.vanishes_at(h.points[i]); }, opts.backend);
  if (idx) {
    v.kind = VerdictKind::NonZero;
    v.witness = h.points[*idx];
    v.trials = *idx + 1;
  } else {
    v.kind = VerdictKind::ZeroOnCube;
    v.trials = h.r();
  }
  return v;
}

Circuit difference_circuit(const Circuit& f, const Circuit& g) {
  Circuit pf = plug_parameters(f);
  Circuit pg = plug_parameters(g);
  if (pf.n_params() != 0 || pg.n_params() != 0) throw InputError("every parameter must be plugged");
  std::vector<Gate> gates = pf.gates();
  const std::size_t off = gates.size();
  for (Gate gate : pg.gates()) {
    if (gate.kind == GateKind::Add || gate.kind == GateKind::Mul) {
      gate.lhs += off;
      gate.rhs += off;
    }
    gates.push_back(gate);
  }
  gates.push_back(Gate::constant(-1));
  gates.push_back(Gate::mul(gates.size() - 1, off + pg.output()));
  gates.push_back(Gate::add(pf.output(), gates.size() - 1));
  return Circuit(std::move(gates));
}

PitVerdict equiv_test(const Circuit& f, const Circuit& g, const EquivParams& params) {
  Circuit diff = difference_circuit(f, g);
  const std::size_t n = diff.n_vars();
  Int df = analyze_degrees(plug_parameters(f)).max_var_individual();
  Int dg = analyze_degrees(plug_parameters(g)).max_var_individual();
  std::size_t d = static_cast<std::size_t>(to_u64(std::max({df, dg, Int(1)})));
  switch (params.method) {
    case PitMethod::Cube: return pit_cube_brute(diff, n, d, params.options);
    case PitMethod::Random: return pit_random(diff, n, d, params.trials, params.seed, params.options);
    case PitMethod::HittingSet:
      if (!params.hitting_set) throw InputError("hitting-set method needs a hitting set");
      return pit_with_hitting_set(diff, *params.hitting_set, params.options);
  }
  throw InputError("unknown PIT method");
}

}  // namespace szkit
