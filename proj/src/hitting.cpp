#include "szkit/hitting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace szkit {

std::size_t HittingSet::distinct_count() const { return std::set<Point>(points.begin(), points.end()).size(); }

void check_hitting_set(const HittingSet& h) {
  if (h.q == 0) throw InputError("hitting set needs q >= 1");
  for (std::size_t i = 0; i < h.points.size(); ++i) {
    if (h.points[i].size() != h.n) {
      throw DimensionError("point " + std::to_string(i + 1) + " has " + std::to_string(h.points[i].size()) +
                           " coordinates, expected " + std::to_string(h.n));
    }
    for (auto v : h.points[i]) {
      if (v >= h.q) throw InputError("point " + std::to_string(i + 1) + " has a coordinate outside S_q");
    }
  }
}

std::string format_hitting_set(const HittingSet& h) {
  std::ostringstream os;
  os << "# hitting-set n=" << h.n << " q=" << h.q << " r=" << h.r() << '\n';
  for (const auto& p : h.points) {
    for (std::size_t j = 0; j < p.size(); ++j) os << (j ? "," : "") << p[j];
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto at = s.find(sep, pos);
    out.push_back(s.substr(pos, at == std::string_view::npos ? at : at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

HittingSet parse_hitting_set(std::string_view text, std::optional<std::uint64_t> q) {
  HittingSet h;
  std::optional<std::size_t> n_hdr;
  std::optional<std::uint64_t> q_hdr;
  std::optional<std::size_t> r_hdr;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream is{std::string(line.substr(1))};
      std::string word;
      is >> word;
      if (word != "hitting-set") continue;
      while (is >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, 1, "malformed hitting-set header");
        auto key = word.substr(0, eq);
        auto value = to_u64(parse_int(word.substr(eq + 1)));
        if (key == "n") n_hdr = value;
        else if (key == "q") q_hdr = value;
        else if (key == "r") r_hdr = value;
        else throw ParseError(line_no, 1, "unknown header field '" + key + "'");
      }
      continue;
    }
    Point p;
    for (auto item : split(line, ',')) {
      try {
        p.push_back(to_u64(parse_int(trim(item))));
      } catch (const InputError& e) {
        throw ParseError(line_no, 1, e.what());
      }
    }
    h.points.push_back(std::move(p));
  }
  h.n = n_hdr.value_or(h.points.empty() ? 0 : h.points.front().size());
  if (q && q_hdr && *q != *q_hdr) throw InputError("q given twice with different values");
  if (q) {
    h.q = *q;
  } else if (q_hdr) {
    h.q = *q_hdr;
  } else {
    std::uint64_t top = 0;
    for (const auto& p : h.points) {
      for (auto v : p) top = std::max(top, v);
    }
    h.q = top + 1;
  }
  if (r_hdr && *r_hdr != h.r()) throw InputError("header announces r=" + std::to_string(*r_hdr) + " points");
  check_hitting_set(h);
  return h;
}

HittingSet sample_hitting_set(std::size_t n, std::uint64_t q, std::size_t r, Rng& rng) {
  HittingSet h{n, q, {}};
  h.points.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Point p(n);
    for (auto& v : p) v = rng.below(q);
    h.points.push_back(std::move(p));
  }
  return h;
}

bool in_ckt(const Circuit& c, std::size_t n, std::size_t d, std::size_t s) {
  if (c.n_vars() > n || !c.fully_plugged()) return false;
  if (analyze_degrees(c).max_individual > d) return false;
  return representation_size(c) <= s;
}

DefinableClass::DefinableClass(std::string name, SliceParams slice, Decoder decoder, std::string blob,
                               MemberSampler sampler)
    : name_(std::move(name)),
      slice_(slice),
      decoder_(std::move(decoder)),
      blob_(std::move(blob)),
      sampler_(std::move(sampler)) {}

Circuit DefinableClass::member(const Bits& x) const {
  if (x.size() != slice_.m) throw DimensionError("description must have m bits");
  try {
    Circuit c = decoder_(slice_, x, blob_);
    if (in_ckt(c, slice_.n, slice_.d, slice_.s)) return c;
  } catch (const InputError&) {
  }
  return zero_circuit();
}

Bits DefinableClass::sample_description(Rng& rng) const {
  if (sampler_) return sampler_(rng);
  Bits x(slice_.m);
  for (auto& b : x) b = rng.coin() ? 1 : 0;
  return x;
}

// ---------------------------------------------------------------------------

WitnessSearch try_find_small_witness(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t q,
                                     const std::optional<Point>& hint, WitnessOptions opts) {
  Circuit p = plug_parameters(c);
  if (p.n_params() != 0) throw InputError("every parameter must be plugged");
  if (p.n_vars() > n) throw DimensionError("circuit has more variables than the dimension");
  auto rep = analyze_degrees(p);
  if (rep.max_var_individual() > d) {
    throw DegreeBoundError("maximum individual degree " + to_string(rep.max_var_individual()) + " exceeds d=" +
                           std::to_string(d));
  }
  if (static_cast<long double>(q) < 2.0L * d * n) throw InputError("small witnesses need q >= 2dn");
  Evaluator ev(p, rep.total);

  WitnessSearch out;
  if (hint && hint->size() == n &&
      std::all_of(hint->begin(), hint->end(), [q](std::uint64_t v) { return v < q; })) {
    ++out.trials;
    if (!ev.vanishes_at(*hint)) {
      out.witness = *hint;
      return out;
    }
  }
  Rng rng(opts.seed);
  for (std::uint64_t t = 0; t < opts.budget; ++t) {
    Point w(n);
    for (auto& v : w) v = rng.below(q);
    ++out.trials;
    if (!ev.vanishes_at(w)) {
      out.witness = std::move(w);
      return out;
    }
  }
  if (auto total = cube_size(n, q, opts.exhaustion_cap)) {
    out.exhaustive = true;
    auto idx = first_index(*total, [&](std::uint64_t i) { return !ev.vanishes_at(cube_point(i, n, q)); },
                           opts.backend);
    out.trials += idx ? *idx + 1 : *total;
    if (idx) out.witness = cube_point(*idx, n, q);
  }
  return out;
}

Point find_small_witness(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t q,
                         const std::optional<Point>& hint, WitnessOptions opts) {
  auto res = try_find_small_witness(c, n, d, q, hint, opts);
  if (!res.witness) {
    throw BudgetExhausted(res.exhaustive ? "no non-root in S_q^n: the circuit vanishes on the whole cube"
                                         : "no non-root found within the sampling budget",
                          res.trials);
  }
  return *res.witness;
}

std::vector<Point> g_map(const DefinableClass& cls, const Bits& x, const Point& a, const std::vector<RootCode>& codes,
                         std::uint64_t q) {
  const auto& sl = cls.slice();
  if (a.size() != sl.n) throw DimensionError("a must have n coordinates");
  for (auto v : a) {
    if (v >= q) throw InputError("a must lie in S_q^n");
  }
  for (const auto& code : codes) check_code(code, sl.n, sl.d, q);
  std::vector<Int> ai(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) ai[j] = from_u64(a[j]);
  SZContext ctx(cls.member(x), sl.n, sl.d, q, ai);
  std::vector<Point> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(ctx.nonroot_ok() ? decode_code(ctx, code) : Point(sl.n, 0));
  return out;
}

// ---------------------------------------------------------------------------

SliceTable::SliceTable(const DefinableClass& cls, std::uint64_t q, VerifyOptions opts)
    : slice_(cls.slice()), opts_(opts) {
  const auto& sl = slice_;
  witness_q_ = std::max<std::uint64_t>(q, 2 * static_cast<std::uint64_t>(sl.d) * sl.n);
  std::vector<Bits> descriptions;
  if (sl.m < 64 && (std::uint64_t{1} << sl.m) <= opts.class_cap) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << sl.m); ++x) descriptions.push_back(bits_from_uint(x, sl.m));
  } else {
    spot_checked_ = true;
    Rng rng(opts.seed, 0x5107);
    for (std::uint64_t i = 0; i < opts.spot_checks; ++i) descriptions.push_back(cls.sample_description(rng));
  }
  members_ = map_indices<Member>(
      descriptions.size(),
      [&](std::uint64_t i) {
        Member mem;
        mem.x = descriptions[i];
        Circuit c = cls.member(mem.x);
        auto rep = analyze_degrees(c);
        WitnessOptions wo{opts.witness_budget, opts.seed * 0x9E3779B97F4A7C15ULL + i, opts.exhaustion_cap,
                          Backend::Serial};
        auto found = try_find_small_witness(c, sl.n, sl.d, witness_q_, std::nullopt, wo);
        mem.witness = found.witness;
        mem.settled = found.witness.has_value() || found.exhaustive;
        mem.eval.emplace(std::move(c), rep.total);
        return mem;
      },
      opts.backend);
  for (const auto& mem : members_) {
    if (!mem.settled) ++undecided_;
  }
}

HitVerdict SliceTable::verify(const HittingSet& h) const {
  check_hitting_set(h);
  if (h.n != slice_.n) throw DimensionError("hitting set dimension differs from the slice dimension");
  HitVerdict v;
  v.spot_checked = spot_checked_;
  v.members_checked = members_.size();
  v.undecided = undecided_;
  for (const auto& mem : members_) v.nonvanishing += mem.witness ? 1 : 0;
  auto miss = first_index(
      members_.size(),
      [&](std::uint64_t i) {
        const auto& mem = members_[i];
        if (!mem.witness) return false;
        for (const auto& p : h.points) {
          if (!mem.eval->vanishes_at(p)) return false;
        }
        return true;
      },
      opts_.backend);
  if (miss) {
    v.hits = false;
    v.x = members_[*miss].x;
    v.nonroot = members_[*miss].witness;
  }
  return v;
}

HitVerdict verify_hitting_set(const DefinableClass& cls, const HittingSet& h, VerifyOptions opts) {
  return SliceTable(cls, h.q, opts).verify(h);
}

bool largeness_holds(std::size_t m, std::size_t n, std::size_t d, std::uint64_t q, std::size_t r) {
  Int qq = from_u64(q);
  Int lhs = Int(2) * pow_int(Int(2), m) * pow_int(Int(static_cast<unsigned long>(n)), r) *
            pow_int(Int(static_cast<unsigned long>(d)), r) * pow_int(qq, (n - 1) * r + n);
  return lhs <= pow_int(qq, n * r);
}

void check_search_preconditions(const SliceParams& slice, std::uint64_t q, std::size_t r) {
  if (static_cast<long double>(q) < 2.0L * slice.d * slice.n) {
    throw InputError("precondition q >= 2dn fails: q=" + std::to_string(q) + ", 2dn=" +
                     std::to_string(2 * slice.d * slice.n));
  }
  std::size_t bound = slice.m + slice.n * length_of(q);
  if (r <= bound) {
    throw InputError("precondition r > m + n|q| fails: r=" + std::to_string(r) + ", m+n|q|=" + std::to_string(bound));
  }
}

SearchResult search_hitting_set(const DefinableClass& cls, std::uint64_t q, std::size_t r, std::uint64_t seed,
                                std::uint64_t budget, VerifyOptions opts) {
  check_search_preconditions(cls.slice(), q, r);
  SliceTable table(cls, q, opts);
  Rng root(seed);
  SearchResult out;
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng = root.split(attempt);
    HittingSet h = sample_hitting_set(cls.slice().n, q, r, rng);
    ++out.attempts;
    auto verdict = table.verify(h);
    if (verdict.hits) {
      out.set = std::move(h);
      out.verdict = verdict;
      return out;
    }
  }
  throw BudgetExhausted("no verified hitting set found", out.attempts);
}

bool nonrange_is_hitting(const DefinableClass& cls, const HittingSet& h, std::uint64_t cap) {
  check_hitting_set(h);
  const auto& sl = cls.slice();
  if (h.n != sl.n) throw DimensionError("hitting set dimension differs from the slice dimension");
  const std::uint64_t q = h.q;
  Int domain = pow_int(Int(2), sl.m) * pow_int(from_u64(q), sl.n) * pow_int(code_space_size(sl.n, sl.d, q), h.r());
  if (domain > from_u64(cap)) {
    throw CapExceeded("domain of g has " + to_string(domain) + " elements, cap is " + std::to_string(cap));
  }
  auto cube = *cube_size(sl.n, q, cap);
  const std::uint64_t members = std::uint64_t{1} << sl.m;
  const bool h_is_zero = std::all_of(h.points.begin(), h.points.end(), [](const Point& p) {
    return std::all_of(p.begin(), p.end(), [](std::uint64_t v) { return v == 0; });
  });
  CodecLimits limits;
  limits.exhaustion_cap = cap;
  auto hit = first_index(members * cube, [&](std::uint64_t idx) {
    Circuit c = cls.member(idx / cube);
    Point a = cube_point(idx % cube, sl.n, q);
    std::vector<Int> ai(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) ai[j] = from_u64(a[j]);
    SZContext ctx(c, sl.n, sl.d, q, ai, limits);
    if (!ctx.nonroot_ok()) return h_is_zero;
    auto image = decode_image(ctx);
    std::set<Point> reachable(image.begin(), image.end());
    return std::all_of(h.points.begin(), h.points.end(), [&](const Point& p) { return reachable.count(p) > 0; });
  });
  return !hit.has_value();
}

}  // namespace szkit
