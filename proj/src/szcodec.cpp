#include "szkit/szcodec.hpp"

#include <algorithm>
#include <map>

namespace szkit {

RootCode default_code(std::size_t n) { return RootCode{1, 1, Point(n == 0 ? 0 : n - 1, 0)}; }

void check_code(const RootCode& code, std::size_t n, std::size_t d, std::uint64_t q) {
  if (code.k < 1 || code.k > n) throw InputError("code index k out of range [1," + std::to_string(n) + "]");
  if (code.i < 1 || code.i > d) throw InputError("code rank i out of range [1," + std::to_string(d) + "]");
  if (code.rest.size() + 1 != n) throw DimensionError("code tail must have n-1 entries");
  for (auto c : code.rest) {
    if (c >= q) throw InputError("code tail entry " + std::to_string(c) + " outside S_q");
  }
}

std::string format_code(const RootCode& code) {
  std::string out = std::to_string(code.k) + ":" + std::to_string(code.i) + ":";
  for (std::size_t j = 0; j < code.rest.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(code.rest[j]);
  }
  return out;
}

RootCode parse_code(std::string_view text) {
  auto c1 = text.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw InputError("code must look like k:i:c1,c2,...");
  RootCode code;
  code.k = to_u64(parse_int(text.substr(0, c1)));
  code.i = to_u64(parse_int(text.substr(c1 + 1, c2 - c1 - 1)));
  std::string_view tail = text.substr(c2 + 1);
  std::size_t pos = 0;
  while (!tail.empty()) {
    auto comma = tail.find(',', pos);
    code.rest.push_back(to_u64(parse_int(tail.substr(pos, comma == std::string_view::npos ? comma : comma - pos))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return code;
}

namespace {

Int codec_degree_bound(const Circuit& c) { return analyze_degrees(c).total; }

}  // namespace

SZContext::SZContext(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t q, std::vector<Int> nonroot,
                     CodecLimits limits)
    : n_(n),
      d_(d),
      q_(q),
      nonroot_(std::move(nonroot)),
      limits_(limits),
      eval_(plug_parameters(c), codec_degree_bound(c), limits.eval) {
  const Circuit& p = eval_.circuit();
  if (p.n_params() != 0) throw InputError("every parameter must be plugged");
  if (n == 0) throw DimensionError("dimension n must be positive");
  if (p.n_vars() > n) {
    throw DimensionError("circuit has " + std::to_string(p.n_vars()) + " variables, dimension is " + std::to_string(n));
  }
  if (d == 0) throw DegreeBoundError("degree bound d must be positive");
  if (q == 0) throw InputError("q must be positive");
  if (q > limits.q_cap) throw CapExceeded("q=" + std::to_string(q) + " exceeds the cap " + std::to_string(limits.q_cap));
  auto deg = analyze_degrees(p).max_var_individual();
  if (deg > d) {
    throw DegreeBoundError("maximum individual degree " + to_string(deg) + " exceeds d=" + std::to_string(d));
  }
  if (nonroot_.size() != n) throw DimensionError("non-root must have n coordinates");
  nonroot_ok_ = eval_(std::span<const Int>(nonroot_)) != 0;
}

Circuit restrict_circuit(const Circuit& c, std::size_t k, std::span<const Int> values) {
  std::vector<Gate> gates = c.gates();
  for (auto& g : gates) {
    if (g.kind != GateKind::Var) continue;
    if (g.lhs == k) {
      g = Gate::var(1);
    } else {
      if (g.lhs > values.size()) throw DimensionError("restriction is missing a value for x" + std::to_string(g.lhs));
      g = Gate::constant(values[g.lhs - 1]);
    }
  }
  return Circuit(std::move(gates), c.output(), c.plugged());
}

UniPoly SZContext::slice_poly(std::size_t k, std::span<const std::uint64_t> prefix) const {
  std::vector<Int> values(n_);
  for (std::size_t j = 0; j < n_; ++j) values[j] = j + 1 < k ? from_u64(prefix[j]) : nonroot_[j];
  return extract_unipoly(restrict_circuit(circuit(), k, values), d_);
}

RootCode encode_root(const SZContext& ctx, std::span<const std::uint64_t> b) {
  const std::size_t n = ctx.n();
  if (b.size() != n) throw DimensionError("point must have n coordinates");
  for (auto v : b) {
    if (v >= ctx.q()) throw InputError("point coordinate " + std::to_string(v) + " outside S_q");
  }
  if (!ctx.nonroot_ok()) return default_code(n);

  std::vector<Int> hybrid(ctx.nonroot());
  std::size_t k = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    hybrid[j - 1] = from_u64(b[j - 1]);
    if (ctx.eval(hybrid) == 0) {
      k = j;
      break;
    }
  }
  if (k == 0) return default_code(n);

  auto roots = enumerate_roots(ctx.slice_poly(k, b), ctx.q(), RootLimits{ctx.limits().q_cap});
  auto it = std::find(roots.begin(), roots.end(), b[k - 1]);
  if (it == roots.end()) return default_code(n);

  RootCode code;
  code.k = k;
  code.i = static_cast<std::size_t>(it - roots.begin()) + 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j + 1 != k) code.rest.push_back(b[j]);
  }
  return code;
}

Point decode_code(const SZContext& ctx, const RootCode& code) {
  const std::size_t n = ctx.n();
  check_code(code, n, ctx.d(), ctx.q());
  if (!ctx.nonroot_ok()) return Point(n, 0);
  auto roots = enumerate_roots(ctx.slice_poly(code.k, code.rest), ctx.q(), RootLimits{ctx.limits().q_cap});
  std::uint64_t r = roots[code.i - 1];
  if (r == ctx.q()) return Point(n, 0);
  Point out(code.rest.begin(), code.rest.begin() + static_cast<std::ptrdiff_t>(code.k - 1));
  out.push_back(r);
  out.insert(out.end(), code.rest.begin() + static_cast<std::ptrdiff_t>(code.k - 1), code.rest.end());
  return out;
}

std::vector<Point> decode_image(const SZContext& ctx) {
  const std::size_t n = ctx.n();
  const std::size_t d = ctx.d();
  const std::uint64_t q = ctx.q();
  auto tails = cube_size(n - 1, q, ctx.limits().exhaustion_cap);
  if (!tails) throw CapExceeded("code space exceeds the exhaustion cap");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n * d * *tails));
  for (std::size_t k = 1; k <= n; ++k) {
    // Only c_1..c_{k-1} influence the slice polynomial.
    std::map<Point, std::vector<std::uint64_t>> roots_by_prefix;
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::uint64_t t = 0; t < *tails; ++t) {
        if (!ctx.nonroot_ok()) {
          out.emplace_back(n, 0);
          continue;
        }
        Point rest = cube_point(t, n - 1, q);
        std::reverse(rest.begin(), rest.end());  // rest_1 is the least significant digit
        Point prefix(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k - 1));
        auto it = roots_by_prefix.find(prefix);
        if (it == roots_by_prefix.end()) {
          auto roots = enumerate_roots(ctx.slice_poly(k, prefix), q, RootLimits{ctx.limits().q_cap});
          it = roots_by_prefix.emplace(prefix, std::move(roots)).first;
        }
        std::uint64_t r = it->second[i - 1];
        if (r == q) {
          out.emplace_back(n, 0);
          continue;
        }
        Point p(prefix);
        p.push_back(r);
        p.insert(p.end(), rest.begin() + static_cast<std::ptrdiff_t>(k - 1), rest.end());
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

Int code_space_size(std::size_t n, std::size_t d, std::uint64_t q) {
  return Int(static_cast<unsigned long>(n)) * Int(static_cast<unsigned long>(d)) * pow_int(from_u64(q), n - 1);
}

Int pack_code(const RootCode& code, std::size_t n, std::size_t d, std::uint64_t q) {
  check_code(code, n, d, q);
  Int qq = from_u64(q);
  Int tail = 0;
  for (std::size_t j = code.rest.size(); j-- > 0;) tail = tail * qq + from_u64(code.rest[j]);
  Int head = Int(static_cast<unsigned long>((code.k - 1) * d + (code.i - 1)));
  return head * pow_int(qq, n - 1) + tail + 1;
}

RootCode unpack_code(const Int& idx, std::size_t n, std::size_t d, std::uint64_t q) {
  if (n == 0 || d == 0 || q == 0) throw InputError("n, d and q must be positive");
  if (idx < 1 || idx > code_space_size(n, d, q)) throw InputError("code index " + to_string(idx) + " out of range");
  Int qq = from_u64(q);
  Int v = idx - 1;
  RootCode code;
  code.rest.resize(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Int r = v % qq;
    code.rest[j] = to_u64(r);
    v /= qq;
  }
  std::uint64_t head = to_u64(v);
  code.k = static_cast<std::size_t>(head / d) + 1;
  code.i = static_cast<std::size_t>(head % d) + 1;
  return code;
}

std::uint64_t count_roots_brute(const Circuit& c, std::size_t n, std::uint64_t q, std::uint64_t cap, Backend backend) {
  Circuit p = plug_parameters(c);
  if (p.n_params() != 0) throw InputError("every parameter must be plugged");
  if (p.n_vars() > n) throw DimensionError("circuit has more variables than the dimension");
  auto total = cube_size(n, q, cap);
  if (!total) throw CapExceeded("q^n exceeds the exhaustion cap " + std::to_string(cap));
  Evaluator ev(p, analyze_degrees(p).total);
  return count_where(*total, [&](std::uint64_t idx) { return ev.vanishes_at(cube_point(idx, n, q)); }, backend);
}

}  // namespace szkit
