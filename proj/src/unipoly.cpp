#include "szkit/unipoly.hpp"

#include <algorithm>

namespace szkit {

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("a polynomial needs at least one coefficient");
}

bool UniPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

std::size_t UniPoly::bit_complexity() const {
  std::size_t s = 0;
  for (const auto& c : coeffs_) s = std::max(s, szkit::bit_complexity(c));
  return s;
}

Int coef(const UniPoly& p, std::size_t i) {
  if (i > p.degree_bound()) {
    throw InputError("coefficient index " + std::to_string(i) + " exceeds degree bound " +
                     std::to_string(p.degree_bound()));
  }
  return p.coeffs()[i];
}

Int eval_unipoly(const UniPoly& p, const Int& u, EvalLimits limits) {
  Int acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * u + c[i];
    if (bitlen(acc) > limits.bitlen_guard) {
      throw BitLengthExceeded("Horner accumulator exceeds " + std::to_string(limits.bitlen_guard) + " bits");
    }
  }
  return acc;
}

std::vector<std::vector<Int>> extract_gate_coeffs(const Circuit& c, std::size_t d) {
  if (c.n_vars() > 1) throw DimensionError("coefficient extraction needs a univariate circuit");
  if (!c.fully_plugged()) throw InputError("coefficient extraction needs every parameter plugged");
  auto rep = analyze_degrees(c);
  if (c.n_vars() == 1 && rep.var_degrees[0] > d) {
    throw DegreeBoundError("degree " + to_string(rep.var_degrees[0]) + " on x1 exceeds bound " + std::to_string(d));
  }
  std::vector<std::vector<Int>> a(c.size());
  for (std::size_t u : c.output_cone()) {
    const Gate& g = c.gate(u);
    auto& out = a[u];
    out.assign(d + 1, Int(0));
    switch (g.kind) {
      case GateKind::Var:
        if (d >= 1) out[1] = 1;
        break;
      case GateKind::Param: out[0] = c.plugged().at(g.lhs); break;
      case GateKind::Const: out[0] = g.value; break;
      case GateKind::Add:
        for (std::size_t k = 0; k <= d; ++k) out[k] = a[g.lhs][k] + a[g.rhs][k];
        break;
      case GateKind::Mul: {
        const auto& v = a[g.lhs];
        const auto& w = a[g.rhs];
        for (std::size_t k = 0; k <= d; ++k) {
          Int acc = 0;
          for (std::size_t t = 0; t <= k; ++t) {
            if (v[t] != 0 && w[k - t] != 0) acc += v[t] * w[k - t];
          }
          out[k] = std::move(acc);
        }
        break;
      }
    }
  }
  return a;
}

UniPoly extract_unipoly(const Circuit& c, std::size_t d) {
  auto a = extract_gate_coeffs(c, d);
  return UniPoly(std::move(a[c.output()]));
}

std::vector<std::uint64_t> enumerate_roots(const UniPoly& p, std::uint64_t q, RootLimits limits) {
  if (q == 0) throw InputError("q must be positive");
  if (q > limits.q_cap) {
    throw CapExceeded("q=" + std::to_string(q) + " exceeds the cap " + std::to_string(limits.q_cap));
  }
  const std::size_t d = p.degree_bound();
  std::vector<std::uint64_t> out;
  out.reserve(d);
  for (std::uint64_t u = 0; u < q && out.size() < d; ++u) {
    if (eval_unipoly(p, from_u64(u)) == 0) out.push_back(u);
  }
  out.resize(d, q);
  return out;
}

UniPoly deflate(const UniPoly& a, const Int& v) {
  const std::size_t k = a.degree_bound();
  if (k == 0) throw InputError("cannot deflate a polynomial of degree bound 0");
  if (eval_unipoly(a, v) != 0) throw InputError(to_string(v) + " is not a root");
  const auto& c = a.coeffs();
  std::vector<Int> b(k);
  b[k - 1] = c[k];
  for (std::size_t i = k - 1; i-- > 0;) b[i] = c[i + 1] + b[i + 1] * v;
  return UniPoly(std::move(b));
}

UniPoly parse_unipoly(std::string_view text) {
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coeffs.push_back(parse_int(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return UniPoly(std::move(coeffs));
}

std::string format_unipoly(const UniPoly& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

}  // namespace szkit
