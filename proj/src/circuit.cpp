#include "szkit/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace szkit {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Var: return "var";
    case GateKind::Param: return "param";
    case GateKind::Const: return "const";
    case GateKind::Add: return "add";
    case GateKind::Mul: return "mul";
  }
  return "?";
}

Gate Gate::var(std::size_t name) { return Gate{GateKind::Var, name, 0, Int(0)}; }
Gate Gate::param(std::size_t name) { return Gate{GateKind::Param, name, 0, Int(0)}; }
Gate Gate::constant(const Int& v) { return Gate{GateKind::Const, 0, 0, v}; }
Gate Gate::add(std::size_t i, std::size_t j) { return Gate{GateKind::Add, i, j, Int(0)}; }
Gate Gate::mul(std::size_t i, std::size_t j) { return Gate{GateKind::Mul, i, j, Int(0)}; }

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case GateKind::Const: return a.value == b.value;
    case GateKind::Var:
    case GateKind::Param: return a.lhs == b.lhs;
    case GateKind::Add:
    case GateKind::Mul: return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  return false;
}

std::vector<Diagnostic> validate(const RawCircuit& raw) {
  std::vector<Diagnostic> out;
  if (raw.gates.empty()) {
    out.push_back({std::nullopt, "empty gate list"});
    return out;
  }
  std::set<std::size_t> vars;
  std::set<std::size_t> params;
  for (std::size_t i = 0; i < raw.gates.size(); ++i) {
    const Gate& g = raw.gates[i];
    switch (g.kind) {
      case GateKind::Var:
        if (g.lhs == 0) {
          out.push_back({i, "variable names start at x1"});
        } else if (g.lhs > raw.n_vars) {
          out.push_back({i, "variable x" + std::to_string(g.lhs) + " exceeds n_vars=" + std::to_string(raw.n_vars)});
        } else {
          vars.insert(g.lhs);
        }
        break;
      case GateKind::Param:
        if (g.lhs == 0) {
          out.push_back({i, "parameter names start at p1"});
        } else if (g.lhs > raw.n_params) {
          out.push_back(
              {i, "parameter p" + std::to_string(g.lhs) + " exceeds n_params=" + std::to_string(raw.n_params)});
        } else {
          params.insert(g.lhs);
        }
        break;
      case GateKind::Const: break;
      case GateKind::Add:
      case GateKind::Mul:
        if (g.lhs >= i || g.rhs >= i) out.push_back({i, "forward reference"});
        break;
    }
  }
  for (std::size_t j = 1; j <= raw.n_vars; ++j) {
    if (!vars.count(j)) out.push_back({std::nullopt, "gap in variable naming: x" + std::to_string(j) + " unused"});
  }
  for (std::size_t j = 1; j <= raw.n_params; ++j) {
    if (!params.count(j)) out.push_back({std::nullopt, "gap in parameter naming: p" + std::to_string(j) + " unused"});
  }
  if (raw.output >= raw.gates.size()) {
    out.push_back({raw.output, "output gate does not exist"});
  }
  for (const auto& [name, value] : raw.plugged) {
    if (name == 0 || name > raw.n_params) {
      out.push_back({std::nullopt, "plugged value for unknown parameter p" + std::to_string(name)});
    }
  }
  return out;
}

Circuit::Circuit(RawCircuit raw) : raw_(std::move(raw)) {
  auto diags = validate(raw_);
  if (!diags.empty()) throw ValidationError(std::move(diags));
}

namespace {

RawCircuit derive(std::vector<Gate> gates, std::optional<std::size_t> output, std::map<std::size_t, Int> plugged) {
  RawCircuit raw;
  for (const auto& g : gates) {
    if (g.kind == GateKind::Var) raw.n_vars = std::max(raw.n_vars, g.lhs);
    if (g.kind == GateKind::Param) raw.n_params = std::max(raw.n_params, g.lhs);
  }
  raw.output = output.value_or(gates.empty() ? 0 : gates.size() - 1);
  raw.gates = std::move(gates);
  raw.plugged = std::move(plugged);
  return raw;
}

}  // namespace

Circuit::Circuit(std::vector<Gate> gates, std::optional<std::size_t> output, std::map<std::size_t, Int> plugged)
    : Circuit(derive(std::move(gates), output, std::move(plugged))) {}

std::vector<std::size_t> Circuit::output_cone() const {
  std::vector<char> live(size(), 0);
  live[output()] = 1;
  for (std::size_t i = size(); i-- > 0;) {
    if (!live[i]) continue;
    const Gate& g = raw_.gates[i];
    if (g.kind == GateKind::Add || g.kind == GateKind::Mul) {
      live[g.lhs] = 1;
      live[g.rhs] = 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (live[i]) out.push_back(i);
  }
  return out;
}

bool operator==(const Circuit& a, const Circuit& b) {
  return a.raw_.gates == b.raw_.gates && a.raw_.output == b.raw_.output && a.raw_.n_vars == b.raw_.n_vars &&
         a.raw_.n_params == b.raw_.n_params && a.raw_.plugged == b.raw_.plugged;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::size_t parse_index(std::size_t line, const Token& tok, char prefix, const char* what) {
  if (tok.text.size() < 2 || tok.text[0] != prefix || !all_digits(tok.text.substr(1))) {
    throw ParseError(line, tok.column,
                     std::string("expected ") + what + " of the form " + prefix + "<number>, got '" +
                         std::string(tok.text) + "'");
  }
  if (tok.text.size() > 2 && tok.text[1] == '0') {
    throw ParseError(line, tok.column, std::string("leading zero in ") + what + " '" + std::string(tok.text) + "'");
  }
  try {
    return std::stoull(std::string(tok.text.substr(1)));
  } catch (const std::exception&) {
    throw ParseError(line, tok.column, std::string(what) + " out of range");
  }
}

Int parse_decimal(std::size_t line, const Token& tok) {
  std::string_view t = tok.text;
  std::string_view digits = (!t.empty() && t[0] == '-') ? t.substr(1) : t;
  if (!all_digits(digits)) {
    throw ParseError(line, tok.column, "expected a decimal integer, got '" + std::string(t) + "'");
  }
  return Int(std::string(t), 10);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::vector<Gate> gates;
  std::map<std::size_t, Int> plugged;
  std::optional<std::size_t> output;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      auto comment = tokenize(line.substr(hash + 1));
      if (!comment.empty() && comment[0].text == "plug") {
        for (auto& t : comment) t.column += hash + 1;
        if (comment.size() != 4 || comment[2].text != "=") {
          throw ParseError(line_no, hash + 1, "expected '# plug p<j> = <integer>'");
        }
        std::size_t name = parse_index(line_no, comment[1], 'p', "parameter");
        if (plugged.count(name)) throw ParseError(line_no, comment[1].column, "parameter plugged twice");
        plugged[name] = parse_decimal(line_no, comment[3]);
      }
      line = line.substr(0, hash);
    }
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (output) throw ParseError(line_no, toks[0].column, "statement after output line");

    if (toks[0].text == "output") {
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'output g<k>'");
      std::size_t k = parse_index(line_no, toks[1], 'g', "gate id");
      if (k >= gates.size()) throw ParseError(line_no, toks[1].column, "output refers to undefined gate");
      output = k;
      continue;
    }

    std::size_t id = parse_index(line_no, toks[0], 'g', "gate id");
    if (id < gates.size()) throw ParseError(line_no, toks[0].column, "duplicate gate id g" + std::to_string(id));
    if (id > gates.size()) {
      throw ParseError(line_no, toks[0].column,
                       "gate ids must be consecutive; expected g" + std::to_string(gates.size()));
    }
    if (toks.size() < 2 || toks[1].text != "=") {
      throw ParseError(line_no, toks.size() < 2 ? line.size() + 1 : toks[1].column, "expected '='");
    }
    if (toks.size() < 3) throw ParseError(line_no, line.size() + 1, "missing gate kind");
    std::string_view kind = toks[2].text;
    auto expect_args = [&](std::size_t n) {
      if (toks.size() != 3 + n) {
        std::size_t col = toks.size() > 3 + n ? toks[3 + n].column : line.size() + 1;
        throw ParseError(line_no, col, std::string(kind) + " takes " + std::to_string(n) + " operand(s)");
      }
    };
    auto operand = [&](std::size_t which) {
      std::size_t j = parse_index(line_no, toks[3 + which], 'g', "gate reference");
      if (j >= id) {
        throw ParseError(line_no, toks[3 + which].column,
                         j == id ? "self reference g" + std::to_string(j) : "forward reference g" + std::to_string(j));
      }
      return j;
    };
    if (kind == "var") {
      expect_args(1);
      std::size_t name = parse_index(line_no, toks[3], 'x', "variable");
      if (name == 0) throw ParseError(line_no, toks[3].column, "variable names start at x1");
      gates.push_back(Gate::var(name));
    } else if (kind == "param") {
      expect_args(1);
      std::size_t name = parse_index(line_no, toks[3], 'p', "parameter");
      if (name == 0) throw ParseError(line_no, toks[3].column, "parameter names start at p1");
      gates.push_back(Gate::param(name));
    } else if (kind == "const") {
      expect_args(1);
      gates.push_back(Gate::constant(parse_decimal(line_no, toks[3])));
    } else if (kind == "add" || kind == "mul") {
      expect_args(2);
      std::size_t a = operand(0);
      std::size_t b = operand(1);
      gates.push_back(kind == "add" ? Gate::add(a, b) : Gate::mul(a, b));
    } else {
      throw ParseError(line_no, toks[2].column, "unknown gate kind '" + std::string(kind) + "'");
    }
  }
  if (!output) throw ParseError(line_no, 1, "missing output line");
  return Circuit(std::move(gates), output, std::move(plugged));
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    os << 'g' << i << " = " << to_string(g.kind) << ' ';
    switch (g.kind) {
      case GateKind::Var: os << 'x' << g.lhs; break;
      case GateKind::Param: os << 'p' << g.lhs; break;
      case GateKind::Const: os << to_string(g.value); break;
      case GateKind::Add:
      case GateKind::Mul: os << 'g' << g.lhs << " g" << g.rhs; break;
    }
    os << '\n';
  }
  for (const auto& [name, value] : c.plugged()) os << "# plug p" << name << " = " << to_string(value) << '\n';
  os << "output g" << c.output() << '\n';
  return os.str();
}

std::size_t representation_size(const Circuit& c) { return 8 * serialize_circuit(c).size(); }

// ---------------------------------------------------------------------------
// Degrees

Int DegreeReport::max_var_individual() const {
  Int best = 0;
  for (const auto& d : var_degrees) best = std::max(best, d);
  return best;
}

namespace {

// Individual degree of the output on the inputs selected by is_input.
template <class Pred>
Int degree_on(const Circuit& c, const std::vector<std::size_t>& cone, Pred is_input) {
  std::vector<Int> deg(c.size());
  for (std::size_t i : cone) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::Var:
      case GateKind::Param:
      case GateKind::Const: deg[i] = is_input(i, g) ? 1 : 0; break;
      case GateKind::Add: deg[i] = std::max(deg[g.lhs], deg[g.rhs]); break;
      case GateKind::Mul: deg[i] = deg[g.lhs] + deg[g.rhs]; break;
    }
  }
  return deg[c.output()];
}

}  // namespace

DegreeReport analyze_degrees(const Circuit& c) {
  DegreeReport rep;
  auto cone = c.output_cone();
  rep.total = degree_on(c, cone, [](std::size_t, const Gate&) { return true; });
  rep.var_degrees.assign(c.n_vars(), Int(0));
  for (std::size_t j = 1; j <= c.n_vars(); ++j) {
    rep.var_degrees[j - 1] =
        degree_on(c, cone, [j](std::size_t, const Gate& g) { return g.kind == GateKind::Var && g.lhs == j; });
    rep.individual["x" + std::to_string(j)] = rep.var_degrees[j - 1];
  }
  for (std::size_t j = 1; j <= c.n_params(); ++j) {
    rep.individual["p" + std::to_string(j)] =
        degree_on(c, cone, [j](std::size_t, const Gate& g) { return g.kind == GateKind::Param && g.lhs == j; });
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.gate(k).kind != GateKind::Const) continue;
    rep.individual["g" + std::to_string(k)] = degree_on(c, cone, [k](std::size_t i, const Gate&) { return i == k; });
  }
  rep.max_individual = 0;
  for (const auto& [name, d] : rep.individual) rep.max_individual = std::max(rep.max_individual, d);
  return rep;
}

Circuit plug_parameters(const Circuit& c) {
  std::map<std::size_t, std::size_t> rename;
  for (std::size_t j = 1; j <= c.n_params(); ++j) {
    if (!c.plugged().count(j)) rename[j] = rename.size() + 1;
  }
  std::vector<Gate> gates = c.gates();
  for (auto& g : gates) {
    if (g.kind != GateKind::Param) continue;
    auto it = c.plugged().find(g.lhs);
    g = it != c.plugged().end() ? Gate::constant(it->second) : Gate::param(rename.at(g.lhs));
  }
  RawCircuit raw{std::move(gates), c.output(), c.n_vars(), rename.size(), {}};
  return Circuit(std::move(raw));
}

Circuit lift_constants(const Circuit& c) {
  std::vector<Gate> gates = c.gates();
  auto plugged = c.plugged();
  std::size_t next = c.n_params();
  for (auto& g : gates) {
    if (g.kind != GateKind::Const) continue;
    plugged[++next] = g.value;
    g = Gate::param(next);
  }
  RawCircuit raw{std::move(gates), c.output(), c.n_vars(), next, std::move(plugged)};
  return Circuit(std::move(raw));
}

// ---------------------------------------------------------------------------

std::size_t CircuitBuilder::push(Gate g) {
  gates_.push_back(std::move(g));
  return gates_.size() - 1;
}

std::size_t CircuitBuilder::var(std::size_t name) { return push(Gate::var(name)); }
std::size_t CircuitBuilder::param(std::size_t name) { return push(Gate::param(name)); }
std::size_t CircuitBuilder::constant(const Int& v) { return push(Gate::constant(v)); }
std::size_t CircuitBuilder::add(std::size_t i, std::size_t j) { return push(Gate::add(i, j)); }
std::size_t CircuitBuilder::mul(std::size_t i, std::size_t j) { return push(Gate::mul(i, j)); }
std::size_t CircuitBuilder::neg(std::size_t i) { return mul(constant(-1), i); }
std::size_t CircuitBuilder::sub(std::size_t i, std::size_t j) { return add(i, neg(j)); }
void CircuitBuilder::plug(std::size_t param_name, const Int& v) { plugged_[param_name] = v; }

Circuit CircuitBuilder::build(std::optional<std::size_t> output) const { return Circuit(gates_, output, plugged_); }

Circuit zero_circuit() { return Circuit({Gate::constant(0)}); }

}  // namespace szkit
