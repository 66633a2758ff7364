#include "szkit/boolfunc.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "szkit/bigint.hpp"
#include "szkit/errors.hpp"

namespace szkit {

BoolFunc::BoolFunc(std::size_t in_bits, std::size_t out_bits, std::vector<Bits> table)
    : in_bits_(in_bits), out_bits_(out_bits), table_(std::move(table)) {
  if (in_bits_ > kMaxInBits) throw CapExceeded("Boolean function has too many input bits to tabulate");
  if (table_.size() != domain_size()) throw DimensionError("truth table must have 2^in_bits rows");
  for (const auto& row : table_) {
    if (row.size() != out_bits_) throw DimensionError("truth table row has the wrong width");
  }
}

BoolFunc BoolFunc::tabulate(std::size_t in_bits, std::size_t out_bits, const std::function<Bits(const Bits&)>& f) {
  if (in_bits > kMaxInBits) throw CapExceeded("Boolean function has too many input bits to tabulate");
  std::vector<Bits> table;
  table.reserve(std::size_t{1} << in_bits);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << in_bits); ++x) table.push_back(f(bits_from_uint(x, in_bits)));
  return BoolFunc(in_bits, out_bits, std::move(table));
}

const Bits& BoolFunc::operator()(const Bits& x) const {
  if (x.size() != in_bits_) throw DimensionError("input has the wrong width");
  return table_[bits_to_uint(x)];
}

std::optional<std::uint64_t> BoolFunc::preimage(const Bits& y) const {
  if (y.size() != out_bits_) return std::nullopt;
  for (std::uint64_t x = 0; x < table_.size(); ++x) {
    if (table_[x] == y) return x;
  }
  return std::nullopt;
}

std::string BoolFunc::digest() const {
  // 64-bit FNV-1a over the row bits.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  feed(static_cast<std::uint8_t>(in_bits_));
  feed(static_cast<std::uint8_t>(out_bits_));
  for (const auto& row : table_) {
    for (auto bit : row) feed(bit);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void check_instance(const AvoidInstance& inst) {
  if (inst.a < 1) throw InputError("instance needs a >= 1");
  if (inst.b < 2 * inst.a) throw InputError("instance needs b >= 2a");
  if (inst.table.size() != inst.a) throw DimensionError("truth table must have a entries");
  for (std::uint64_t x = 1; x <= inst.a; ++x) {
    auto v = inst(x);
    if (v < 1 || v > inst.b) {
      throw InputError("f(" + std::to_string(x) + ")=" + std::to_string(v) + " lies outside [" +
                       std::to_string(inst.b) + "]");
    }
  }
}

namespace {

std::vector<std::string> words(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::uint64_t parse_u64_at(std::size_t line, const std::string& word) {
  try {
    return to_u64(parse_int(word));
  } catch (const InputError& e) {
    throw ParseError(line, 1, e.what());
  }
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    f(line_no, line);
  }
}

}  // namespace

AvoidInstance parse_tsv_instance(std::string_view text, std::optional<std::uint64_t> b) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto w = words(line);
    if (w.empty()) return;
    if (w.size() != 2) throw ParseError(line_no, 1, "expected 'x<TAB>f(x)'");
    rows.emplace_back(parse_u64_at(line_no, w[0]), parse_u64_at(line_no, w[1]));
  });
  AvoidInstance inst;
  inst.a = rows.size();
  inst.table.assign(inst.a, 0);
  std::vector<char> seen(inst.a + 1, 0);
  for (auto [x, v] : rows) {
    if (x < 1 || x > inst.a) throw InputError("argument " + std::to_string(x) + " outside [a]");
    if (seen[x]) throw InputError("argument " + std::to_string(x) + " listed twice");
    seen[x] = 1;
    inst.table[x - 1] = v;
  }
  inst.b = b.value_or(2 * inst.a);
  check_instance(inst);
  return inst;
}

std::string format_tsv_instance(const AvoidInstance& inst) {
  std::ostringstream os;
  for (std::uint64_t x = 1; x <= inst.a; ++x) os << x << '\t' << inst(x) << '\n';
  return os.str();
}

AvoidInstance parse_bc_instance(std::string_view text) {
  enum class Op { In, Const, And, Or, Xor, Not };
  struct BGate {
    Op op;
    std::size_t x = 0;
    std::size_t y = 0;
  };
  std::vector<BGate> gates;
  std::vector<std::size_t> outs;
  std::optional<std::uint64_t> domain;
  std::optional<std::uint64_t> codomain;
  std::size_t n_inputs = 0;
  bool have_out = false;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto w = words(line);
    if (w.empty()) return;
    auto gate_ref = [&](const std::string& word) {
      if (word.size() < 2 || word[0] != 'g') throw ParseError(line_no, 1, "expected a gate reference, got '" + word + "'");
      auto k = parse_u64_at(line_no, word.substr(1));
      if (k >= gates.size()) throw ParseError(line_no, 1, "reference to undefined gate " + word);
      return static_cast<std::size_t>(k);
    };
    if (w[0] == "out") {
      if (have_out) throw ParseError(line_no, 1, "duplicate out line");
      have_out = true;
      for (std::size_t i = 1; i < w.size(); ++i) outs.push_back(gate_ref(w[i]));
      return;
    }
    if (w[0] == "domain" || w[0] == "codomain") {
      if (w.size() != 2) throw ParseError(line_no, 1, "expected '" + w[0] + " <n>'");
      (w[0] == "domain" ? domain : codomain) = parse_u64_at(line_no, w[1]);
      return;
    }
    if (w[0] != "g" + std::to_string(gates.size())) {
      throw ParseError(line_no, 1, "expected gate id g" + std::to_string(gates.size()));
    }
    if (w.size() < 3 || w[1] != "=") throw ParseError(line_no, 1, "expected 'g<k> = <op> ...'");
    const std::string& op = w[2];
    auto arity = [&](std::size_t k) {
      if (w.size() != 3 + k) throw ParseError(line_no, 1, op + " takes " + std::to_string(k) + " argument(s)");
    };
    BGate g{Op::In};
    if (op == "in") {
      arity(1);
      g.x = parse_u64_at(line_no, w[3]);
      if (g.x == 0) throw ParseError(line_no, 1, "input bits are numbered from 1");
      n_inputs = std::max(n_inputs, g.x);
    } else if (op == "const") {
      arity(1);
      if (w[3] != "0" && w[3] != "1") throw ParseError(line_no, 1, "Boolean constants are 0 or 1");
      g.op = Op::Const;
      g.x = w[3] == "1";
    } else if (op == "not") {
      arity(1);
      g.op = Op::Not;
      g.x = gate_ref(w[3]);
    } else if (op == "and" || op == "or" || op == "xor") {
      arity(2);
      g.op = op == "and" ? Op::And : op == "or" ? Op::Or : Op::Xor;
      g.x = gate_ref(w[3]);
      g.y = gate_ref(w[4]);
    } else {
      throw ParseError(line_no, 1, "unknown Boolean gate '" + op + "'");
    }
    gates.push_back(g);
  });
  if (!have_out || outs.empty()) throw InputError("Boolean circuit needs an out line");
  if (n_inputs > BoolFunc::kMaxInBits || outs.size() > 63) throw CapExceeded("Boolean circuit too wide to tabulate");

  AvoidInstance inst;
  inst.a = domain.value_or(std::uint64_t{1} << n_inputs);
  if (inst.a > (std::uint64_t{1} << n_inputs)) throw InputError("domain exceeds the number of input assignments");
  inst.b = codomain.value_or(2 * inst.a);
  inst.table.reserve(inst.a);
  std::vector<std::uint8_t> val(gates.size());
  for (std::uint64_t x = 1; x <= inst.a; ++x) {
    Bits in = bits_from_uint(x - 1, n_inputs);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const auto& g = gates[i];
      switch (g.op) {
        case Op::In: val[i] = in[g.x - 1]; break;
        case Op::Const: val[i] = static_cast<std::uint8_t>(g.x); break;
        case Op::Not: val[i] = !val[g.x]; break;
        case Op::And: val[i] = val[g.x] & val[g.y]; break;
        case Op::Or: val[i] = val[g.x] | val[g.y]; break;
        case Op::Xor: val[i] = val[g.x] ^ val[g.y]; break;
      }
    }
    Bits out;
    for (auto k : outs) out.push_back(val[k]);
    inst.table.push_back(bits_to_uint(out) + 1);
  }
  check_instance(inst);
  return inst;
}

}  // namespace szkit
