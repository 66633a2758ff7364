#include "szkit/classes.hpp"

#include <fstream>
#include <sstream>

namespace szkit {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DefinableClass grid_class(SliceParams slice) {
  auto decoder = [](const SliceParams& sl, const Bits& x, const std::string&) {
    const std::size_t lo = (sl.m + 1) / 2;
    std::uint64_t u = bits_to_uint(substring(x, 1, lo));
    std::uint64_t v = bits_to_uint(substring(x, lo + 1, sl.m));
    CircuitBuilder b;
    auto z1 = b.var(1);
    auto z2 = b.var(2);
    auto f1 = b.add(z1, b.constant(-from_u64(u)));
    auto f2 = b.add(z2, b.constant(-from_u64(v)));
    auto f3 = b.add(b.add(z1, z2), b.constant(-from_u64(u) - from_u64(v)));
    b.mul(b.mul(f1, f2), f3);
    return b.build();
  };
  return DefinableClass("builtin:grid", slice, decoder);
}

DefinableClass zero_class(SliceParams slice) {
  return DefinableClass("builtin:zero", slice, [](const SliceParams&, const Bits&, const std::string&) {
    return zero_circuit();
  });
}

DefinableClass all_circuits_class(SliceParams slice) {
  auto decoder = [](const SliceParams&, const Bits& x, const std::string&) {
    std::string text;
    for (std::size_t i = 0; i + 8 <= x.size(); i += 8) {
      text.push_back(static_cast<char>(bits_to_uint(Bits(x.begin() + static_cast<std::ptrdiff_t>(i),
                                                         x.begin() + static_cast<std::ptrdiff_t>(i + 8)))));
    }
    return parse_circuit(text);
  };
  return DefinableClass("builtin:all", slice, decoder);
}

DefinableClass list_class(SliceParams slice, std::vector<Circuit> circuits, std::string name) {
  auto decoder = [circuits = std::move(circuits)](const SliceParams&, const Bits& x, const std::string&) {
    std::uint64_t idx = x.size() > 64 ? circuits.size() : bits_to_uint(x);
    return idx < circuits.size() ? circuits[idx] : zero_circuit();
  };
  return DefinableClass(std::move(name), slice, decoder);
}

DefinableClass make_class(std::string_view spec, SliceParams slice) {
  if (spec == "builtin:grid") return grid_class(slice);
  if (spec == "builtin:zero") return zero_class(slice);
  if (spec == "builtin:all") return all_circuits_class(slice);
  if (spec.substr(0, 5) == "file:") {
    std::vector<Circuit> circuits;
    std::string_view rest = spec.substr(5);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      std::string path(rest.substr(pos, comma - pos));
      if (!path.empty()) circuits.push_back(parse_circuit(read_text_file(path)));
      pos = comma + 1;
    }
    if (circuits.empty()) throw InputError("file class needs at least one circuit");
    return list_class(slice, std::move(circuits), std::string(spec));
  }
  throw InputError("unknown class '" + std::string(spec) + "'");
}

}  // namespace szkit
