#pragma once

#include <string_view>
#include <vector>

#include "szkit/hitting.hpp"

namespace szkit {

// x = (u, v) split into the low ceil(m/2) and the high floor(m/2) bits;
// member (z1 - u)(z2 - v)(z1 + z2 - u - v). Needs n = 2 and d >= 2.
DefinableClass grid_class(SliceParams slice);

// Every description decodes to the zero circuit.
DefinableClass zero_class(SliceParams slice);

// x read as ASCII text (8 bits per character, least significant bit first)
// and parsed as a circuit.
DefinableClass all_circuits_class(SliceParams slice);

// x read as a number selects one of the given circuits.
DefinableClass list_class(SliceParams slice, std::vector<Circuit> circuits, std::string name = "list");

// "builtin:grid", "builtin:zero", "builtin:all" or "file:a.ac,b.ac".
DefinableClass make_class(std::string_view spec, SliceParams slice);

std::string read_text_file(const std::string& path);

}  // namespace szkit
