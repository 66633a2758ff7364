#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace szkit {

struct SelftestRow {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;
};

// Desk-scale invariant checks over every module.
std::vector<SelftestRow> run_selftest(std::uint64_t seed);

}  // namespace szkit
