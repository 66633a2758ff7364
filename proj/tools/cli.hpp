#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace szkit::cli {

enum Exit : int {
  kOk = 0,
  kNegative = 1,  // NonZero verdict, Misses, failed selftest
  kUsage = 64,
  kInput = 65,
  kGuard = 70,
};

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szkit::cli
