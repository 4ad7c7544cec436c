#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksym::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace ksym::cli
