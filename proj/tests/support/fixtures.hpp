#pragma once

#include <string>

#include "ksym/graph.hpp"
#include "oracles.hpp"

namespace ksym::testing {

inline std::string fixture_path(const std::string& name) { return std::string(KSYM_FIXTURE_DIR) + "/" + name; }

/// Loads fixtures/<name>.mat.
inline Graph load_fixture(const std::string& name) {
  return from_adjacency_text(oracle::read_file(fixture_path(name + ".mat")));
}

}  // namespace ksym::testing
