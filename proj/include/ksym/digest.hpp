#pragma once

#include <string>
#include <string_view>

namespace ksym {

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// SHA-256 of a file's bytes. Throws std::runtime_error if it cannot be read.
std::string sha256_file(const std::string& path);

}  // namespace ksym
