// graph6 encoding as used by nauty/geng:
//   N(n) = n+63 for n <= 62, else 126 followed by three 6-bit groups (n < 2^18),
//   else 126 126 followed by six groups;
//   then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... in groups of six
//   bits, most significant first, zero padded, each group offset by 63.

#include <string>

#include "ksym/graph.hpp"

namespace ksym {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63U) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63U) + 63);
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) {
    throw ParseError(std::string("byte '") + c + "' outside the graph6 range 63..126");
  }
  return v;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_order(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int groups) {
    if (pos + static_cast<std::size_t>(groups) > line.size()) throw ParseError("truncated graph6 order field");
    std::uint64_t v = 0;
    for (int i = 0; i < groups; ++i) v = (v << 6) | static_cast<std::uint64_t>(sextet(line[pos++]));
    return v;
  };
  if (line[0] == '~') {
    pos = 1;
    if (line.size() > 1 && line[1] == '~') {
      pos = 2;
      n = take(6);
    } else {
      n = take(3);
    }
  } else {
    n = take(1);
  }
  if (n > static_cast<std::uint64_t>(kMaxOrder)) {
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds the supported 64");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < need) {
    throw ParseError("truncated graph6 payload: expected " + std::to_string(need) + " bytes, got " +
                     std::to_string(line.size() - pos));
  }
  if (line.size() - pos > need) throw ParseError("trailing bytes after graph6 payload");

  Graph g(static_cast<int>(n));
  std::uint64_t t = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const int byte = sextet(line[pos + static_cast<std::size_t>(t / 6)]);
      if ((byte >> (5 - static_cast<int>(t % 6))) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t b = static_cast<std::size_t>(t / 6); b < need; ++b) sextet(line[pos + b]);
  return g;
}

}  // namespace ksym
