#include "ksym/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ksym {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= kMaxOrder) {
    throw std::out_of_range("vertex index " + std::to_string(v) + " outside 0..63");
  }
  bits_ |= Row{1} << v;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Row b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0..64");
  }
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), Row{0});
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (Row r : adj_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside graph of order " + std::to_string(n_));
  }
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(int u, int v) { set_edge(u, v, true); }
void Graph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Graph::set_edge(int u, int v, bool present) {
  check_pair(u, v);
  const auto ui = static_cast<std::size_t>(u);
  const auto vi = static_cast<std::size_t>(v);
  if (present) {
    adj_[ui] |= Row{1} << v;
    adj_[vi] |= Row{1} << u;
  } else {
    adj_[ui] &= ~(Row{1} << v);
    adj_[vi] &= ~(Row{1} << u);
  }
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i at every step
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("a star needs at least 1 vertex");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("a wheel needs at least 4 vertices");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i + 1 < n ? i + 1 : 1);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  for (int u = 0; u < b.order(); ++u)
    for (int v = u + 1; v < b.order(); ++v)
      if (b.has_edge(u, v)) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

namespace {

int parse_size(std::string_view digits, std::string_view name) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
  }
  return std::stoi(std::string(digits));
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (auto plus = name.find('+'); plus != std::string_view::npos) {
    return disjoint_union(named_graph(name.substr(0, plus)), named_graph(name.substr(plus + 1)));
  }
  if (name.empty()) throw std::invalid_argument("empty graph name");
  const char kind = name[0];
  const int n = parse_size(name.substr(1), name);
  switch (kind) {
    case 'K': return complete_graph(n);
    case 'E': return empty_graph(n);
    case 'P': return path_graph(n);
    case 'C': return cycle_graph(n);
    case 'S': return star_graph(n);
    case 'W': return wheel_graph(n);
    default: throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
  }
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if ((s.bits() & ~low_bits(g.order())) != 0) {
    throw std::out_of_range("vertex set selects an index >= graph order " + std::to_string(g.order()));
  }
  const std::vector<int> keep = s.members();
  const int k = static_cast<int>(keep.size());
  Graph h(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)])) h.add_edge(a, b);
  return h;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  Row seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw std::invalid_argument("not a permutation");
    seen |= Row{1} << p;
  }
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Graph from_adjacency_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> current;
  auto end_row = [&] {
    if (!current.empty()) rows.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n' || c == '/') {
      end_row();
    } else if (c == '0' || c == '1') {
      current.push_back(c - '0');
    } else if (c == '\\') {
      // LaTeX row terminator "\\" (the row itself ends at the newline)
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == '&' || c == ',') {
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in adjacency matrix");
    }
  }
  end_row();

  const std::size_t n = rows.size();
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw ParseError("matrix of order " + std::to_string(n) + " exceeds the supported 64");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("matrix is not square: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
  }
  Graph g(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) throw ParseError("nonzero diagonal entry at row " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParseError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (rows[i][j] != 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

std::string to_adjacency_text(const Graph& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.order() * g.order() * 2));
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (v > 0) out += ' ';
      out += g.has_edge(u, v) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::vector<Graph> read_graphs(std::string_view text) {
  std::vector<Graph> graphs;
  const bool matrix = text.find_first_of("01") != std::string_view::npos;
  std::istringstream in{std::string(text)};
  std::string line;
  if (matrix) {
    std::string block;
    auto flush = [&] {
      if (block.find_first_of("01") != std::string::npos) graphs.push_back(from_adjacency_text(block));
      block.clear();
    };
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        flush();
      } else {
        block += line;
        block += '\n';
      }
    }
    flush();
  } else {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      graphs.push_back(parse_graph6(std::string_view(line).substr(first, last - first + 1)));
    }
  }
  if (graphs.empty()) throw ParseError("no graph found in input");
  return graphs;
}

}  // namespace ksym
