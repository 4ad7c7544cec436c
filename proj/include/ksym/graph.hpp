#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ksym {

/// One adjacency row; bit j set iff the edge {i, j} is present.
using Row = std::uint64_t;

/// Largest order any graph in the library may have (one machine word per row).
inline constexpr int kMaxOrder = 64;

/// Thrown for malformed graph text (matrix or graph6).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mask with the low `n` bits set, valid for 0 <= n <= 64.
constexpr Row low_bits(int n) {
  return n >= 64 ? ~Row{0} : (Row{1} << n) - 1;
}

/// Subset of {0, ..., 63}.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Row bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet first(int n) { return VertexSet(low_bits(n)); }

  constexpr Row bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  void insert(int v);

  /// Members in increasing order.
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Row bits_ = 0;
};

/// Undirected simple graph on vertices 0..n-1, n <= 64, stored as full
/// adjacency rows so that common neighbourhoods are one AND away.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  int order() const { return n_; }
  Row row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const Row> rows() const { return adj_; }
  VertexSet neighbours(int v) const { return VertexSet(row(v)); }
  bool has_edge(int u, int v) const { return (row(u) >> v) & 1U; }
  int degree(int v) const { return std::popcount(row(v)); }
  std::int64_t edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::vector<Row> adj_;
};

/// C(n, k) for small arguments; 0 when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Star with centre 0 and n-1 leaves (S4 is the claw K_{1,3}).
Graph star_graph(int n);
/// Hub 0 joined to every vertex of the cycle 1..n-1; n >= 4.
Graph wheel_graph(int n);
/// Disjoint union, `a` keeps labels 0..|a|-1.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Resolves short names such as "K4", "P4", "S4", "C5", "W8", "E3", "K3+K1".
/// Throws std::invalid_argument for an unknown name.
Graph named_graph(std::string_view name);

Graph complement(const Graph& g);

/// Subgraph induced by `s`, relabelled by increasing original index.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Relabels vertex v as perm[v]; `perm` must be a permutation of 0..n-1.
Graph permuted(const Graph& g, std::span<const int> perm);

int max_degree(const Graph& g);

/// Parses a whitespace-separated 0/1 matrix. Rows end at newlines or '/';
/// LaTeX '&' separators and trailing '\\' are tolerated.
Graph from_adjacency_text(std::string_view text);
/// One row per line, entries separated by single spaces.
std::string to_adjacency_text(const Graph& g);

/// graph6 encoding of a single graph (no header, no newline).
std::string emit_graph6(const Graph& g);
/// Parses one graph6 line; an optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);

/// Reads one or more graphs from text. Text containing '0'/'1' characters
/// is read as adjacency matrices separated by blank lines; anything else as
/// graph6, one graph per non-empty line.
std::vector<Graph> read_graphs(std::string_view text);

}  // namespace ksym
