#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksym/canonical.hpp"
#include "ksym/graph.hpp"
#include "ksym/rational.hpp"

namespace ksym {

/// Largest subgraph order for density / expected_density.
inline constexpr int kMaxDensityOrder = 5;

/// Edge and non-edge counts.
struct Profile2 {
  std::uint64_t edges = 0;
  std::uint64_t nonedges = 0;

  Rational edge_density() const;
  Rational nonedge_density() const;
  friend bool operator==(const Profile2&, const Profile2&) = default;
};

/// Counts of induced 3-vertex subgraphs by isomorphism class.
struct Profile3 {
  std::uint64_t triangles = 0;    // K3
  std::uint64_t paths = 0;        // P3
  std::uint64_t single_edge = 0;  // K2 + K1
  std::uint64_t empty = 0;        // 3K1

  std::uint64_t total() const { return triangles + paths + single_edge + empty; }
  /// Densities in the order (triangles, paths, single_edge, empty); all zero
  /// when the graph has fewer than three vertices.
  std::vector<Rational> densities() const;
  friend bool operator==(const Profile3&, const Profile3&) = default;
};

Profile2 profile2(const Graph& g);

/// Triangles from common-neighbour popcounts, then
/// paths = sum_v C(deg v, 2) - 3 T, single_edge = (n-2) e - 3 T - 2 P,
/// empty = C(n,3) - T - P - S.
Profile3 profile3(const Graph& g);

/// One isomorphism class of k-vertex graphs.
struct GraphClass {
  CanonicalCode code;
  Graph representative;
  std::uint64_t automorphisms = 1;
  /// Labelled graphs in the class: k! / |Aut|.
  std::uint64_t labelings = 1;
  std::string name;
};

/// All isomorphism classes on k vertices (0 <= k <= 5), built once by
/// brute force over the 2^C(k,2) labelled graphs. Classes are sorted by
/// canonical code, so for k = 3 the order is 3K1, K2+K1, P3, K3.
class ClassTable {
 public:
  static const ClassTable& of_order(int k);

  int order() const { return k_; }
  const std::vector<GraphClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  /// Class index of a labelled k-vertex graph given by its packed
  /// upper-triangle bits (graph6 order, first pair most significant).
  int class_of_mask(std::uint32_t mask) const { return class_of_mask_[mask]; }
  int class_of(const Graph& h) const;

 private:
  explicit ClassTable(int k);

  int k_;
  std::vector<GraphClass> classes_;
  std::vector<int> class_of_mask_;
};

/// Induced-subgraph counts of every class in ClassTable::of_order(k),
/// indexed like classes(). Fast paths for k <= 3; k-subset enumeration
/// otherwise. 0 <= k <= 5.
std::vector<std::uint64_t> class_counts(const Graph& g, int k);

/// Fraction of |H|-subsets of V(G) inducing a copy of H; 0 when |G| < |H|.
/// |H| <= 5.
Rational density(const Graph& h, const Graph& g);

/// Probability that the uniform random graph on |H| vertices is isomorphic
/// to H: (k! / |Aut H|) / 2^C(k,2). |H| <= 5.
Rational expected_density(const Graph& h);

}  // namespace ksym
