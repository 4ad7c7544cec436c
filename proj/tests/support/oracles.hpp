#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's counting, canonical-labelling or clique code; only the Graph
// container is shared.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ksym/graph.hpp"

namespace ksym::oracle {

struct Counts3 {
  std::uint64_t triangles = 0, paths = 0, single_edge = 0, empty = 0;
};

inline Counts3 profile3(const Graph& g) {
  Counts3 c;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) {
        const int e = int{g.has_edge(a, b)} + int{g.has_edge(a, d)} + int{g.has_edge(b, d)};
        if (e == 3) ++c.triangles;
        if (e == 2) ++c.paths;
        if (e == 1) ++c.single_edge;
        if (e == 0) ++c.empty;
      }
  return c;
}

/// Upper-triangle bits in graph6 order for `g` relabelled by perm
/// (vertex at position p is perm[p]); first pair most significant.
inline unsigned __int128 code_under(const Graph& g, const std::vector<int>& perm) {
  unsigned __int128 v = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      v = (v << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1U : 0U);
  return v;
}

/// Minimum code over all n! relabellings.
inline unsigned __int128 canonical(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  unsigned __int128 best = ~static_cast<unsigned __int128>(0);
  do {
    best = std::min(best, code_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool same_edges_under(const Graph& a, const Graph& b, const std::vector<int>& perm) {
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.has_edge(u, v) != b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (same_edges_under(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (same_edges_under(g, g, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Number of isomorphism classes among all labelled graphs on n vertices.
inline std::size_t class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<unsigned __int128> codes;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++t)
        if ((mask >> t) & 1U) g.add_edge(i, j);
    codes.push_back(canonical(g));
  }
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

/// All labelled graphs on n vertices.
inline std::vector<Graph> all_labelled(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++t)
        if ((mask >> t) & 1U) g.add_edge(i, j);
    out.push_back(g);
  }
  return out;
}

/// One representative per isomorphism class on n vertices (brute force).
inline std::vector<Graph> all_unlabelled(int n) {
  std::vector<std::pair<unsigned __int128, Graph>> tagged;
  for (const Graph& g : all_labelled(n)) tagged.emplace_back(canonical(g), g);
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < tagged.size(); ++i)
    if (i == 0 || tagged[i].first != tagged[i - 1].first) out.push_back(tagged[i].second);
  return out;
}

/// Number of k-subsets of V(g) inducing a graph isomorphic to h.
inline std::uint64_t induced_copies(const Graph& h, const Graph& g) {
  const int k = h.order();
  const int n = g.order();
  if (k > n) return 0;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  std::uint64_t count = 0;
  do {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (pick[static_cast<std::size_t>(v)]) s.insert(v);
    if (isomorphic(induced_subgraph(g, s), h)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

inline int max_clique(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool clique = true;
    for (std::uint64_t r = s; r != 0 && clique; r &= r - 1) {
      const int v = std::countr_zero(r);
      clique = ((g.row(v) | (Row{1} << v)) & s) == s;
    }
    if (clique) best = size;
  }
  return best;
}

/// nu2(n!) by Legendre's formula.
inline std::uint64_t legendre2(std::uint64_t n) {
  std::uint64_t e = 0;
  for (std::uint64_t p = 2; p <= n; p *= 2) e += n / p;
  return e;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ksym::oracle
