#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ksym/graph.hpp"

namespace ksym {

/// Largest order accepted by canonical_code / is_isomorphic.
inline constexpr int kMaxCanonicalOrder = 16;
/// Largest order accepted by automorphism_count.
inline constexpr int kMaxAutomorphismOrder = 10;

/// Labeling-invariant encoding of a graph of order <= 16.
///
/// `bits` holds the C(n,2) upper-triangle adjacency bits of the relabeling
/// that minimises them, in graph6 order (x(0,1), x(0,2), x(1,2), x(0,3), ...)
/// with the first pair as the most significant bit. Word 0 is the high word.
struct CanonicalCode {
  int n = 0;
  std::array<std::uint64_t, 2> bits{};

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  /// Graph whose labeling is the canonical one.
  Graph to_graph() const;
  std::string to_string() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::uint64_t h = c.bits[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (c.bits[1] + static_cast<std::uint64_t>(c.n)) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

/// Upper-triangle bits of `g` as labelled (no minimisation), same packing as
/// CanonicalCode. Requires order <= 16.
CanonicalCode labelled_code(const Graph& g);

/// Throws std::invalid_argument when the order exceeds kMaxCanonicalOrder.
CanonicalCode canonical_code(const Graph& g);

/// Isomorphism test; cheap rejects on order, edge count and degree sequence.
bool is_isomorphic(const Graph& a, const Graph& b);

/// Number of vertex permutations preserving the edge set; order <= 10.
std::uint64_t automorphism_count(const Graph& g);

/// Iterated colour refinement starting from degrees. The colour of a vertex
/// is its rank among the distinct (colour, sorted neighbour colours)
/// signatures, so colours are isomorphism-invariant.
std::vector<int> refined_colours(const Graph& g);

}  // namespace ksym

template <>
struct std::hash<ksym::CanonicalCode> : ksym::CanonicalCodeHash {};
