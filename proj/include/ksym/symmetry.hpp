#pragma once

#include <string>
#include <vector>

#include "ksym/canonical.hpp"
#include "ksym/density.hpp"
#include "ksym/graph.hpp"
#include "ksym/rational.hpp"

namespace ksym {

/// Supported range for k in the symmetry predicates.
inline constexpr int kMinSymmetryOrder = 2;
inline constexpr int kMaxSymmetryOrder = 4;

struct SymmetryEntry {
  CanonicalCode cls;
  std::string name;
  std::uint64_t count = 0;
  Rational measured;
  Rational expected;
  Rational deviation;  // measured - expected
};

/// Per-class densities of the induced k-vertex subgraphs of a graph.
/// `trivial` marks graphs with fewer than k vertices: they are k-symmetric
/// by convention, every measured density is 0.
struct SymmetryReport {
  int k = 0;
  int order = 0;
  bool trivial = false;
  bool is_symmetric = false;
  std::vector<SymmetryEntry> entries;
};

/// Exact test count(H) * 2^C(k,2) == C(n,k) * k!/|Aut H| for every class H
/// on k vertices. 2 <= k <= 4.
bool is_k_symmetric(const Graph& g, int k);

/// Same test, reading the counts off a precomputed profile (k = 3).
bool is_3_symmetric(const Profile3& p, int order);

SymmetryReport symmetry_report(const Graph& g, int k);

/// 2-symmetric with t(K3) = t(3K1) and t(P3) = t(K2+K1). All three
/// conditions are evaluated; a violation of "any two imply the third"
/// throws std::logic_error.
bool is_almost_3_symmetric(const Graph& g);

/// Isomorphic to its complement; order <= 16.
bool is_self_complementary(const Graph& g);

}  // namespace ksym
