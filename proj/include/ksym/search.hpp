#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ksym/graph.hpp"
#include "ksym/rational.hpp"

namespace ksym {

// ---------------------------------------------------------------------------
// Seeded sampling of graphs with exactly half of the possible edges.

/// Engine for trial `trial` of a run seeded with `seed`. Each trial owns an
/// independent stream, so results do not depend on how trials are sharded.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Uniform over labelled n-vertex graphs with C(n,2)/2 edges (partial
/// Fisher-Yates over the vertex-pair slots). Throws std::invalid_argument
/// when C(n,2) is odd.
Graph sample_2symmetric(int n, std::mt19937_64& rng);

struct SampleConfig {
  int order = 16;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t collect_limit = 1000;
  /// Worker threads; 0 means hardware concurrency. Does not affect results.
  unsigned threads = 1;
};

/// Throws std::invalid_argument unless trials >= 1, 1 <= order <= 64 and
/// C(order,2) is even.
void validate(const SampleConfig& config);

struct FoundGraph {
  std::uint64_t trial = 0;
  Graph graph;
};

struct SearchOutcome {
  SampleConfig config;
  std::uint64_t hits = 0;
  /// The first `collect_limit` hits, in trial order.
  std::vector<FoundGraph> found;
  std::chrono::nanoseconds elapsed{0};
  unsigned shards = 1;

  Rational hit_rate() const;
};

/// Samples `trials` graphs and keeps those that are 3-symmetric, testing the
/// integer identities on the 3-profile only.
SearchOutcome run_search(const SampleConfig& config);

/// round(hits / trials * population_2sym). Throws when trials == 0.
BigInt estimate_population(const SearchOutcome& outcome, const BigInt& population_2sym);
BigInt estimate_population(const Rational& rate, const BigInt& population_2sym);

// ---------------------------------------------------------------------------
// Exhaustive enumeration up to isomorphism.

inline constexpr int kMaxEnumerationOrder = 8;

struct EnumerationResult {
  int order = 0;
  std::uint64_t total_classes = 0;
  std::uint64_t two_symmetric_classes = 0;
  std::uint64_t three_symmetric_classes = 0;
  std::uint64_t self_complementary_classes = 0;
  std::uint64_t self_complementary_three_symmetric = 0;
  /// Labelled counts (sum of n!/|Aut| over the classes); order <= 10 only.
  BigInt labelled_two_symmetric = 0;
  BigInt labelled_three_symmetric = 0;
  /// Representatives of the 3-symmetric classes, sorted by canonical code.
  std::vector<Graph> three_symmetric;
};

struct EnumerationOptions {
  /// When set, augmentation visits parents and neighbourhoods in a shuffled
  /// order. The counts must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Canonical representatives of every graph on n vertices (n <= 8), built
/// level by level: each class on m vertices gets a new vertex joined to each
/// of the 2^m neighbourhood subsets, and the results are deduplicated by
/// canonical code. Sorted by canonical code.
std::vector<Graph> enumerate_classes(int n, const EnumerationOptions& options = {});

EnumerationResult enumerate_small_orders(int n, const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Statistics.

/// Exact maximum clique size: branch and bound over bitset candidate sets
/// with greedy colouring bounds.
int max_clique(const Graph& g);

struct StatsReport {
  std::map<int, std::uint64_t> max_clique_histogram;
  std::map<int, std::uint64_t> max_degree_histogram;
  std::uint64_t sample_count = 0;
};

/// Histograms of max clique and max degree. Throws on an empty list or
/// mixed orders.
StatsReport batch_stats(const std::vector<Graph>& graphs);

}  // namespace ksym
