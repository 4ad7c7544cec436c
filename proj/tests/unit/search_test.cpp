#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ksym/canonical.hpp"
#include "ksym/search.hpp"
#include "ksym/symmetry.hpp"
#include "oracles.hpp"

namespace ksym {
namespace {

std::uint64_t edge_mask(const Graph& g) {
  std::uint64_t m = 0;
  int t = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.has_edge(i, j)) m |= std::uint64_t{1} << t;
  return m;
}

TEST(Sampler, HalfTheEdges) {
  std::mt19937_64 rng(1);
  for (int n : {4, 5, 8, 9, 16, 17, 24, 32, 33, 40, 64}) {
    const Graph g = sample_2symmetric(n, rng);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(2 * g.edge_count(), binomial(n, 2));
  }
  EXPECT_EQ(sample_2symmetric(16, rng).edge_count(), 60U);
}

TEST(Sampler, OddPairCountRejected) {
  std::mt19937_64 rng(1);
  EXPECT_NO_THROW(sample_2symmetric(5, rng));
  EXPECT_THROW(sample_2symmetric(6, rng), std::invalid_argument);
  EXPECT_THROW(sample_2symmetric(7, rng), std::invalid_argument);
}

TEST(Sampler, UniformOverLabelledGraphsOnFourVertices) {
  constexpr int kDraws = 100000;
  std::map<std::uint64_t, int> seen;
  for (int t = 0; t < kDraws; ++t) {
    std::mt19937_64 rng = trial_engine(2024, static_cast<std::uint64_t>(t));
    ++seen[edge_mask(sample_2symmetric(4, rng))];
  }
  ASSERT_EQ(seen.size(), 20U);  // C(6,3)
  const double p = 1.0 / 20;
  const double sigma = std::sqrt(p * (1 - p) / kDraws);
  for (const auto& [mask, count] : seen) EXPECT_NEAR(static_cast<double>(count) / kDraws, p, 3 * sigma) << mask;
}

TEST(TrialEngine, DistinctAndReproducible) {
  std::mt19937_64 a = trial_engine(7, 0);
  std::mt19937_64 b = trial_engine(7, 0);
  std::mt19937_64 c = trial_engine(7, 1);
  std::mt19937_64 d = trial_engine(8, 0);
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
}

TEST(RunSearch, Validation) {
  SampleConfig config;
  config.trials = 0;
  EXPECT_THROW(run_search(config), std::invalid_argument);
  config.trials = 10;
  config.order = 6;
  EXPECT_THROW(run_search(config), std::invalid_argument);
  config.order = 65;
  EXPECT_THROW(run_search(config), std::invalid_argument);
  config.order = 8;
  EXPECT_NO_THROW(run_search(config));
}

TEST(RunSearch, HitsAreThreeSymmetric) {
  SampleConfig config;
  config.order = 8;
  config.trials = 4000;
  config.seed = 3;
  const SearchOutcome out = run_search(config);
  EXPECT_GT(out.hits, 0U);
  EXPECT_EQ(out.found.size(), std::min<std::uint64_t>(out.hits, config.collect_limit));
  for (std::size_t i = 0; i < out.found.size(); ++i) {
    const Graph& g = out.found[i].graph;
    EXPECT_TRUE(is_k_symmetric(g, 3));
    EXPECT_TRUE(is_k_symmetric(g, 2));
    if (i > 0) {
      EXPECT_LT(out.found[i - 1].trial, out.found[i].trial);
    }
    std::mt19937_64 rng = trial_engine(config.seed, out.found[i].trial);
    EXPECT_EQ(sample_2symmetric(8, rng), g);
  }
  EXPECT_EQ(out.hit_rate(), Rational(BigInt(out.hits), BigInt(config.trials)));
}

TEST(RunSearch, Reproducible) {
  SampleConfig config;
  config.order = 16;
  config.trials = 3000;
  config.seed = 12345;
  const SearchOutcome a = run_search(config);
  const SearchOutcome b = run_search(config);
  EXPECT_EQ(a.hits, b.hits);
  ASSERT_EQ(a.found.size(), b.found.size());
  for (std::size_t i = 0; i < a.found.size(); ++i) {
    EXPECT_EQ(a.found[i].trial, b.found[i].trial);
    EXPECT_EQ(a.found[i].graph, b.found[i].graph);
    const oracle::Counts3 c = oracle::profile3(a.found[i].graph);
    EXPECT_EQ(c.triangles, 70U);
    EXPECT_EQ(c.empty, 70U);
    EXPECT_EQ(c.paths, 210U);
    EXPECT_EQ(c.single_edge, 210U);
  }
}

TEST(RunSearch, IndependentOfThreadCount) {
  SampleConfig config;
  config.order = 8;
  config.trials = 3001;
  config.seed = 99;
  config.collect_limit = 50;
  const SearchOutcome one = run_search(config);
  for (unsigned threads : {2U, 3U, 7U}) {
    config.threads = threads;
    const SearchOutcome many = run_search(config);
    EXPECT_EQ(many.hits, one.hits);
    ASSERT_EQ(many.found.size(), one.found.size());
    for (std::size_t i = 0; i < one.found.size(); ++i) {
      EXPECT_EQ(many.found[i].trial, one.found[i].trial);
      EXPECT_EQ(many.found[i].graph, one.found[i].graph);
    }
  }
}

TEST(RunSearch, HitRateAtOrderEightNearClassRatio) {
  // Labelled 3-symmetric / labelled 2-symmetric graphs on 8 vertices.
  const EnumerationResult e = enumerate_small_orders(8);
  const double expected = static_cast<double>(e.labelled_three_symmetric) / 40116600.0;
  SampleConfig config;
  config.order = 8;
  config.trials = 20000;
  config.seed = 5;
  const SearchOutcome out = run_search(config);
  const double rate = static_cast<double>(out.hits) / config.trials;
  const double sigma = std::sqrt(expected * (1 - expected) / config.trials);
  EXPECT_NEAR(rate, expected, 4 * sigma);
}

TEST(EstimatePopulation, Values) {
  const BigInt two_sym("4648429222263945620900");
  EXPECT_EQ(estimate_population(Rational(BigInt(451), BigInt(10000)), two_sym), BigInt("209644157924103947503"));
  EXPECT_EQ(estimate_population(Rational(0), two_sym), 0);
  EXPECT_EQ(estimate_population(Rational(BigInt(1), BigInt(2)), BigInt(5)), 3);  // ties away from zero
  EXPECT_EQ(estimate_population(Rational(BigInt(74), BigInt(1646)), BigInt(1646)), 74);
  SearchOutcome out;
  out.config.trials = 10;
  out.hits = 3;
  EXPECT_EQ(estimate_population(out, BigInt(100)), 30);
  out.config.trials = 0;
  EXPECT_THROW(estimate_population(out, BigInt(100)), std::invalid_argument);
}

TEST(Enumeration, OrderFour) {
  const EnumerationResult e = enumerate_small_orders(4);
  EXPECT_EQ(e.total_classes, 11U);
  EXPECT_EQ(e.two_symmetric_classes, 3U);
  EXPECT_EQ(e.three_symmetric_classes, 0U);
  EXPECT_EQ(e.self_complementary_classes, 1U);
  EXPECT_EQ(e.labelled_two_symmetric, 20);
}

TEST(Enumeration, OrderFive) {
  const EnumerationResult e = enumerate_small_orders(5);
  EXPECT_EQ(e.total_classes, 34U);
  EXPECT_EQ(e.two_symmetric_classes, 6U);
  EXPECT_EQ(e.self_complementary_classes, 2U);
  EXPECT_EQ(e.labelled_two_symmetric, 252);
}

TEST(Enumeration, MatchesBruteForceUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    const std::vector<Graph> brute = oracle::all_unlabelled(n);
    const std::vector<Graph> classes = enumerate_classes(n);
    ASSERT_EQ(classes.size(), brute.size()) << n;
    std::set<unsigned __int128> brute_codes, codes;
    for (const Graph& g : brute) brute_codes.insert(oracle::canonical(g));
    for (const Graph& g : classes) codes.insert(oracle::canonical(g));
    EXPECT_EQ(codes, brute_codes) << n;

    std::uint64_t two = 0, three = 0, labelled_two = 0;
    for (const Graph& g : oracle::all_labelled(n)) {
      if (static_cast<std::uint64_t>(2 * g.edge_count()) == binomial(n, 2)) ++labelled_two;
    }
    for (const Graph& g : brute) {
      const oracle::Counts3 c = oracle::profile3(g);
      const bool half = static_cast<std::uint64_t>(2 * g.edge_count()) == binomial(n, 2);
      two += half ? 1 : 0;
      const auto triples = static_cast<std::uint64_t>(binomial(n, 3));
      // below three vertices the condition is vacuous
      three += (n < 3 || (half && c.triangles * 8 == triples && c.paths * 8 == 3 * triples)) ? 1 : 0;
    }
    const EnumerationResult e = enumerate_small_orders(n);
    EXPECT_EQ(e.total_classes, brute.size());
    EXPECT_EQ(e.two_symmetric_classes, two) << n;
    EXPECT_EQ(e.three_symmetric_classes, three) << n;
    EXPECT_EQ(e.labelled_two_symmetric, labelled_two) << n;
  }
}

TEST(Enumeration, ShuffleInvariant) {
  for (int n : {5, 6}) {
    const std::vector<Graph> plain = enumerate_classes(n);
    for (std::uint64_t seed : {1U, 2U, 3U}) EXPECT_EQ(enumerate_classes(n, {seed}), plain);
  }
}

TEST(Enumeration, OrderBounds) {
  EXPECT_THROW(enumerate_classes(-1), std::invalid_argument);
  EXPECT_THROW(enumerate_classes(kMaxEnumerationOrder + 1), std::invalid_argument);
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(complete_graph(5)), 5);
  EXPECT_EQ(max_clique(empty_graph(5)), 1);
  EXPECT_EQ(max_clique(empty_graph(0)), 0);
  EXPECT_EQ(max_clique(cycle_graph(5)), 2);
  EXPECT_EQ(max_clique(wheel_graph(8)), 3);
  EXPECT_EQ(max_clique(complete_graph(64)), 64);
  EXPECT_EQ(max_clique(testing::load_fixture("order16")), oracle::max_clique(testing::load_fixture("order16")));
}

TEST(MaxClique, MatchesBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 18;
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
    ASSERT_EQ(max_clique(g), oracle::max_clique(g)) << to_adjacency_text(g);
  }
}

TEST(MaxClique, PlantedCliqueInLargeGraph) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = oracle::random_graph(64, 0.3, rng);
    const std::vector<int> perm = oracle::random_permutation(64, rng);
    for (int i = 0; i < 14; ++i)
      for (int j = i + 1; j < 14; ++j) g.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    EXPECT_GE(max_clique(g), 14);
    EXPECT_LE(max_clique(g), 15);
  }
}

TEST(BatchStats, Fixtures) {
  const Graph g16 = testing::load_fixture("order16");
  const Graph g17 = testing::load_fixture("order17");
  const Graph g9 = testing::load_fixture("maxdeg9");
  for (const Graph& g : {g16, g17}) {
    const StatsReport s = batch_stats({g});
    EXPECT_EQ(s.max_clique_histogram.size(), 1U);
    EXPECT_EQ(s.max_degree_histogram.size(), 1U);
  }
  const StatsReport s = batch_stats({g9, g16});
  EXPECT_EQ(s.max_degree_histogram.count(9), 1U);
  const int clique = max_clique(g9);
  EXPECT_EQ(clique, oracle::max_clique(g9));
  EXPECT_GE(clique, 3);
  EXPECT_LE(clique, 8);
}

TEST(BatchStats, Histograms) {
  const std::vector<Graph> graphs{wheel_graph(8), complete_graph(8), empty_graph(8), wheel_graph(8)};
  const StatsReport s = batch_stats(graphs);
  EXPECT_EQ(s.sample_count, 4U);
  EXPECT_EQ(s.max_clique_histogram, (std::map<int, std::uint64_t>{{1, 1}, {3, 2}, {8, 1}}));
  EXPECT_EQ(s.max_degree_histogram, (std::map<int, std::uint64_t>{{0, 1}, {7, 3}}));
  EXPECT_THROW(batch_stats({}), std::invalid_argument);
  EXPECT_THROW(batch_stats({wheel_graph(8), complete_graph(4)}), std::invalid_argument);
}

}  // namespace
}  // namespace ksym
