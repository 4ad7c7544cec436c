#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ksym/inflation.hpp"
#include "ksym/search.hpp"
#include "ksym/symmetry.hpp"
#include "oracles.hpp"

namespace ksym {
namespace {

Rational r(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

// Densities straight from a triple count, independent of profile3.
InflationPrediction brute_profile(const Graph& g) {
  const oracle::Counts3 c = oracle::profile3(g);
  const auto n = g.order();
  const Rational triples(BigInt(n) * (n - 1) * (n - 2) / 6);
  std::uint64_t edges = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges += g.has_edge(u, v) ? 1 : 0;
  return {Rational(BigInt(edges)) / Rational(BigInt(n) * (n - 1) / 2), Rational(BigInt(c.triangles)) / triples,
          Rational(BigInt(c.paths)) / triples, Rational(BigInt(c.single_edge)) / triples,
          Rational(BigInt(c.empty)) / triples};
}

TEST(Inflate, PathIntoStar) {
  const Graph g = inflate(named_graph("P4"), named_graph("S4"));
  EXPECT_EQ(g.order(), 16);
  EXPECT_EQ(g.edge_count(), 60U);
  EXPECT_TRUE(is_k_symmetric(g, 2));
  // block 0 carries the star, centre first
  for (int v = 1; v < 4; ++v) EXPECT_TRUE(g.has_edge(0, v));
  EXPECT_FALSE(g.has_edge(1, 2));
  // P4 edge 0-1 joins blocks 0 and 1 completely; 0-2 is absent
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      EXPECT_TRUE(g.has_edge(a, 4 + b));
      EXPECT_FALSE(g.has_edge(a, 8 + b));
    }
}

TEST(Inflate, Identities) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 9, 0.5, rng);
    EXPECT_EQ(inflate(g, empty_graph(1)), g);
    EXPECT_EQ(inflate(empty_graph(1), g), g);
  }
  EXPECT_EQ(inflate(complete_graph(2), complete_graph(2)), complete_graph(4));
  EXPECT_EQ(inflate(empty_graph(3), complete_graph(2)), disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2)));
  EXPECT_EQ(inflate(wheel_graph(8), wheel_graph(8)).order(), 64);
  EXPECT_THROW(inflate(wheel_graph(8), empty_graph(9)), std::invalid_argument);
}

TEST(Inflate, EdgeCountFormula) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 8, 0.4, rng);
    const Graph h = oracle::random_graph(1 + trial % 7, 0.6, rng);
    const Graph out = inflate(g, h);
    EXPECT_EQ(out.edge_count(), g.order() * h.edge_count() + g.edge_count() * h.order() * h.order());
  }
}

TEST(PredictEdgeDensity, Examples) {
  EXPECT_EQ(predict_edge_density(named_graph("P4"), named_graph("S4")), r(1, 2));
  EXPECT_EQ(predict_edge_density(complete_graph(2), complete_graph(2)), 1);
  EXPECT_EQ(predict_edge_density(wheel_graph(8), wheel_graph(8)), r(1, 2));
  EXPECT_EQ(inflate(wheel_graph(8), wheel_graph(8)).edge_count() * 2, binomial(64, 2));
  EXPECT_THROW(predict_edge_density(empty_graph(1), empty_graph(1)), std::invalid_argument);
  EXPECT_THROW(predict_edge_density(empty_graph(0), empty_graph(4)), std::invalid_argument);
}

TEST(Predict3Profile, Examples) {
  const Graph w = wheel_graph(8);
  const InflationPrediction ww = predict_3profile(w, w);
  EXPECT_EQ(ww.triangle, r(121, 744));
  EXPECT_EQ(ww.triangle, r(1, 8) + r(7, 186));
  EXPECT_EQ(predict_3profile(w, empty_graph(1)), measured_profile(w));
  const InflationPrediction pp = predict_3profile(named_graph("P4"), named_graph("P4"));
  EXPECT_EQ(pp.triangle + pp.path + pp.single_edge + pp.empty, 1);
  EXPECT_EQ(pp, brute_profile(inflate(named_graph("P4"), named_graph("P4"))));
  EXPECT_THROW(predict_3profile(complete_graph(2), empty_graph(1)), std::invalid_argument);
  EXPECT_NO_THROW(predict_3profile(complete_graph(3), empty_graph(1)));
}

TEST(Predict3Profile, MatchesMeasurementOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 8, 0.3 + 0.05 * (trial % 7), rng);
    const Graph h = oracle::random_graph(1 + trial % 7, 0.5, rng);
    if (g.order() * h.order() < 3) continue;
    const InflationPrediction p = predict_3profile(g, h);
    EXPECT_EQ(p, brute_profile(inflate(g, h)));
    EXPECT_EQ(p.triangle + p.path + p.single_edge + p.empty, 1);
    // edge density is the edge-weighted average over triples
    EXPECT_EQ(p.edge_density, (3 * p.triangle + 2 * p.path + p.single_edge) / 3);
  }
}

TEST(Predict3Density2Sym, AgreesWithGeneralFormula) {
  const Graph p4 = named_graph("P4");
  const Graph s4 = named_graph("S4");
  const Graph w = wheel_graph(8);
  EXPECT_EQ(predict_3density_2sym(Triple::kTriangle, p4, p4), predict_3profile(p4, p4).triangle);
  EXPECT_EQ(predict_3density_2sym(Triple::kPath, p4, s4), brute_profile(inflate(p4, s4)).path);
  EXPECT_EQ(predict_3density_2sym(Triple::kEmpty, w, p4), brute_profile(inflate(w, p4)).empty);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = sample_2symmetric(trial % 2 == 0 ? 4 : 5, rng);
    const Graph h = sample_2symmetric(trial % 3 == 0 ? 8 : 9, rng);
    const InflationPrediction p = predict_3profile(g, h);
    EXPECT_EQ(predict_3density_2sym(Triple::kTriangle, g, h), p.triangle);
    EXPECT_EQ(predict_3density_2sym(Triple::kPath, g, h), p.path);
    EXPECT_EQ(predict_3density_2sym(Triple::kSingleEdge, g, h), p.single_edge);
    EXPECT_EQ(predict_3density_2sym(Triple::kEmpty, g, h), p.empty);
  }
  EXPECT_THROW(predict_3density_2sym(Triple::kTriangle, complete_graph(4), p4), std::invalid_argument);
}

TEST(TriangleExcess, Examples) {
  EXPECT_EQ(triangle_excess(8, 8), r(7, 186));
  EXPECT_EQ(triangle_excess(2, 2), r(1, 8));
  for (int g = 2; g < 60; ++g)
    for (int h = 2; h < 60; ++h) EXPECT_GT(triangle_excess(g, h), 0);
  EXPECT_THROW(triangle_excess(1, 8), std::invalid_argument);
  EXPECT_THROW(triangle_excess(8, 1), std::invalid_argument);
}

TEST(TriangleExcess, MatchesMeasuredDeviationForThreeSymmetricPairs) {
  const std::vector<Graph> three_sym = enumerate_small_orders(8).three_symmetric;
  ASSERT_FALSE(three_sym.empty());
  for (std::size_t i = 0; i < three_sym.size(); i += 9)
    for (std::size_t j = 0; j < three_sym.size(); j += 13) {
      const Graph out = inflate(three_sym[i], three_sym[j]);
      EXPECT_FALSE(is_k_symmetric(out, 3));
      EXPECT_EQ(brute_profile(out).triangle - r(1, 8), triangle_excess(8, 8));
    }
}

TEST(InflationClosure, TwoSymmetric) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int sizes[] = {4, 5, 8, 9};
    const Graph g = sample_2symmetric(sizes[trial % 4], rng);
    const Graph h = sample_2symmetric(sizes[(trial / 4) % 4], rng);
    if (g.order() * h.order() > kMaxOrder) continue;
    EXPECT_TRUE(is_k_symmetric(inflate(g, h), 2));
  }
}

TEST(InflationClosure, AlmostThreeSymmetric) {
  const Graph p4 = named_graph("P4");
  EXPECT_TRUE(is_almost_3_symmetric(inflate(p4, p4)));
  std::mt19937_64 rng(19);
  std::vector<Graph> almost;
  while (almost.size() < 12) {
    const Graph g = sample_2symmetric(8, rng);
    if (is_almost_3_symmetric(g)) almost.push_back(g);
  }
  almost.push_back(p4);
  almost.push_back(cycle_graph(5));
  for (const Graph& g : almost)
    for (const Graph& h : almost) {
      if (g.order() * h.order() > kMaxOrder) continue;
      EXPECT_TRUE(is_almost_3_symmetric(inflate(g, h)));
    }
}

TEST(InflationAsymptotics, DeviationDecaysLikeOneOverOrder) {
  const Graph h = wheel_graph(8);
  const Rational c = r(21, 64);
  Rational previous = 1;
  for (const Graph& g : {wheel_graph(8), testing::load_fixture("order16"), testing::load_fixture("order17")}) {
    ASSERT_TRUE(is_k_symmetric(g, 3));
    const InflationPrediction p = predict_3profile(g, h);
    const Rational deviation = abs(p.triangle - r(1, 8));
    EXPECT_EQ(deviation, triangle_excess(g.order(), h.order()));
    EXPECT_LT(deviation, previous);
    EXPECT_LE(deviation * g.order(), c);
    previous = deviation;
    for (const Rational& d : {p.path - r(3, 8), p.single_edge - r(3, 8), p.empty - r(1, 8)}) EXPECT_LE(abs(d) * g.order(), c);
  }
}

}  // namespace
}  // namespace ksym
