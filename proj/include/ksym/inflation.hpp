#pragma once

#include "ksym/density.hpp"
#include "ksym/graph.hpp"
#include "ksym/rational.hpp"

namespace ksym {

/// Lexicographic product G[H]: vertex (i, a) is i*|H| + a. Inside a block
/// the edges are those of H; blocks i != j are completely joined iff
/// {i, j} is an edge of G. |G| * |H| <= 64.
Graph inflate(const Graph& g, const Graph& h);

/// Predicted densities of the induced 3-vertex classes of inflate(G, H),
/// computed from the densities of G and H alone.
struct InflationPrediction {
  Rational edge_density;
  Rational triangle;
  Rational path;
  Rational single_edge;
  Rational empty;

  friend bool operator==(const InflationPrediction&, const InflationPrediction&) = default;
};

/// Which induced 3-vertex class a density refers to.
enum class Triple { kTriangle, kPath, kSingleEdge, kEmpty };

/// Edge density of inflate(G, H):
///   (|G| C(|H|,2) t(K2,H) + C(|G|,2) t(K2,G) |H|^2) / C(|G||H|, 2).
/// Requires |G|, |H| >= 1 and |G||H| >= 2. No order cap: nothing is built.
Rational predict_edge_density(const Graph& g, const Graph& h);

/// All five predictions; requires |G||H| >= 3. A triple inside one block
/// contributes through t(S,H), a triple spread over three blocks through
/// t(S,G), and a 2+1 split through the edge/non-edge densities of both.
InflationPrediction predict_3profile(const Graph& g, const Graph& h);

/// Single formula valid when G and H are both 2-symmetric:
///   (|G| t(S,H) C(|H|,3) + 1/2 C(|G|,2) C(|H|,2) |H| + C(|G|,3) t(S,G) |H|^3) / C(|G||H|,3).
/// Throws std::invalid_argument if either input is not 2-symmetric.
Rational predict_3density_2sym(Triple s, const Graph& g, const Graph& h);

/// Excess of t(K3) over 1/8 in the inflation of two 3-symmetric graphs:
///   (1/8) 3|H|(|H|-1)(|G|-1) / ((|G||H|-1)(|G||H|-2)).
/// Both orders must be >= 2.
Rational triangle_excess(int g_order, int h_order);

/// Densities measured on an already constructed graph, in the same shape
/// as a prediction.
InflationPrediction measured_profile(const Graph& g);

}  // namespace ksym
