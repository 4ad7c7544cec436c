#include "ksym/inflation.hpp"

#include <stdexcept>
#include <string>

#include "ksym/symmetry.hpp"

namespace ksym {

namespace {

struct Densities {
  Rational edge;
  Rational nonedge;
  Rational triangle;
  Rational path;
  Rational single_edge;
  Rational empty;

  const Rational& of(Triple s) const {
    switch (s) {
      case Triple::kTriangle: return triangle;
      case Triple::kPath: return path;
      case Triple::kSingleEdge: return single_edge;
      case Triple::kEmpty: return empty;
    }
    throw std::logic_error("unknown triple class");
  }
};

Densities densities_of(const Graph& g) {
  const Profile2 p2 = profile2(g);
  const std::vector<Rational> p3 = profile3(g).densities();
  return {p2.edge_density(), p2.nonedge_density(), p3[0], p3[1], p3[2], p3[3]};
}

BigInt choose(std::int64_t n, std::int64_t k) { return BigInt(binomial(n, k)); }

void require_orders(const Graph& g, const Graph& h, std::int64_t minimum_total) {
  if (g.order() < 1 || h.order() < 1) throw std::invalid_argument("inflation factors need at least one vertex");
  const std::int64_t total = static_cast<std::int64_t>(g.order()) * h.order();
  if (total < minimum_total) {
    throw std::invalid_argument("inflation of total order " + std::to_string(total) + " has no " +
                                std::to_string(minimum_total) + "-vertex subsets");
  }
}

}  // namespace

Graph inflate(const Graph& g, const Graph& h) {
  const int gn = g.order();
  const int hn = h.order();
  if (static_cast<std::int64_t>(gn) * hn > kMaxOrder) {
    throw std::invalid_argument("inflation order " + std::to_string(static_cast<std::int64_t>(gn) * hn) +
                                " exceeds the supported 64");
  }
  Graph out(gn * hn);
  for (int i = 0; i < gn; ++i) {
    for (int a = 0; a < hn; ++a) {
      for (int b = a + 1; b < hn; ++b) {
        if (h.has_edge(a, b)) out.add_edge(i * hn + a, i * hn + b);
      }
      for (int j = i + 1; j < gn; ++j) {
        if (!g.has_edge(i, j)) continue;
        for (int b = 0; b < hn; ++b) out.add_edge(i * hn + a, j * hn + b);
      }
    }
  }
  return out;
}

Rational predict_edge_density(const Graph& g, const Graph& h) {
  require_orders(g, h, 2);
  const Densities dg = densities_of(g);
  const Densities dh = densities_of(h);
  const BigInt gs = g.order();
  const BigInt hs = h.order();
  const Rational num = Rational(gs * choose(h.order(), 2)) * dh.edge +
                       Rational(choose(g.order(), 2) * hs * hs) * dg.edge;
  return num / Rational(choose(g.order() * h.order(), 2));
}

InflationPrediction predict_3profile(const Graph& g, const Graph& h) {
  require_orders(g, h, 3);
  const Densities dg = densities_of(g);
  const Densities dh = densities_of(h);
  const BigInt gs = g.order();
  const BigInt hs = h.order();
  const Rational within = Rational(gs * choose(h.order(), 3));
  // ordered pair of blocks times a pair inside the first block times a vertex of the second
  const Rational split = Rational(2 * choose(g.order(), 2) * choose(h.order(), 2) * hs);
  const Rational across = Rational(choose(g.order(), 3) * hs * hs * hs);
  const Rational total = Rational(choose(g.order() * h.order(), 3));

  InflationPrediction p;
  p.edge_density = predict_edge_density(g, h);
  p.triangle = (within * dh.triangle + split * dg.edge * dh.edge + across * dg.triangle) / total;
  p.path = (within * dh.path + split * dg.edge * dh.nonedge + across * dg.path) / total;
  p.single_edge = (within * dh.single_edge + split * dg.nonedge * dh.edge + across * dg.single_edge) / total;
  p.empty = (within * dh.empty + split * dg.nonedge * dh.nonedge + across * dg.empty) / total;
  return p;
}

Rational predict_3density_2sym(Triple s, const Graph& g, const Graph& h) {
  require_orders(g, h, 3);
  if (!is_k_symmetric(g, 2) || !is_k_symmetric(h, 2)) {
    throw std::invalid_argument("predict_3density_2sym needs two 2-symmetric graphs");
  }
  const Densities dg = densities_of(g);
  const Densities dh = densities_of(h);
  const BigInt gs = g.order();
  const BigInt hs = h.order();
  const Rational num = Rational(gs * choose(h.order(), 3)) * dh.of(s) +
                       Rational(choose(g.order(), 2) * choose(h.order(), 2) * hs, BigInt(2)) +
                       Rational(choose(g.order(), 3) * hs * hs * hs) * dg.of(s);
  return num / Rational(choose(g.order() * h.order(), 3));
}

Rational triangle_excess(int g_order, int h_order) {
  if (g_order < 2 || h_order < 2) throw std::invalid_argument("triangle_excess needs both orders >= 2");
  const BigInt g = g_order;
  const BigInt h = h_order;
  const BigInt num = 3 * h * (h - 1) * (g - 1);
  const BigInt den = 8 * (g * h - 1) * (g * h - 2);
  return Rational(num, den);
}

InflationPrediction measured_profile(const Graph& g) {
  const Densities d = densities_of(g);
  return {d.edge, d.triangle, d.path, d.single_edge, d.empty};
}

}  // namespace ksym
