#include "ksym/density.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

namespace ksym {

namespace {

void require_density_order(int k) {
  if (k < 0 || k > kMaxDensityOrder) {
    throw std::invalid_argument("subgraph order " + std::to_string(k) + " outside the supported 0..5");
  }
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Graph from_mask(int k, std::uint32_t mask) {
  Graph g(k);
  int t = k * (k - 1) / 2;
  for (int j = 1; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      --t;
      if ((mask >> t) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

Graph paw() {
  Graph g = named_graph("K3+K1");
  g.add_edge(2, 3);
  return g;
}

std::vector<std::pair<std::string, Graph>> known_names(int k) {
  switch (k) {
    case 0: return {{"K0", Graph(0)}};
    case 1: return {{"K1", Graph(1)}};
    case 2: return {{"2K1", named_graph("E2")}, {"K2", named_graph("K2")}};
    case 3:
      return {{"3K1", named_graph("E3")},
              {"K2+K1", named_graph("K2+K1")},
              {"P3", named_graph("P3")},
              {"K3", named_graph("K3")}};
    case 4:
      return {{"4K1", named_graph("E4")},          {"K2+2K1", named_graph("K2+E2")},
              {"2K2", named_graph("K2+K2")},       {"P3+K1", named_graph("P3+K1")},
              {"K3+K1", named_graph("K3+K1")},     {"P4", named_graph("P4")},
              {"K1,3", named_graph("S4")},         {"C4", named_graph("C4")},
              {"paw", paw()},                      {"diamond", complement(named_graph("K2+E2"))},
              {"K4", named_graph("K4")}};
    default: return {};
  }
}

}  // namespace

Rational Profile2::edge_density() const {
  const std::uint64_t total = edges + nonedges;
  return total == 0 ? Rational(0) : Rational(BigInt(edges), BigInt(total));
}

Rational Profile2::nonedge_density() const {
  const std::uint64_t total = edges + nonedges;
  return total == 0 ? Rational(0) : Rational(BigInt(nonedges), BigInt(total));
}

std::vector<Rational> Profile3::densities() const {
  const std::uint64_t t = total();
  std::vector<Rational> d;
  for (std::uint64_t c : {triangles, paths, single_edge, empty}) {
    d.push_back(t == 0 ? Rational(0) : Rational(BigInt(c), BigInt(t)));
  }
  return d;
}

Profile2 profile2(const Graph& g) {
  const auto e = static_cast<std::uint64_t>(g.edge_count());
  return {e, binomial(g.order(), 2) - e};
}

Profile3 profile3(const Graph& g) {
  const int n = g.order();
  std::uint64_t triangles = 0;
  std::uint64_t wedges = 0;
  for (int u = 0; u < n; ++u) {
    const auto d = static_cast<std::uint64_t>(g.degree(u));
    wedges += d * (d - (d > 0 ? 1 : 0)) / 2;
    // neighbours above u; each triangle u < v < w is seen once
    Row above = g.row(u) & ~low_bits(u + 1);
    for (Row r = above; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      triangles += static_cast<std::uint64_t>(std::popcount(g.row(v) & above & ~low_bits(v + 1)));
    }
  }
  Profile3 p;
  p.triangles = triangles;
  p.paths = wedges - 3 * triangles;
  const std::uint64_t edge_triples =
      n >= 2 ? static_cast<std::uint64_t>(n - 2) * static_cast<std::uint64_t>(g.edge_count()) : 0;
  p.single_edge = edge_triples - 3 * p.triangles - 2 * p.paths;
  p.empty = binomial(n, 3) - p.triangles - p.paths - p.single_edge;
  return p;
}

ClassTable::ClassTable(int k) : k_(k) {
  const int pairs = k * (k - 1) / 2;
  const std::uint32_t labelled = std::uint32_t{1} << pairs;
  std::map<CanonicalCode, std::uint64_t> seen;
  std::vector<CanonicalCode> code_of_mask(labelled);
  for (std::uint32_t mask = 0; mask < labelled; ++mask) {
    const CanonicalCode c = canonical_code(from_mask(k, mask));
    code_of_mask[mask] = c;
    ++seen[c];
  }
  const auto names = known_names(k);
  for (const auto& [code, count] : seen) {
    GraphClass cls;
    cls.code = code;
    cls.representative = code.to_graph();
    cls.automorphisms = automorphism_count(cls.representative);
    cls.labelings = factorial(k) / cls.automorphisms;
    if (cls.labelings != count) throw std::logic_error("orbit-stabiliser check failed in class table");
    cls.name = "G" + std::to_string(k) + "#" + std::to_string(classes_.size());
    for (const auto& [name, g] : names) {
      if (canonical_code(g) == code) cls.name = name;
    }
    classes_.push_back(std::move(cls));
  }
  class_of_mask_.resize(labelled);
  for (std::uint32_t mask = 0; mask < labelled; ++mask) {
    const auto it = std::lower_bound(classes_.begin(), classes_.end(), code_of_mask[mask],
                                     [](const GraphClass& c, const CanonicalCode& code) { return c.code < code; });
    class_of_mask_[mask] = static_cast<int>(it - classes_.begin());
  }
}

const ClassTable& ClassTable::of_order(int k) {
  require_density_order(k);
  static const std::array<ClassTable, kMaxDensityOrder + 1> tables = {ClassTable(0), ClassTable(1), ClassTable(2),
                                                                      ClassTable(3), ClassTable(4), ClassTable(5)};
  return tables[static_cast<std::size_t>(k)];
}

int ClassTable::class_of(const Graph& h) const {
  if (h.order() != k_) throw std::invalid_argument("graph order does not match class table order");
  return class_of_mask(static_cast<std::uint32_t>(labelled_code(h).bits[1]));
}

namespace {

void enumerate_subsets(const Graph& g, int k, int depth, int start, std::array<int, kMaxDensityOrder>& chosen,
                       std::uint32_t mask, const ClassTable& table, std::vector<std::uint64_t>& counts) {
  if (depth == k) {
    ++counts[static_cast<std::size_t>(table.class_of_mask(mask))];
    return;
  }
  for (int v = start; v <= g.order() - (k - depth); ++v) {
    std::uint32_t chunk = 0;
    for (int q = 0; q < depth; ++q) chunk = (chunk << 1) | (g.has_edge(chosen[static_cast<std::size_t>(q)], v) ? 1U : 0U);
    chosen[static_cast<std::size_t>(depth)] = v;
    enumerate_subsets(g, k, depth + 1, v + 1, chosen, (mask << depth) | chunk, table, counts);
  }
}

}  // namespace

std::vector<std::uint64_t> class_counts(const Graph& g, int k) {
  const ClassTable& table = ClassTable::of_order(k);
  std::vector<std::uint64_t> counts(table.size(), 0);
  if (g.order() < k) return counts;
  if (k == 2) {
    const Profile2 p = profile2(g);
    counts[static_cast<std::size_t>(table.class_of(named_graph("K2")))] = p.edges;
    counts[static_cast<std::size_t>(table.class_of(named_graph("E2")))] = p.nonedges;
    return counts;
  }
  if (k == 3) {
    const Profile3 p = profile3(g);
    counts[static_cast<std::size_t>(table.class_of(named_graph("K3")))] = p.triangles;
    counts[static_cast<std::size_t>(table.class_of(named_graph("P3")))] = p.paths;
    counts[static_cast<std::size_t>(table.class_of(named_graph("K2+K1")))] = p.single_edge;
    counts[static_cast<std::size_t>(table.class_of(named_graph("E3")))] = p.empty;
    return counts;
  }
  std::array<int, kMaxDensityOrder> chosen{};
  enumerate_subsets(g, k, 0, 0, chosen, 0, table, counts);
  return counts;
}

Rational density(const Graph& h, const Graph& g) {
  const int k = h.order();
  require_density_order(k);
  if (g.order() < k) return Rational(0);
  const ClassTable& table = ClassTable::of_order(k);
  const std::vector<std::uint64_t> counts = class_counts(g, k);
  return Rational(BigInt(counts[static_cast<std::size_t>(table.class_of(h))]), BigInt(binomial(g.order(), k)));
}

Rational expected_density(const Graph& h) {
  const int k = h.order();
  require_density_order(k);
  const ClassTable& table = ClassTable::of_order(k);
  const GraphClass& cls = table.classes()[static_cast<std::size_t>(table.class_of(h))];
  BigInt space = 1;
  space <<= k * (k - 1) / 2;
  return Rational(BigInt(cls.labelings), space);
}

}  // namespace ksym
