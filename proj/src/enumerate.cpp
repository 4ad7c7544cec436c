#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ksym/canonical.hpp"
#include "ksym/density.hpp"
#include "ksym/search.hpp"
#include "ksym/symmetry.hpp"

namespace ksym {

namespace {

Graph with_new_vertex(const Graph& parent, Row neighbourhood) {
  const int m = parent.order();
  Graph child(m + 1);
  for (int u = 0; u < m; ++u)
    for (Row r = parent.row(u) & ~low_bits(u + 1); r != 0; r &= r - 1) child.add_edge(u, std::countr_zero(r));
  for (Row r = neighbourhood; r != 0; r &= r - 1) child.add_edge(std::countr_zero(r), m);
  return child;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::vector<Graph> enumerate_classes(int n, const EnumerationOptions& options) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration supports order 0..8, got " + std::to_string(n));
  }
  std::vector<CanonicalCode> level{canonical_code(Graph(0))};
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  for (int m = 0; m < n; ++m) {
    std::vector<Graph> parents;
    parents.reserve(level.size());
    for (const CanonicalCode& c : level) parents.push_back(c.to_graph());
    std::vector<Row> subsets(std::size_t{1} << m);
    std::iota(subsets.begin(), subsets.end(), Row{0});
    if (options.shuffle_seed) {
      std::shuffle(parents.begin(), parents.end(), rng);
      for (Graph& p : parents) {
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        p = permuted(p, perm);
      }
    }

    std::unordered_set<CanonicalCode> next;
    for (const Graph& parent : parents) {
      if (options.shuffle_seed) std::shuffle(subsets.begin(), subsets.end(), rng);
      for (Row s : subsets) next.insert(canonical_code(with_new_vertex(parent, s)));
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const CanonicalCode& c : level) out.push_back(c.to_graph());
  return out;
}

EnumerationResult enumerate_small_orders(int n, const EnumerationOptions& options) {
  EnumerationResult r;
  r.order = n;
  const std::uint64_t n_factorial = factorial(n);
  for (const Graph& g : enumerate_classes(n, options)) {
    ++r.total_classes;
    const bool two = is_k_symmetric(g, 2);
    const bool three = is_k_symmetric(g, 3);
    const bool self_comp = is_self_complementary(g);
    const std::uint64_t labelled = n_factorial / automorphism_count(g);
    if (two) {
      ++r.two_symmetric_classes;
      r.labelled_two_symmetric += labelled;
    }
    if (three) {
      ++r.three_symmetric_classes;
      r.labelled_three_symmetric += labelled;
      r.three_symmetric.push_back(g);
    }
    if (self_comp) ++r.self_complementary_classes;
    if (self_comp && three) ++r.self_complementary_three_symmetric;
  }
  return r;
}

}  // namespace ksym
