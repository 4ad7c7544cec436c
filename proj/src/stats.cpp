#include <stdexcept>

#include "ksym/search.hpp"

namespace ksym {

StatsReport batch_stats(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw std::invalid_argument("batch_stats needs at least one graph");
  StatsReport report;
  const int order = graphs.front().order();
  for (const Graph& g : graphs) {
    if (g.order() != order) throw std::invalid_argument("batch_stats needs graphs of a single order");
    ++report.max_clique_histogram[max_clique(g)];
    ++report.max_degree_histogram[max_degree(g)];
    ++report.sample_count;
  }
  return report;
}

}  // namespace ksym
