// Maximum clique by branch and bound. Candidates are bitsets; each node
// greedily colours its candidate set and expands vertices in decreasing
// colour order, pruning when |clique| + colour cannot beat the incumbent.

#include <array>

#include "ksym/search.hpp"

namespace ksym {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int run() {
    expand(low_bits(g_.order()), 0);
    return best_;
  }

 private:
  void expand(Row candidates, int size) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    std::array<int, kMaxOrder> order{};
    std::array<int, kMaxOrder> colour{};
    int count = 0;
    int c = 0;
    for (Row uncoloured = candidates; uncoloured != 0;) {
      ++c;
      for (Row q = uncoloured; q != 0;) {
        const int v = std::countr_zero(q);
        q &= ~g_.row(v) & ~(Row{1} << v);
        uncoloured &= ~(Row{1} << v);
        order[static_cast<std::size_t>(count)] = v;
        colour[static_cast<std::size_t>(count)] = c;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + colour[static_cast<std::size_t>(i)] <= best_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(candidates & g_.row(v), size + 1);
      candidates &= ~(Row{1} << v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

int max_clique(const Graph& g) { return CliqueSearch(g).run(); }

}  // namespace ksym
