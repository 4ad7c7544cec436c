#include "ksym/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ksym {

namespace {

using u128 = unsigned __int128;

CanonicalCode pack(int n, u128 value) {
  CanonicalCode c;
  c.n = n;
  c.bits[0] = static_cast<std::uint64_t>(value >> 64);
  c.bits[1] = static_cast<std::uint64_t>(value);
  return c;
}

u128 unpack(const CanonicalCode& c) { return (static_cast<u128>(c.bits[0]) << 64) | c.bits[1]; }

void require_canonical_order(int n) {
  if (n > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical labelling supports order <= " + std::to_string(kMaxCanonicalOrder) +
                                ", got " + std::to_string(n));
  }
}

// Depth-first search for the relabelling with the smallest code. Position p
// contributes a p-bit chunk (adjacency of the vertex at p to the vertices at
// positions 0..p-1), so codes compare chunk by chunk.
class MinimalRelabeling {
 public:
  explicit MinimalRelabeling(const Graph& g) : g_(g), n_(g.order()) {
    const std::vector<int> colour = refined_colours(g);
    colour_ = colour;
    std::vector<int> sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    position_colour_ = sorted;
    perm_.assign(static_cast<std::size_t>(n_), -1);
    chunk_.assign(static_cast<std::size_t>(n_), 0);
    best_.assign(static_cast<std::size_t>(n_), 0);
  }

  u128 run() {
    search(0, false);
    u128 value = 0;
    for (int p = 1; p < n_; ++p) value = (value << p) | best_[static_cast<std::size_t>(p)];
    return value;
  }

 private:
  std::uint64_t chunk_for(int p, int v) const {
    std::uint64_t c = 0;
    for (int q = 0; q < p; ++q) c = (c << 1) | (g_.has_edge(perm_[static_cast<std::size_t>(q)], v) ? 1U : 0U);
    return c;
  }

  bool twins(int u, int v) const {
    const Row mu = g_.row(u) & ~(Row{1} << v);
    const Row mv = g_.row(v) & ~(Row{1} << u);
    return mu == mv;
  }

  void search(int p, bool less) {
    if (p == n_) {
      if (less || !have_best_) {
        best_ = chunk_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    const int want = position_colour_[static_cast<std::size_t>(p)];
    std::uint64_t min_chunk = ~std::uint64_t{0};
    int cand[kMaxCanonicalOrder];
    std::uint64_t cand_chunk[kMaxCanonicalOrder];
    int count = 0;
    for (int v = 0; v < n_; ++v) {
      if (((used_ >> v) & 1U) || colour_[static_cast<std::size_t>(v)] != want) continue;
      const std::uint64_t c = chunk_for(p, v);
      cand[count] = v;
      cand_chunk[count] = c;
      ++count;
      min_chunk = std::min(min_chunk, c);
    }

    if (have_best_ && !less) {
      const std::uint64_t b = best_[static_cast<std::size_t>(p)];
      if (min_chunk > b) return;
      if (min_chunk < b) less = true;
    }

    int kept[kMaxCanonicalOrder];
    int kept_count = 0;
    for (int i = 0; i < count; ++i) {
      if (cand_chunk[i] != min_chunk) continue;
      bool duplicate = false;
      for (int j = 0; j < kept_count && !duplicate; ++j) duplicate = twins(kept[j], cand[i]);
      if (!duplicate) kept[kept_count++] = cand[i];
    }

    for (int i = 0; i < kept_count; ++i) {
      const int v = kept[i];
      perm_[static_cast<std::size_t>(p)] = v;
      chunk_[static_cast<std::size_t>(p)] = min_chunk;
      used_ |= Row{1} << v;
      const std::uint64_t before = version_;
      search(p + 1, less || !have_best_);
      used_ &= ~(Row{1} << v);
      // A new best passed through this node; siblings now tie with it here.
      if (version_ != before) less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> position_colour_;
  std::vector<int> perm_;
  std::vector<std::uint64_t> chunk_;
  std::vector<std::uint64_t> best_;
  Row used_ = 0;
  bool have_best_ = false;
  std::uint64_t version_ = 0;
};

}  // namespace

Graph CanonicalCode::to_graph() const {
  Graph g(n);
  const u128 value = unpack(*this);
  int t = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --t;
      if ((value >> t) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::string CanonicalCode::to_string() const { return emit_graph6(to_graph()); }

CanonicalCode labelled_code(const Graph& g) {
  require_canonical_order(g.order());
  u128 value = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) value = (value << 1) | (g.has_edge(i, j) ? 1U : 0U);
  return pack(g.order(), value);
}

std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  int distinct = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (Row r = g.row(v); r != 0; r &= r - 1) nb.push_back(colour[static_cast<std::size_t>(std::countr_zero(r))]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
    if (next == distinct) break;
    distinct = next;
  }
  return colour;
}

CanonicalCode canonical_code(const Graph& g) {
  require_canonical_order(g.order());
  if (g.order() <= 1) return pack(g.order(), 0);
  MinimalRelabeling search(g);
  return pack(g.order(), search.run());
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

namespace {

void count_automorphisms(const Graph& g, const std::vector<int>& colour, int i, std::vector<int>& image, Row used,
                         std::uint64_t& total) {
  const int n = g.order();
  if (i == n) {
    ++total;
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (((used >> w) & 1U) || colour[static_cast<std::size_t>(w)] != colour[static_cast<std::size_t>(i)]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = g.has_edge(i, j) == g.has_edge(w, image[static_cast<std::size_t>(j)]);
    if (!ok) continue;
    image[static_cast<std::size_t>(i)] = w;
    count_automorphisms(g, colour, i + 1, image, used | (Row{1} << w), total);
  }
}

}  // namespace

std::uint64_t automorphism_count(const Graph& g) {
  if (g.order() > kMaxAutomorphismOrder) {
    throw std::invalid_argument("automorphism_count supports order <= " + std::to_string(kMaxAutomorphismOrder) +
                                ", got " + std::to_string(g.order()));
  }
  const std::vector<int> colour = refined_colours(g);
  std::vector<int> image(static_cast<std::size_t>(g.order()), -1);
  std::uint64_t total = 0;
  count_automorphisms(g, colour, 0, image, 0, total);
  return total;
}

}  // namespace ksym
