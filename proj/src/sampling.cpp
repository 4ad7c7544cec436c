#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "ksym/density.hpp"
#include "ksym/search.hpp"
#include "ksym/symmetry.hpp"

namespace ksym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct ShardResult {
  std::uint64_t hits = 0;
  std::vector<FoundGraph> found;
};

ShardResult run_shard(const SampleConfig& config, std::uint64_t begin, std::uint64_t end) {
  ShardResult r;
  for (std::uint64_t t = begin; t < end; ++t) {
    std::mt19937_64 rng = trial_engine(config.seed, t);
    Graph g = sample_2symmetric(config.order, rng);
    if (!is_3_symmetric(profile3(g), g.order())) continue;
    ++r.hits;
    if (r.found.size() < config.collect_limit) r.found.push_back({t, std::move(g)});
  }
  return r;
}

}  // namespace

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(trial + 0x632BE59BD9B4E019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32), static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

Graph sample_2symmetric(int n, std::mt19937_64& rng) {
  const std::uint64_t pairs = binomial(n, 2);
  if (pairs % 2 != 0) {
    throw std::invalid_argument("C(" + std::to_string(n) + ",2) = " + std::to_string(pairs) +
                                " is odd; no graph has exactly half the edges");
  }
  std::vector<std::uint16_t> slot(pairs);
  for (std::uint64_t s = 0; s < pairs; ++s) slot[s] = static_cast<std::uint16_t>(s);
  const std::uint64_t half = pairs / 2;
  for (std::uint64_t t = 0; t < half; ++t) {
    std::uniform_int_distribution<std::uint64_t> pick(t, pairs - 1);
    std::swap(slot[t], slot[pick(rng)]);
  }
  // slot s enumerates pairs as (0,1), (0,2), ..., (0,n-1), (1,2), ...
  std::vector<std::pair<int, int>> pair_of;
  pair_of.reserve(pairs);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_of.emplace_back(i, j);
  Graph g(n);
  for (std::uint64_t t = 0; t < half; ++t) {
    const auto [i, j] = pair_of[slot[t]];
    g.add_edge(i, j);
  }
  return g;
}

void validate(const SampleConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.order < 1 || config.order > kMaxOrder) {
    throw std::invalid_argument("order " + std::to_string(config.order) + " outside 1..64");
  }
  if (binomial(config.order, 2) % 2 != 0) {
    throw std::invalid_argument("order " + std::to_string(config.order) + " is not 2-admissible (C(n,2) odd)");
  }
}

Rational SearchOutcome::hit_rate() const {
  return Rational(BigInt(hits), BigInt(config.trials));
}

SearchOutcome run_search(const SampleConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  unsigned shards = config.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : config.threads;
  shards = static_cast<unsigned>(std::min<std::uint64_t>(shards, config.trials));

  std::vector<ShardResult> results(shards);
  const std::uint64_t per = config.trials / shards;
  const std::uint64_t extra = config.trials % shards;
  auto bounds = [&](unsigned s) {
    const std::uint64_t begin = s * per + std::min<std::uint64_t>(s, extra);
    return std::pair{begin, begin + per + (s < extra ? 1 : 0)};
  };
  if (shards == 1) {
    results[0] = run_shard(config, 0, config.trials);
  } else {
    std::vector<std::thread> workers;
    for (unsigned s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        const auto [b, e] = bounds(s);
        results[s] = run_shard(config, b, e);
      });
    }
    for (auto& w : workers) w.join();
  }

  SearchOutcome out;
  out.config = config;
  out.shards = shards;
  for (auto& r : results) {
    out.hits += r.hits;
    for (auto& f : r.found) out.found.push_back(std::move(f));
  }
  std::sort(out.found.begin(), out.found.end(), [](const FoundGraph& a, const FoundGraph& b) { return a.trial < b.trial; });
  if (out.found.size() > config.collect_limit) out.found.resize(config.collect_limit);
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

BigInt estimate_population(const Rational& rate, const BigInt& population_2sym) {
  return round_nearest(rate * Rational(population_2sym));
}

BigInt estimate_population(const SearchOutcome& outcome, const BigInt& population_2sym) {
  if (outcome.config.trials == 0) throw std::invalid_argument("cannot estimate from zero trials");
  return estimate_population(outcome.hit_rate(), population_2sym);
}

}  // namespace ksym
