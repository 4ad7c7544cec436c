#pragma once

// JSON and CSV views of the library's results, plus the run manifest that
// accompanies every file the CLI writes.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ksym/admissibility.hpp"
#include "ksym/inflation.hpp"
#include "ksym/rational.hpp"
#include "ksym/search.hpp"
#include "ksym/symmetry.hpp"

namespace ksym::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Version string baked in at build time.
const char* version();

/// {"num": p, "den": q, "decimal": "..."}; integers fall back to strings
/// when they do not fit in 64 bits.
Json to_json(const Rational& r);
Json big_to_json(const BigInt& v);
Rational rational_from_json(const Json& j);

Json to_json(const SymmetryReport& r);
Json to_json(const InflationPrediction& p);
Json to_json(const StatsReport& s);
/// Keys: order, trials, seed, hits, hit_rate_num, hit_rate_den, plus
/// histograms when stats are supplied.
Json to_json(const SearchOutcome& o, const std::optional<StatsReport>& stats = std::nullopt);
Json to_json(const EnumerationResult& e);
Json to_json(const std::vector<ListedOrder>& listing);

/// Rows "statistic,value,frequency" for max_clique and max_degree.
std::string histogram_csv(const StatsReport& s);

/// d.ddd...e<exp> with `significant` digits, rounded half away from zero.
std::string scientific(const BigInt& v, int significant);

struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  Json params = Json::object();
  std::optional<std::uint64_t> seed;
  std::string version;
  std::map<std::string, std::string> input_digests;
  std::map<std::string, std::string> output_digests;
  /// SHA-256 of the result object as serialised by result_digest().
  std::string result_digest;
  std::string started;
  std::string finished;
};

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

/// Digest of the compact dump of a result object; stable for equal JSON.
std::string result_digest(const Json& result);

/// ISO 8601 UTC with millisecond precision.
std::string utc_timestamp(std::chrono::system_clock::time_point t);

/// {"schema_version", "manifest", "result"}.
Json document(const RunManifest& manifest, const Json& result);

}  // namespace ksym::report
