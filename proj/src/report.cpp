#include "ksym/report.hpp"

#include <ctime>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ksym/digest.hpp"
#include "ksym/graph.hpp"

#ifndef KSYM_VERSION
#define KSYM_VERSION "unknown"
#endif

namespace ksym::report {

namespace {

Json histogram_json(const std::map<int, std::uint64_t>& h) {
  Json out = Json::object();
  for (const auto& [value, count] : h) out[std::to_string(value)] = count;
  return out;
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer or an integer string");
}

}  // namespace

const char* version() { return KSYM_VERSION; }

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json to_json(const Rational& r) {
  return Json{{"num", big_to_json(numerator_of(r))}, {"den", big_to_json(denominator_of(r))}, {"decimal", to_decimal(r, 12)}};
}

Rational rational_from_json(const Json& j) {
  const BigInt den = big_from_json(j.at("den"));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(big_from_json(j.at("num")), den);
}

Json to_json(const SymmetryReport& r) {
  Json entries = Json::array();
  for (const SymmetryEntry& e : r.entries) {
    entries.push_back({{"class", e.name},
                       {"code", e.cls.to_string()},
                       {"count", e.count},
                       {"measured", to_json(e.measured)},
                       {"expected", to_json(e.expected)},
                       {"deviation", to_json(e.deviation)}});
  }
  return Json{{"k", r.k}, {"order", r.order}, {"trivial", r.trivial}, {"is_symmetric", r.is_symmetric}, {"entries", entries}};
}

Json to_json(const InflationPrediction& p) {
  return Json{{"edge_density", to_json(p.edge_density)},
              {"triangle", to_json(p.triangle)},
              {"path", to_json(p.path)},
              {"single_edge", to_json(p.single_edge)},
              {"empty", to_json(p.empty)}};
}

Json to_json(const StatsReport& s) {
  return Json{{"sample_count", s.sample_count},
              {"max_clique", histogram_json(s.max_clique_histogram)},
              {"max_degree", histogram_json(s.max_degree_histogram)}};
}

Json to_json(const SearchOutcome& o, const std::optional<StatsReport>& stats) {
  const Rational rate = o.hit_rate();
  Json trials = Json::array();
  for (const FoundGraph& f : o.found) trials.push_back(f.trial);
  Json j{{"order", o.config.order},
         {"trials", o.config.trials},
         {"seed", o.config.seed},
         {"hits", o.hits},
         {"hit_rate_num", big_to_json(numerator_of(rate))},
         {"hit_rate_den", big_to_json(denominator_of(rate))},
         {"hit_rate_percent", to_decimal(rate * 100, 4)},
         {"collect_limit", o.config.collect_limit},
         {"found_trials", trials}};
  if (stats) j["histograms"] = to_json(*stats);
  return j;
}

Json to_json(const EnumerationResult& e) {
  Json reps = Json::array();
  for (const Graph& g : e.three_symmetric) reps.push_back(emit_graph6(g));
  Json j{{"order", e.order},
         {"total_classes", e.total_classes},
         {"two_symmetric_classes", e.two_symmetric_classes},
         {"three_symmetric_classes", e.three_symmetric_classes},
         {"self_complementary_classes", e.self_complementary_classes},
         {"self_complementary_three_symmetric", e.self_complementary_three_symmetric},
         {"labelled_two_symmetric", big_to_json(e.labelled_two_symmetric)},
         {"labelled_three_symmetric", big_to_json(e.labelled_three_symmetric)}};
  if (e.two_symmetric_classes > 0) {
    j["ratio_unlabelled"] = to_json(Rational(BigInt(e.three_symmetric_classes), BigInt(e.two_symmetric_classes)));
    j["ratio_labelled"] = to_json(Rational(e.labelled_three_symmetric, e.labelled_two_symmetric));
  }
  j["three_symmetric_graph6"] = reps;
  return j;
}

Json to_json(const std::vector<ListedOrder>& listing) {
  Json out = Json::array();
  for (const ListedOrder& l : listing) out.push_back({{"n", l.n}, {"trivial", l.trivial}});
  return out;
}

std::string histogram_csv(const StatsReport& s) {
  std::ostringstream out;
  out << "statistic,value,frequency\n";
  for (const auto& [v, c] : s.max_clique_histogram) out << "max_clique," << v << ',' << c << '\n';
  for (const auto& [v, c] : s.max_degree_histogram) out << "max_degree," << v << ',' << c << '\n';
  return out.str();
}

std::string scientific(const BigInt& v, int significant) {
  if (significant < 1) throw std::invalid_argument("need at least one significant digit");
  const bool negative = v < 0;
  std::string digits = BigInt(abs(v)).str();
  int exponent = static_cast<int>(digits.size()) - 1;
  if (static_cast<int>(digits.size()) > significant) {
    const bool up = digits[static_cast<std::size_t>(significant)] >= '5';
    digits.resize(static_cast<std::size_t>(significant));
    if (up) {
      int i = significant - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') digits[static_cast<std::size_t>(i--)] = '0';
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        digits.pop_back();
        ++exponent;
      } else {
        ++digits[static_cast<std::size_t>(i)];
      }
    }
  } else {
    digits.append(static_cast<std::size_t>(significant) - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  out += digits[0];
  if (significant > 1) out += "." + digits.substr(1);
  return out + "e" + std::to_string(v == 0 ? 0 : exponent);
}

Json to_json(const RunManifest& m) {
  Json j{{"command", m.command},
         {"argv", m.argv},
         {"params", m.params},
         {"seed", m.seed ? Json(*m.seed) : Json(nullptr)},
         {"version", m.version},
         {"input_digests", m.input_digests},
         {"output_digests", m.output_digests},
         {"result_digest", m.result_digest},
         {"started", m.started},
         {"finished", m.finished}};
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.params = j.value("params", Json::object());
  if (j.contains("seed") && !j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
  m.version = j.value("version", "");
  m.input_digests = j.value("input_digests", std::map<std::string, std::string>{});
  m.output_digests = j.value("output_digests", std::map<std::string, std::string>{});
  m.result_digest = j.value("result_digest", "");
  m.started = j.value("started", "");
  m.finished = j.value("finished", "");
  return m;
}

std::string result_digest(const Json& result) { return sha256_hex(result.dump()); }

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count() % 1000;
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

Json document(const RunManifest& manifest, const Json& result) {
  return Json{{"schema_version", kSchemaVersion}, {"manifest", to_json(manifest)}, {"result", result}};
}

}  // namespace ksym::report
