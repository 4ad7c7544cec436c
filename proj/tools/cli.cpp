#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <unistd.h>

#include "ksym/admissibility.hpp"
#include "ksym/digest.hpp"
#include "ksym/inflation.hpp"
#include "ksym/report.hpp"
#include "ksym/search.hpp"
#include "ksym/symmetry.hpp"

namespace ksym::cli {

namespace {

namespace fs = std::filesystem;
using report::Json;

// Output flags whose values are file paths written by the run; replay
// redirects them into a scratch directory.
const std::vector<std::string> kOutputFlags{"--json", "--out", "--csv", "--dump"};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Run {
 public:
  Run(std::string command, std::vector<std::string> argv, Streams io)
      : io_(io), started_(std::chrono::system_clock::now()) {
    manifest_.command = std::move(command);
    manifest_.argv = std::move(argv);
    manifest_.version = report::version();
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return io_.err; }
  report::RunManifest& manifest() { return manifest_; }

  std::string paint(bool ok, const std::string& text) const {
    if (!io_.color) return text;
    return (ok ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
  }

  /// A file path, a "g6:" literal, or a graph name such as W8 or K3+K1.
  std::vector<Graph> load(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return {parse_graph6(spec.substr(3))};
    if (fs::exists(spec)) {
      const std::string text = read_text(spec);
      manifest_.input_digests[spec] = sha256_hex(text);
      std::vector<Graph> graphs = read_graphs(text);
      if (graphs.empty()) throw ParseError("no graphs in " + spec);
      return graphs;
    }
    try {
      return {named_graph(spec)};
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("'" + spec + "' is neither a readable file nor a known graph name");
    }
  }

  Graph load_one(const std::string& spec) {
    std::vector<Graph> graphs = load(spec);
    if (graphs.size() != 1) throw std::invalid_argument(spec + " holds " + std::to_string(graphs.size()) + " graphs, expected one");
    return graphs.front();
  }

  void write(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
    if (!f.flush()) throw std::runtime_error("error while writing " + path);
    manifest_.output_digests[path] = sha256_hex(content);
    written_.push_back(path);
  }

  /// Emits the manifest (inside the JSON document when --json was given,
  /// else beside the first written file) and copies buffered stdout out.
  void finish(const std::string& json_path, const Json& result) {
    const std::string stdout_text = out_.str();
    manifest_.output_digests["<stdout>"] = sha256_hex(stdout_text);
    manifest_.result_digest = report::result_digest(result);
    manifest_.finished = report::utc_timestamp(std::chrono::system_clock::now());
    manifest_.started = report::utc_timestamp(started_);
    if (!json_path.empty()) {
      const std::string doc = report::document(manifest_, result).dump(2) + "\n";
      std::ofstream f(json_path, std::ios::binary);
      if (!f || !(f << doc)) throw std::runtime_error("cannot write " + json_path);
    } else if (!written_.empty()) {
      const std::string doc = report::document(manifest_, result).dump(2) + "\n";
      std::ofstream f(written_.front() + ".manifest.json", std::ios::binary);
      if (!f || !(f << doc)) throw std::runtime_error("cannot write manifest for " + written_.front());
    }
    io_.out << stdout_text << std::flush;
  }

 private:
  Streams io_;
  std::ostringstream out_;
  report::RunManifest manifest_;
  std::chrono::system_clock::time_point started_;
  std::vector<std::string> written_;
};

// "p/q", "0.0451", "4.51%" or an integer, parsed exactly.
Rational parse_rational(const std::string& text) {
  std::string s = text;
  Rational scale = 1;
  if (!s.empty() && s.back() == '%') {
    s.pop_back();
    scale = Rational(1, 100);
  }
  if (s.empty()) throw std::invalid_argument("empty number");
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const BigInt den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in " + text);
      return Rational(BigInt(s.substr(0, slash)), den) * scale;
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s)) * scale;
    const std::string frac = s.substr(dot + 1);
    const std::string whole = s.substr(0, dot);
    if (frac.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("bad digits");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool negative = !whole.empty() && whole[0] == '-';
    const BigInt w(whole.empty() || whole == "-" ? "0" : whole);
    const BigInt f(frac.empty() ? "0" : frac);
    Rational r = Rational(abs(w)) + Rational(f, den);
    return (negative ? -r : r) * scale;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + text + "'");
  }
}

std::string pad(const std::string& s, std::size_t width) { return s.size() >= width ? s : s + std::string(width - s.size(), ' '); }

void print_symmetry_table(std::ostream& out, const SymmetryReport& r) {
  out << pad("class", 10) << pad("count", 10) << pad("measured", 14) << pad("expected", 14) << "deviation\n";
  for (const SymmetryEntry& e : r.entries) {
    out << pad(e.name, 10) << pad(std::to_string(e.count), 10) << pad(to_string(e.measured), 14)
        << pad(to_string(e.expected), 14) << (e.deviation > 0 ? "+" : "") << to_string(e.deviation) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::vector<std::string> graphs;
  int k = 3;
  std::string json;
  bool quiet = false;
};

int cmd_check(Run& run, const CheckArgs& a) {
  run.manifest().params = {{"graphs", a.graphs}, {"k", a.k}};
  Json results = Json::array();
  bool all = true;
  std::size_t index = 0;
  for (const std::string& spec : a.graphs) {
    const std::vector<Graph> graphs = run.load(spec);
    for (std::size_t i = 0; i < graphs.size(); ++i, ++index) {
      const SymmetryReport r = symmetry_report(graphs[i], a.k);
      all = all && r.is_symmetric;
      const std::string label = graphs.size() == 1 ? spec : spec + "#" + std::to_string(i + 1);
      Json j = report::to_json(r);
      j["graph"] = label;
      results.push_back(j);
      std::ostream& out = run.out();
      const std::string verdict = run.paint(r.is_symmetric, r.is_symmetric ? "yes" : "no");
      if (a.quiet) {
        out << label << ": order " << r.order << ", " << a.k << "-symmetric: " << verdict << '\n';
        continue;
      }
      if (index > 0) out << '\n';
      out << label << ": order " << r.order << ", k = " << a.k << (r.trivial ? " (fewer than k vertices)" : "") << '\n';
      print_symmetry_table(out, r);
      out << a.k << "-symmetric: " << verdict << '\n';
    }
  }
  run.finish(a.json, Json{{"k", a.k}, {"all_symmetric", all}, {"graphs", results}});
  return all ? kExitHolds : kExitFails;
}

struct AdmissibleArgs {
  int k = 3;
  std::uint64_t limit = 100;
  bool joint = false;
  std::string json;
};

int cmd_admissible(Run& run, const AdmissibleArgs& a) {
  run.manifest().params = {{"k", a.k}, {"limit", a.limit}, {"joint", a.joint}};
  const std::vector<ListedOrder> listed = a.joint ? joint_admissible_orders(a.k, a.limit) : admissible_orders(a.k, a.limit);
  std::ostream& out = run.out();
  out << "# n <= " << a.limit << (a.joint ? " that are j-admissible for every 2 <= j <= " : " that are k-admissible, k = ")
      << a.k << '\n';
  std::string trivial;
  for (const ListedOrder& l : listed)
    if (l.trivial) trivial += " " + std::to_string(l.n);
  if (!trivial.empty()) out << "# trivially symmetric (fewer than k vertices):" << trivial << '\n';
  for (std::size_t i = 0; i < listed.size(); ++i) out << i + 1 << ' ' << listed[i].n << '\n';
  run.finish(a.json, Json{{"k", a.k}, {"limit", a.limit}, {"joint", a.joint}, {"orders", report::to_json(listed)}});
  return kExitHolds;
}

struct InflateArgs {
  std::string g, h;
  std::string emit;
  std::string out;
  bool verify = false;
  std::string json;
};

std::string render(const Graph& g, const std::string& format) {
  if (format == "matrix") return to_adjacency_text(g);
  return emit_graph6(g) + "\n";
}

int cmd_inflate(Run& run, const InflateArgs& a) {
  run.manifest().params = {{"g", a.g}, {"h", a.h}, {"emit", a.emit}, {"out", a.out}, {"verify", a.verify}};
  const Graph g = run.load_one(a.g);
  const Graph h = run.load_one(a.h);
  const Graph f = inflate(g, h);
  const std::string format = a.emit.empty() ? "graph6" : a.emit;
  if (!a.out.empty()) run.write(a.out, render(f, format));

  Json result{{"g_order", g.order()}, {"h_order", h.order()}, {"order", f.order()}, {"edges", f.edge_count()},
              {"graph6", emit_graph6(f)}};
  bool match = true;
  std::ostringstream table;
  table << "inflate(" << a.g << ", " << a.h << "): order " << f.order() << ", " << f.edge_count() << " edges\n";
  if (f.order() >= 3) {
    const InflationPrediction predicted = predict_3profile(g, h);
    const InflationPrediction measured = measured_profile(f);
    match = predicted == measured;
    result["predicted"] = report::to_json(predicted);
    result["measured"] = report::to_json(measured);
    result["prediction_matches"] = match;
    const std::vector<std::pair<std::string, std::pair<Rational, Rational>>> rows{
        {"edge", {predicted.edge_density, measured.edge_density}},
        {"K3", {predicted.triangle, measured.triangle}},
        {"P3", {predicted.path, measured.path}},
        {"K2+K1", {predicted.single_edge, measured.single_edge}},
        {"3K1", {predicted.empty, measured.empty}}};
    table << pad("density", 10) << pad("predicted", 16) << "measured\n";
    for (const auto& [name, pm] : rows) table << pad(name, 10) << pad(to_string(pm.first), 16) << to_string(pm.second) << '\n';
    const bool two = is_k_symmetric(f, 2);
    const bool three = is_k_symmetric(f, 3);
    const bool almost = is_almost_3_symmetric(f);
    result["two_symmetric"] = two;
    result["three_symmetric"] = three;
    result["almost_three_symmetric"] = almost;
    result["triangle_deviation"] = report::to_json(measured.triangle - Rational(1, 8));
    table << "2-symmetric: " << (two ? "yes" : "no") << ", 3-symmetric: " << (three ? "yes" : "no")
          << ", almost-3-symmetric: " << (almost ? "yes" : "no") << '\n';
    if (g.order() >= 2 && h.order() >= 2 && is_k_symmetric(g, 3) && is_k_symmetric(h, 3)) {
      const Rational excess = triangle_excess(g.order(), h.order());
      result["triangle_excess"] = report::to_json(excess);
      table << "triangle density 1/8 + " << to_string(excess) << " (both factors 3-symmetric)\n";
    }
  }
  if (!a.emit.empty() && a.out.empty()) {
    run.out() << render(f, format);
  } else {
    run.out() << table.str();
  }
  if (a.verify) {
    run.err() << "verify: " << (match ? "predictions equal measured densities" : "MISMATCH between prediction and measurement")
              << '\n';
  }
  run.finish(a.json, result);
  return a.verify && !match ? kExitFails : kExitHolds;
}

struct SearchArgs {
  SampleConfig config;
  std::string out;
  std::size_t stats_sample = 0;
  std::string csv;
  std::string json;
  std::string population;
};

void print_histogram(std::ostream& out, const std::string& title, const std::map<int, std::uint64_t>& h) {
  out << pad(title, 14) << "Frequency\n";
  for (const auto& [v, c] : h) out << pad(std::to_string(v), 14) << c << '\n';
}

int cmd_search(Run& run, const SearchArgs& a) {
  const SampleConfig& c = a.config;
  run.manifest().params = {{"order", c.order},         {"trials", c.trials}, {"seed", c.seed},
                           {"collect_limit", c.collect_limit}, {"threads", c.threads}, {"stats_sample", a.stats_sample},
                           {"population", a.population}};
  run.manifest().seed = c.seed;
  if (!a.csv.empty() && a.stats_sample == 0) throw std::invalid_argument("--csv needs --stats-sample");
  const SearchOutcome outcome = run_search(c);
  run.err() << "search: " << c.trials << " trials on " << outcome.shards << " shard(s) in "
            << std::chrono::duration<double>(outcome.elapsed).count() << " s\n";

  std::ostream& out = run.out();
  const Rational rate = outcome.hit_rate();
  out << "order " << c.order << ": " << outcome.hits << " 3-symmetric in " << c.trials << " trials (seed " << c.seed
      << ")\n";
  out << "hit rate " << to_string(rate) << " = " << to_decimal(rate * 100, 4) << "%\n";

  if (!a.out.empty()) {
    std::string lines;
    for (const FoundGraph& f : outcome.found) lines += emit_graph6(f.graph) + "\n";
    run.write(a.out, lines);
  }

  std::optional<StatsReport> stats;
  if (a.stats_sample > 0) {
    if (outcome.found.empty()) {
      run.err() << "search: no hits, statistics skipped\n";
    } else {
      std::vector<Graph> sample;
      for (std::size_t i = 0; i < outcome.found.size() && i < a.stats_sample; ++i) sample.push_back(outcome.found[i].graph);
      stats = batch_stats(sample);
      out << "\nstatistics over " << stats->sample_count << " graphs\n";
      print_histogram(out, "Max Clique", stats->max_clique_histogram);
      print_histogram(out, "Max Degree", stats->max_degree_histogram);
      if (!a.csv.empty()) run.write(a.csv, report::histogram_csv(*stats));
    }
  }

  Json result = report::to_json(outcome, stats);
  if (!a.population.empty()) {
    const BigInt population(a.population);
    const BigInt estimate = estimate_population(outcome, population);
    out << "\nestimate (paper methodology: labelled hit rate x unlabelled 2-symmetric count " << population
        << "): " << estimate << " ~ " << report::scientific(estimate, 5) << '\n';
    result["estimate"] = {{"population_2sym", report::big_to_json(population)},
                          {"estimate", report::big_to_json(estimate)},
                          {"methodology", "paper methodology"}};
  }
  run.finish(a.json, result);
  return kExitHolds;
}

struct EnumerateArgs {
  int n = 8;
  std::string dump;
  std::string json;
  std::optional<std::uint64_t> shuffle_seed;
};

int cmd_enumerate(Run& run, const EnumerateArgs& a) {
  run.manifest().params = {{"n", a.n}, {"dump", a.dump}};
  if (a.shuffle_seed) {
    run.manifest().params["shuffle_seed"] = *a.shuffle_seed;
    run.manifest().seed = *a.shuffle_seed;
  }
  const EnumerationResult e = enumerate_small_orders(a.n, {a.shuffle_seed});
  std::ostream& out = run.out();
  out << "order " << e.order << '\n';
  out << pad("classes", 36) << e.total_classes << '\n';
  out << pad("2-symmetric classes", 36) << e.two_symmetric_classes << '\n';
  out << pad("3-symmetric classes", 36) << e.three_symmetric_classes << '\n';
  out << pad("self-complementary classes", 36) << e.self_complementary_classes << '\n';
  out << pad("self-complementary and 3-symmetric", 36) << e.self_complementary_three_symmetric << '\n';
  out << pad("labelled 2-symmetric graphs", 36) << e.labelled_two_symmetric << '\n';
  out << pad("labelled 3-symmetric graphs", 36) << e.labelled_three_symmetric << '\n';
  if (e.two_symmetric_classes > 0) {
    const Rational unlabelled(BigInt(e.three_symmetric_classes), BigInt(e.two_symmetric_classes));
    const Rational labelled(e.labelled_three_symmetric, e.labelled_two_symmetric);
    out << pad("3-sym / 2-sym (classes)", 36) << to_string(unlabelled) << " = " << to_decimal(unlabelled * 100, 4) << "%\n";
    out << pad("3-sym / 2-sym (labelled)", 36) << to_string(labelled) << " = " << to_decimal(labelled * 100, 4) << "%\n";
  }
  if (!a.dump.empty()) {
    std::string lines;
    for (const Graph& g : e.three_symmetric) lines += emit_graph6(g) + "\n";
    run.write(a.dump, lines);
  }
  run.finish(a.json, report::to_json(e));
  return kExitHolds;
}

struct ConvertArgs {
  std::string input;
  std::string to;
  std::string out;
};

int cmd_convert(Run& run, const ConvertArgs& a) {
  run.manifest().params = {{"input", a.input}, {"to", a.to}, {"out", a.out}};
  const std::vector<Graph> graphs = run.load(a.input);
  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (a.to == "matrix" && i > 0) text += "\n";
    text += render(graphs[i], a.to);
  }
  if (a.out.empty()) {
    run.out() << text;
  } else {
    run.write(a.out, text);
  }
  run.finish("", Json{{"graphs", graphs.size()}, {"to", a.to}});
  return kExitHolds;
}

struct EstimateArgs {
  std::string rate;
  std::string population;
  int digits = 3;
  std::string json;
};

int cmd_estimate(Run& run, const EstimateArgs& a) {
  run.manifest().params = {{"rate", a.rate}, {"population", a.population}, {"digits", a.digits}};
  const Rational rate = parse_rational(a.rate);
  if (rate < 0 || rate > 1) throw std::invalid_argument("rate must lie in [0, 1]");
  const BigInt population(a.population);
  const BigInt estimate = estimate_population(rate, population);
  std::ostream& out = run.out();
  out << "rate " << to_string(rate) << " x " << population << " = " << estimate << '\n';
  out << "~ " << report::scientific(estimate, a.digits) << " (paper methodology)\n";
  run.finish(a.json, Json{{"rate", report::to_json(rate)},
                          {"population_2sym", report::big_to_json(population)},
                          {"estimate", report::big_to_json(estimate)},
                          {"scientific", report::scientific(estimate, a.digits)},
                          {"methodology", "paper methodology"}});
  return kExitHolds;
}

// ---------------------------------------------------------------------------

int cmd_replay(const std::string& path, bool keep, Streams io) {
  Json doc = Json::parse(read_text(path));
  const Json manifest_json = doc.contains("manifest") ? doc["manifest"] : doc;
  const report::RunManifest m = report::manifest_from_json(manifest_json);
  if (m.command == "replay") throw std::invalid_argument("refusing to replay a replay");

  for (const auto& [input, digest] : m.input_digests) {
    if (sha256_file(input) != digest) throw std::runtime_error("input " + input + " changed since the run");
  }

  const fs::path scratch = fs::temp_directory_path() / ("ksym-replay-" + std::to_string(::getpid()));
  fs::create_directories(scratch);
  std::map<std::string, std::string> redirected;  // original path -> scratch path
  std::vector<std::string> argv = m.argv;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    for (const std::string& flag : kOutputFlags) {
      std::string* value = nullptr;
      std::string prefix;
      if (argv[i] == flag && i + 1 < argv.size()) {
        value = &argv[i + 1];
      } else if (argv[i].rfind(flag + "=", 0) == 0) {
        prefix = flag + "=";
        value = &argv[i];
      }
      if (value == nullptr) continue;
      const std::string original = value->substr(prefix.size());
      const std::string target = (scratch / (std::to_string(redirected.size()) + "_" + fs::path(original).filename().string())).string();
      redirected[original] = target;
      *value = prefix + target;
    }
  }

  std::ostringstream out, err;
  const int code = run(argv, {out, err, false});
  io.err << err.str();

  bool same = true;
  auto compare = [&](const std::string& what, const std::string& expected, const std::string& actual) {
    const bool ok = expected == actual;
    same = same && ok;
    io.out << pad(what, 40) << (ok ? "identical" : "DIFFERS") << '\n';
  };
  for (const auto& [output, digest] : m.output_digests) {
    if (output == "<stdout>") {
      compare("stdout", digest, sha256_hex(out.str()));
    } else {
      const auto it = redirected.find(output);
      compare(output, digest, it == redirected.end() ? "" : sha256_file(it->second));
    }
  }
  // The JSON document cannot hold its own digest; compare its result section.
  for (const auto& [original, target] : redirected) {
    if (m.output_digests.count(original) != 0 || !fs::exists(target)) continue;
    if (fs::path(target).extension() == ".json") {
      const Json rerun = Json::parse(read_text(target));
      compare(original + " (result)", m.result_digest, report::result_digest(rerun.at("result")));
    }
  }
  io.out << "exit code " << code << '\n';
  if (!keep) fs::remove_all(scratch);
  else io.err << "replay outputs kept in " << scratch.string() << '\n';
  return same ? kExitHolds : kExitFails;
}

}  // namespace

namespace {

int dispatch(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Exact tools for k-symmetric graphs: checks, admissible orders, inflations, searches."};
  app.name("ksym");
  app.set_version_flag("--version", report::version());
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test whether graphs are k-symmetric (exit 0 yes, 1 no)");
  c->add_option("graphs", check.graphs, "Graph files (matrix or graph6), g6:<code>, or names like W8, P4, K3+K1")->required();
  c->add_option("-k", check.k, "Subgraph order, 2..4")->capture_default_str();
  c->add_option("--json", check.json, "Write a JSON report with run manifest");
  c->add_flag("-q,--quiet", check.quiet, "One line per graph");

  AdmissibleArgs adm;
  auto* ad = app.add_subcommand("admissible", "List k-admissible orders in b-file format");
  ad->add_option("k", adm.k, "2, 3 or 4")->required();
  ad->add_option("limit", adm.limit, "Largest order listed")->required();
  ad->add_flag("--joint", adm.joint, "Require j-admissibility for every 2 <= j <= k");
  ad->add_option("--json", adm.json, "Write a JSON report with run manifest");

  InflateArgs inf;
  auto* in = app.add_subcommand("inflate", "Build inflate(G,H) and compare predicted with measured densities");
  in->add_option("G", inf.g, "Outer graph")->required();
  in->add_option("H", inf.h, "Graph substituted for each vertex")->required();
  in->add_option("--emit", inf.emit, "Print the inflation instead of the report")->check(CLI::IsMember({"graph6", "matrix"}));
  in->add_option("--out", inf.out, "Write the inflation to a file (format from --emit, default graph6)");
  in->add_flag("--verify", inf.verify, "Exit 1 if any prediction differs from the measurement");
  in->add_option("--json", inf.json, "Write a JSON report with run manifest");

  SearchArgs srch;
  auto* se = app.add_subcommand("search", "Sample graphs with half the edges and keep the 3-symmetric ones");
  se->add_option("-n,--order", srch.config.order, "Order")->capture_default_str();
  se->add_option("-t,--trials", srch.config.trials, "Number of samples")->capture_default_str();
  se->add_option("-s,--seed", srch.config.seed, "Seed")->capture_default_str();
  se->add_option("--threads", srch.config.threads, "Worker threads, 0 for all cores; results do not depend on it")
      ->capture_default_str();
  se->add_option("--collect", srch.config.collect_limit, "Keep at most this many hits")->capture_default_str();
  se->add_option("--out", srch.out, "Write kept hits as graph6 lines");
  se->add_option("--stats-sample", srch.stats_sample, "Clique/degree histograms over the first N hits");
  se->add_option("--csv", srch.csv, "Write the histograms as CSV (needs --stats-sample)");
  se->add_option("--population", srch.population, "Number of 2-symmetric graphs; prints a population estimate");
  se->add_option("--json", srch.json, "Write a JSON report with run manifest");

  EnumerateArgs en;
  auto* enu = app.add_subcommand("enumerate", "Count graph classes of order n <= 8");
  enu->add_option("n", en.n, "Order")->required()->check(CLI::Range(0, kMaxEnumerationOrder));
  enu->add_option("--dump", en.dump, "Write the 3-symmetric classes as graph6 lines");
  enu->add_option("--shuffle-seed", en.shuffle_seed, "Visit the augmentation in a shuffled order");
  enu->add_option("--json", en.json, "Write a JSON report with run manifest");

  ConvertArgs conv;
  auto* co = app.add_subcommand("convert", "Convert between adjacency matrices and graph6, keeping labels");
  co->add_option("input", conv.input, "Graph file or name")->required();
  co->add_option("--to", conv.to, "Target format")->required()->check(CLI::IsMember({"graph6", "matrix"}));
  co->add_option("--out", conv.out, "Output file (default stdout)");

  EstimateArgs est;
  auto* es = app.add_subcommand("estimate", "Scale a hit rate by a 2-symmetric population count");
  es->add_option("--rate", est.rate, "p/q, decimal or percentage, e.g. 4.51%")->required();
  es->add_option("--population", est.population, "Number of 2-symmetric graphs")->required();
  es->add_option("--digits", est.digits, "Significant digits in the rounded figure")->capture_default_str()->check(CLI::Range(1, 30));
  es->add_option("--json", est.json, "Write a JSON report with run manifest");

  std::string replay_path;
  bool replay_keep = false;
  auto* re = app.add_subcommand("replay", "Re-run a recorded command and compare its outputs by digest");
  re->add_option("manifest", replay_path, "JSON report or manifest file")->required();
  re->add_flag("--keep", replay_keep, "Keep the re-run outputs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitHolds : kExitError;
  }

  try {
    if (*re) return cmd_replay(replay_path, replay_keep, io);
    auto* sub = app.get_subcommands().front();
    Run r(sub->get_name(), args, io);
    if (*c) return cmd_check(r, check);
    if (*ad) return cmd_admissible(r, adm);
    if (*in) return cmd_inflate(r, inf);
    if (*se) return cmd_search(r, srch);
    if (*enu) return cmd_enumerate(r, en);
    if (*co) return cmd_convert(r, conv);
    if (*es) return cmd_estimate(r, est);
  } catch (const std::exception& e) {
    io.err << "ksym: error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  try {
    return dispatch(args, io);
  } catch (const std::exception& e) {
    io.err << "ksym: internal error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace ksym::cli
