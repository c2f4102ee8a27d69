#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <cmath>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgi/circuit.hpp"
#include "qgi/error.hpp"
#include "qgi/fixtures.hpp"
#include "qgi/graph.hpp"
#include "qgi/invariant.hpp"
#include "qgi/simulator.hpp"
#include "qgi/survey.hpp"

namespace qgi::cli {

namespace {

constexpr int kExactIsomorphismLimit = 10;

enum class OutputFormat { kPretty, kJson, kCsv };

struct GraphInput {
  std::string spec;
  std::string format = "auto";
};

struct Common {
  std::string output = "pretty";
  int threads = 0;
  int qubit_cap = kDefaultQubitCap;
};

OutputFormat output_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  return OutputFormat::kPretty;
}

GraphFormat graph_format(const std::string& s) {
  if (s == "graph6") return GraphFormat::kGraph6;
  if (s == "adjacency") return GraphFormat::kAdjacency;
  if (s == "edges") return GraphFormat::kEdgeList;
  return GraphFormat::kAuto;
}

// Fixture name, then file path ("-" for stdin), then inline text.
Graph load_graph(const GraphInput& in) {
  if (auto g = fixtures::by_name(in.spec)) return *g;
  std::string text;
  if (in.spec == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (std::error_code ec; std::filesystem::is_regular_file(in.spec, ec)) {
    std::ifstream f(in.spec);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text = in.spec;
  }
  return parse_graph(text, graph_format(in.format));
}

std::string percent(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * p);
  return buf;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string subset_display(VertexSubset s) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t rest = s.mask; rest != 0; rest &= rest - 1) {
    if (!first) out += ",";
    out += std::to_string(__builtin_ctz(rest) + 1);
    first = false;
  }
  return out + "}";
}

void print_table(std::ostream& out, OutputFormat fmt, const std::vector<double>& probs,
                 const std::vector<std::string>& third) {
  if (fmt == OutputFormat::kCsv) {
    out << "edges,percent,subgraphs\n";
    for (std::size_t k = 0; k < probs.size(); ++k) {
      out << k << ',' << percent(probs[k]) << ',' << third[k] << '\n';
    }
    return;
  }
  char line[96];
  std::snprintf(line, sizeof line, "%8s  %12s  %12s\n", "#(edges)", "%Probability", "#(subgraphs)");
  out << line;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    std::snprintf(line, sizeof line, "%8zu  %12s  %12s\n", k, percent(probs[k]).c_str(), third[k].c_str());
    out << line;
  }
}

int cmd_invariant(const GraphInput& input, const Common& common, const std::string& mode,
                  std::uint64_t shots, std::uint64_t seed, bool fuse, bool show_mis, bool show_poly,
                  const std::string& dump_state, std::ostream& out) {
  const Graph g = load_graph(input);
  const OutputFormat fmt = output_format(common.output);

  std::vector<double> probs;
  std::vector<std::string> third;
  std::string json;
  std::string source;
  if (mode == "classical") {
    const EdgeHistogram h = classical_histogram(g, SweepOptions{common.threads});
    probs = h.probabilities();
    for (auto c : h.counts) third.push_back(std::to_string(c));
    json = to_json(h, InvariantSource::kClassical);
    source = "classical";
  } else {
    QuantumMode qm = mode == "shots" ? QuantumMode::sampled(shots, seed) : QuantumMode::exact();
    qm.fuse = fuse;
    qm.qubit_cap = common.qubit_cap;
    qm.threads = common.threads;
    const QuantumHistogram q = quantum_histogram(g, qm);
    probs = q.probabilities;
    const double subsets = std::ldexp(1.0, g.order());
    for (std::size_t k = 0; k < probs.size(); ++k) {
      third.push_back(q.histogram ? std::to_string(q.histogram->counts[k]) : fixed2(probs[k] * subsets));
    }
    json = to_json(q);
    source = to_string(q.source);
  }

  if (!dump_state.empty()) {
    if (g.size() == 0) throw InputError("empty graph: no oracle, no state to dump");
    const Circuit c = build_qpe(g, QpeOptions{fuse, common.qubit_cap});
    std::ofstream f(dump_state);
    if (!f) throw InputError("cannot write state dump to " + dump_state);
    f << state_to_json(run(c, SimOptions{common.qubit_cap, common.threads})) << '\n';
  }

  if (fmt == OutputFormat::kJson) {
    auto j = nlohmann::ordered_json::parse(json);
    if (show_mis) {
      const auto mis = max_independent_set(g, SweepOptions{common.threads});
      j["max_independent_set"] = {{"size", mis.size}, {"mask", mis.witness.mask}};
    }
    if (show_poly) j["char_poly"] = char_poly(g).coeffs;
    out << j.dump() << '\n';
    return kOk;
  }
  if (fmt == OutputFormat::kPretty) {
    out << "graph: n=" << g.order() << " m=" << g.size() << " source=" << source << '\n';
  }
  print_table(out, fmt, probs, third);
  if (fmt == OutputFormat::kPretty) {
    if (show_mis) {
      const auto mis = max_independent_set(g, SweepOptions{common.threads});
      out << "max independent set: " << mis.size << " " << subset_display(mis.witness) << '\n';
    }
    if (show_poly) out << "char poly: " << char_poly(g).to_string() << '\n';
  }
  return kOk;
}

int cmd_compare(const GraphInput& a, const GraphInput& b, const Common& common, std::ostream& out) {
  const Graph g1 = load_graph(a);
  const Graph g2 = load_graph(b);
  const bool inv_equal = invariant_equal(g1, g2);
  std::optional<bool> spectral;
  if (g1.order() == g2.order() && g1.order() <= kMaxCharPolyVertices) {
    spectral = char_poly(g1) == char_poly(g2);
  } else if (g1.order() != g2.order()) {
    spectral = false;
  }
  std::optional<Permutation> witness;
  std::optional<bool> isomorphic;
  if (g1.order() != g2.order() || g1.size() != g2.size()) {
    isomorphic = false;
  } else if (g1.order() <= kExactIsomorphismLimit) {
    witness = are_isomorphic(g1, g2);
    isomorphic = witness.has_value();
  }

  std::string verdict;
  if (!inv_equal) {
    verdict = "distinguished by invariant";
  } else if (!isomorphic) {
    verdict = "invariant-equal, isomorphism not checked (n > 10)";
  } else if (*isomorphic) {
    verdict = "invariant-equal, isomorphic";
  } else {
    verdict = "invariant-equal, NOT isomorphic (counterexample)";
  }

  if (output_format(common.output) == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["invariant_equal"] = inv_equal;
    j["spectral_equal"] = spectral ? nlohmann::ordered_json(*spectral) : nlohmann::ordered_json(nullptr);
    j["isomorphic"] = isomorphic ? nlohmann::ordered_json(*isomorphic) : nlohmann::ordered_json(nullptr);
    if (witness) {
      std::vector<int> map(witness->map().begin(), witness->map().end());
      j["witness"] = map;
    }
    j["verdict"] = verdict;
    out << j.dump() << '\n';
    return kOk;
  }
  auto yes_no = [](std::optional<bool> v) { return v ? (*v ? "yes" : "no") : "not checked"; };
  out << "invariant-equal: " << (inv_equal ? "yes" : "no") << '\n';
  out << "spectral-equal: " << yes_no(spectral) << '\n';
  out << "isomorphic: " << yes_no(isomorphic);
  if (witness) {
    out << " (";
    for (int v = 0; v < witness->size(); ++v) {
      out << (v ? " " : "") << v + 1 << "->" << (*witness)(v) + 1;
    }
    out << ")";
  }
  out << '\n';
  out << "verdict: " << verdict << '\n';
  return kOk;
}

int cmd_encode(const GraphInput& input, const Common& common, bool fuse, bool decompose, std::ostream& out) {
  const Graph g = load_graph(input);
  if (g.size() == 0) throw InputError("empty graph: no oracle");
  const Circuit c = build_qpe(g, QpeOptions{fuse, common.qubit_cap});
  out << export_qasm(c, QasmOptions{decompose});
  return kOk;
}

std::optional<std::filesystem::path> cache_path(const std::string& flag, bool no_cache) {
  if (no_cache) return std::nullopt;
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* dir = std::getenv("QGI_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / "survey.jsonl";
  }
  return std::nullopt;
}

int cmd_survey(int max_n, const std::string& source_name, const std::string& cache_flag, bool no_cache,
               bool show_collisions, const Common& common, std::ostream& out) {
  const InvariantSource source = source_name == "qpe" ? InvariantSource::kQpeExact : InvariantSource::kClassical;
  const int cap = source == InvariantSource::kClassical ? kMaxSurveyVertices : kMaxQpeSurveyVertices;
  if (max_n < 1 || max_n > cap) {
    throw CapError("survey --n must be in 1.." + std::to_string(cap) + " for source " + source_name);
  }
  const auto cache = cache_path(cache_flag, no_cache);

  std::vector<SurveyReport> reports;
  for (int n = 1; n <= max_n; ++n) {
    std::optional<SurveyReport> r;
    if (cache) r = load_report(*cache, n, source);
    if (!r) {
      r = run_survey(n, SurveyOptions{source, common.threads});
      if (cache) save_report(*cache, *r);
    }
    reports.push_back(std::move(*r));
  }

  const OutputFormat fmt = output_format(common.output);
  if (fmt == OutputFormat::kJson) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(report_to_json(r)));
    out << arr.dump() << '\n';
    return kOk;
  }
  if (fmt == OutputFormat::kCsv) {
    out << "n,classes,distinct_quantum,distinct_spectra\n";
    for (const auto& r : reports) {
      out << r.n << ',' << r.class_count << ',' << r.distinct_histograms << ',' << r.distinct_charpolys << '\n';
    }
    return kOk;
  }
  out << "n: classes distinct_quantum distinct_spectra\n";
  for (const auto& r : reports) {
    out << r.n << ": " << r.class_count << ' ' << r.distinct_histograms << ' ' << r.distinct_charpolys << '\n';
  }
  if (show_collisions) {
    for (const auto& r : reports) {
      for (const auto& [a, b] : r.collisions) out << "collision n=" << r.n << ": " << a << ' ' << b << '\n';
    }
  }
  return kOk;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--output,-o", common.output, "pretty | json | csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  cmd->add_option("--threads", common.threads, "worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--qubit-cap", common.qubit_cap, "simulator qubit cap")->check(CLI::Range(1, kMaxQubitCap));
}

void add_graph(CLI::App* cmd, GraphInput& in, const std::string& name) {
  cmd->add_option(name, in.spec, "fixture name, file path, '-' or inline graph text")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum edge-count invariant for graph isomorphism"};
  app.name("qgi");
  app.require_subcommand(1);

  Common common;
  std::string format = "auto";

  GraphInput inv_graph;
  std::string mode = "classical";
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  bool fuse = false;
  bool show_mis = false;
  bool show_poly = false;
  std::string dump_state;
  auto* inv = app.add_subcommand("invariant", "edge-count histogram of a graph");
  add_graph(inv, inv_graph, "graph");
  inv->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "adjacency", "edges"}));
  inv->add_option("--mode", mode, "classical | qpe | shots")->check(CLI::IsMember({"classical", "qpe", "shots"}));
  inv->add_option("--shots", shots)->check(CLI::PositiveNumber);
  inv->add_option("--seed", seed);
  inv->add_flag("--fuse", fuse, "fuse controlled oracle powers");
  inv->add_flag("--mis", show_mis, "also report a maximum independent set");
  inv->add_flag("--charpoly", show_poly, "also report the characteristic polynomial");
  inv->add_option("--dump-state", dump_state, "write the final QPE statevector as JSON");
  add_common(inv, common);

  GraphInput cmp_a;
  GraphInput cmp_b;
  auto* cmp = app.add_subcommand("compare", "compare two graphs");
  add_graph(cmp, cmp_a, "first");
  add_graph(cmp, cmp_b, "second");
  cmp->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "adjacency", "edges"}));
  add_common(cmp, common);

  GraphInput enc_graph;
  std::string export_kind = "qasm";
  bool decompose = false;
  auto* enc = app.add_subcommand("encode", "emit the phase-estimation circuit");
  add_graph(enc, enc_graph, "graph");
  enc->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "adjacency", "edges"}));
  enc->add_option("--export", export_kind)->check(CLI::IsMember({"qasm"}));
  enc->add_flag("--fuse", fuse, "fuse controlled oracle powers");
  enc->add_flag("--decompose-ccp", decompose, "lower doubly controlled phases to cp/cx");
  add_common(enc, common);

  int survey_n = 7;
  std::string survey_source = "classical";
  std::string cache_flag;
  bool no_cache = false;
  bool show_collisions = false;
  auto* sur = app.add_subcommand("survey", "census over all graphs up to n vertices");
  sur->add_option("--n", survey_n, "largest vertex count");
  sur->add_option("--source", survey_source)->check(CLI::IsMember({"classical", "qpe"}));
  sur->add_option("--cache", cache_flag, "JSON-lines report cache (default $QGI_CACHE_DIR/survey.jsonl)");
  sur->add_flag("--no-cache", no_cache);
  sur->add_flag("--collisions", show_collisions, "list histogram collisions");
  add_common(sur, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qgi: " << e.what() << '\n';
    return kInputError;
  }

  inv_graph.format = cmp_a.format = cmp_b.format = enc_graph.format = format;
  try {
    if (inv->parsed()) {
      return cmd_invariant(inv_graph, common, mode, shots, seed, fuse, show_mis, show_poly, dump_state, out);
    }
    if (cmp->parsed()) return cmd_compare(cmp_a, cmp_b, common, out);
    if (enc->parsed()) return cmd_encode(enc_graph, common, fuse, decompose, out);
    if (sur->parsed()) {
      return cmd_survey(survey_n, survey_source, cache_flag, no_cache, show_collisions, common, out);
    }
  } catch (const InputError& e) {
    err << "qgi: " << e.what() << '\n';
    return kInputError;
  } catch (const CacheError& e) {
    err << "qgi: " << e.what() << '\n';
    return kInputError;
  } catch (const CapError& e) {
    err << "qgi: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "qgi: internal check failed: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "qgi: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace qgi::cli
