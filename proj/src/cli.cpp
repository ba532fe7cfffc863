#include "rdr/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rdr/canonical.hpp"
#include "rdr/enumerate.hpp"
#include "rdr/errors.hpp"
#include "rdr/graph_io.hpp"
#include "rdr/transforms.hpp"
#include "rdr/verify.hpp"

namespace rdr {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int checked_order(const RunConfig& cfg, const char* command) {
  if (!cfg.n) throw UsageError(std::string(command) + " needs --n");
  const int n = *cfg.n;
  if (n < 3) throw UsageError("--n must be at least 3");
  if (n > kLargeMaxN) throw UsageError("--n is capped at " + std::to_string(kLargeMaxN));
  if (n > kDefaultMaxN && !cfg.allow_large_n) {
    throw UsageError("--n above " + std::to_string(kDefaultMaxN) + " is slow; pass --allow-large-n to run n up to " +
                     std::to_string(kLargeMaxN));
  }
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Graphs named by --input/--inline, or S_n^p when only --n/--p are given.
std::vector<Graph> load_graphs(const RunConfig& cfg, std::ostream& err) {
  if (cfg.input_path && cfg.inline_edges) throw UsageError("--input and --inline are mutually exclusive");
  const auto warn = [&](const ParsedGraph& parsed) {
    if (parsed.duplicates_collapsed) err << "warning: duplicate edges collapsed\n";
    return parsed.graph;
  };
  if (cfg.inline_edges) return {warn(parse_inline_edges(*cfg.inline_edges))};
  if (cfg.input_path) {
    const auto text = read_file(*cfg.input_path);
    if (cfg.format == InputFormat::kGraph6) return parse_graph6_stream(text);
    return {warn(parse_edge_list(text))};
  }
  if (cfg.n && cfg.p) {
    try {
      return {make_S(*cfg.n, *cfg.p)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("no input graph: use --input, --inline or --n with --p");
}

template <typename Item, typename Json, typename Csv>
void emit_list(const RunConfig& cfg, std::ostream& out, const std::string& header, const std::vector<Item>& items,
               Json to_json, Csv to_csv) {
  if (cfg.emit == EmitFormat::kCsv) {
    out << header << '\n';
    for (const auto& item : items) out << to_csv(item) << '\n';
    return;
  }
  out << '[';
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "," : "") << to_json(items[i]);
  out << "]\n";
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(cfg, err);
  std::vector<IndexReport> reports;
  int status = kExitOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!is_connected(graphs[i])) {
      err << "record " << i + 1 << ": graph is not connected; skipped\n";
      status = kExitBadGraph;
      continue;
    }
    reports.push_back(index_report(graphs[i]));
  }
  emit_list(cfg, out, IndexReport::csv_header(), reports, [](const auto& r) { return r.to_json(); },
            [](const auto& r) { return r.to_csv_row(); });
  return status;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const int n = checked_order(cfg, "enumerate");
  const auto graphs = enumerate_unicyclic(n);
  std::vector<std::pair<std::size_t, const Graph*>> items;
  for (std::size_t i = 0; i < graphs.size(); ++i) items.emplace_back(i, &graphs[i]);
  emit_list(
      cfg, out, "index,graph6,canonical_code", items,
      [](const auto& item) {
        nlohmann::ordered_json j;
        j["graph6"] = to_graph6(*item.second);
        j["canonical_code"] = canonical_code(*item.second).hex();
        return j.dump();
      },
      [](const auto& item) {
        return std::to_string(item.first) + ',' + to_graph6(*item.second) + ',' + canonical_code(*item.second).hex();
      });
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto result = sweep(checked_order(cfg, "sweep"), cfg.index, cfg.jobs);
  if (cfg.emit == EmitFormat::kCsv) {
    out << SweepResult::csv_header() << '\n' << result.to_csv_row() << '\n';
  } else {
    out << result.to_json() << '\n';
  }
  return result.matches_theorem && result.is_unique ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto report = verify_transforms(checked_order(cfg, "verify"), cfg.jobs);
  if (cfg.emit == EmitFormat::kCsv) {
    out << VerificationReport::csv_header() << '\n' << report.to_csv_row() << '\n';
  } else {
    out << report.to_json() << '\n';
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(cfg, err);
  if (graphs.size() != 1) throw UsageError("transform takes exactly one graph");
  const Graph& g = graphs.front();
  if (!is_unicyclic(g)) {
    err << "input graph is not unicyclic\n";
    return kExitBadGraph;
  }
  const auto steps = reduce_to_extremal(g);
  const Graph& terminal = steps.empty() ? g : steps.back().after;
  const bool extremal = isomorphic(terminal, make_S(g.order(), 3));
  if (cfg.emit == EmitFormat::kCsv) {
    emit_list(cfg, out, TransformOutcome::csv_header(), steps, [](const auto& s) { return s.to_json(); },
              [](const auto& s) { return s.to_csv_row(); });
  } else {
    nlohmann::ordered_json j;
    auto list = nlohmann::ordered_json::array();
    for (const auto& s : steps) list.push_back(nlohmann::ordered_json::parse(s.to_json()));
    j["steps"] = list;
    j["terminal_code"] = canonical_code(terminal).hex();
    j["terminal_is_extremal"] = extremal;
    out << j.dump() << '\n';
  }
  if (!extremal) {
    err << "terminal graph is not S_n^3\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (cfg.out_path) {
      file.open(*cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *cfg.out_path);
      sink = &file;
    }
    switch (cfg.command) {
      case Command::kCompute:
        return cmd_compute(cfg, *sink, err);
      case Command::kEnumerate:
        return cmd_enumerate(cfg, *sink);
      case Command::kSweep:
        return cmd_sweep(cfg, *sink);
      case Command::kTransform:
        return cmd_transform(cfg, *sink, err);
      case Command::kVerify:
        return cmd_verify(cfg, *sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidGraphError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadGraph;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resistance-distance topological indices and RDR extremal checks"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string format = "edge-list";
  std::string index = "rdr";
  std::string emit = "json";

  const std::map<std::string, Command> commands{
      {"compute", Command::kCompute},     {"enumerate", Command::kEnumerate}, {"sweep", Command::kSweep},
      {"transform", Command::kTransform}, {"verify", Command::kVerify},
  };
  const std::map<std::string, std::string> descriptions{
      {"compute", "all nine indices for each input graph"},
      {"enumerate", "list non-isomorphic unicyclic graphs of order n"},
      {"sweep", "maximise an index over all unicyclic graphs of order n"},
      {"transform", "reduce a unicyclic graph to S_n^3 step by step"},
      {"verify", "check that every rewrite raises RDR for orders 3..n"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, command] : commands) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--input", cfg.input_path, "input file");
    sub->add_option("--inline", cfg.inline_edges, "edges as \"u v;u v;...\"");
    sub->add_option("--format", format, "edge-list|graph6")->check(CLI::IsMember({"edge-list", "graph6"}));
    sub->add_option("--n", cfg.n, "graph order");
    sub->add_option("--p", cfg.p, "cycle length");
    sub->add_option("--index", index, "rdr|wiener|harary|kirchhoff|rh|m1|m2|dd|rdd")
        ->check(CLI::IsMember({"rdr", "wiener", "harary", "kirchhoff", "rh", "m1", "m2", "dd", "rdd"}));
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--emit", emit, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_flag("--allow-large-n", cfg.allow_large_n, "permit n up to 11");
    subs.emplace_back(sub, command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.format = format == "graph6" ? InputFormat::kGraph6 : InputFormat::kEdgeList;
  cfg.emit = emit == "csv" ? EmitFormat::kCsv : EmitFormat::kJson;
  cfg.index = *parse_index_kind(index);
  return run(cfg, out, err);
}

}  // namespace rdr
