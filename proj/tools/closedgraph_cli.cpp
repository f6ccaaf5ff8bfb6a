// closedgraph: decide closedness of graphs, run the labeling algorithm,
// verify labelings and sweep small graphs.
//
// Exit codes: 0 ok / verified, 1 verification negative, 2 input error,
// 3 sweep counterexample, 4 internal inconsistency.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "closedgraph/closedgraph.hpp"

namespace cg = closedgraph;

namespace {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kCounterexample = 3,
  kInternalError = 4,
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw cg::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// A line whose first non-space character is ':' or >= '?' and which has no
// second token is graph6.
bool looks_like_graph6(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = cg::detail::split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const char c = tokens.front().front();
    return tokens.size() == 1 && (c == ':' || c >= '?');
  }
  return false;
}

cg::Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_all(path);
  const bool graph6 = format == "graph6" || (format == "auto" && looks_like_graph6(text));
  if (!graph6) return cg::parse_edge_list(text);

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0, graph_line = 0;
  std::string encoded;
  while (std::getline(in, line)) {
    ++line_no;
    if (cg::detail::split_tokens(line).empty()) continue;
    if (graph_line != 0) throw cg::ParseError("expected a single graph6 line", line_no);
    graph_line = line_no;
    encoded = line;
  }
  if (graph_line == 0) throw cg::ParseError("no graph6 line found", 0);
  try {
    return cg::parse_graph6(encoded);
  } catch (const cg::ParseError& e) {
    throw cg::ParseError(e.what(), graph_line);
  }
}

int cmd_check(const std::string& path, const std::string& format, bool json) {
  const cg::Graph g = load_graph(path, format);
  const cg::CheckReport report = cg::build_check_report(g);
  if (!report.consistent()) {
    std::cerr << "internal error: closed=" << report.closed
              << " disagrees with chordal, claw-free and narrow verdicts\n";
    return kInternalError;
  }
  if (json)
    std::cout << cg::to_json(g, report).dump(2) << '\n';
  else
    std::cout << cg::to_text(g, report);
  return kOk;
}

int cmd_label(const std::string& path, const std::string& format, const std::string& tie_break,
              std::uint64_t seed, bool verify, bool json) {
  const cg::Graph g = load_graph(path, format);
  const cg::TieBreak tb = tie_break == "seeded" ? cg::TieBreak::seeded(seed) : cg::TieBreak::min_id();
  const cg::ComponentLabeling run = cg::label_by_components(g, tb);
  std::optional<cg::Verdict<cg::ClosedViolation>> verdict;
  if (verify) verdict = cg::is_closed_by_definition(g, run.labeling);

  if (json) {
    cg::Json out;
    out["schema"] = cg::kReportSchema;
    out["command"] = "label";
    out["tie_break"] = tb.is_seeded() ? "seeded" : "min-id";
    if (tb.is_seeded()) out["seed"] = tb.seed();
    out["labeling"] = cg::to_json(g, run.labeling);
    out["components"] = cg::to_json(run, g);
    if (verdict) {
      cg::Json v{{"closed", verdict->holds()}};
      if (!*verdict) v["violation"] = cg::to_json(g, run.labeling, verdict->witness());
      out["verify"] = std::move(v);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  cg::write_labeling(std::cout, g, run.labeling);
  for (std::size_t c = 0; c < run.runs.size(); ++c) {
    std::cout << "# component " << c + 1 << " l:";
    for (int x : run.runs[c].l.values) std::cout << ' ' << x;
    std::cout << '\n';
  }
  if (verdict) {
    if (*verdict)
      std::cout << "# verify: closed\n";
    else
      std::cout << "# verify: not closed: " << cg::describe(g, run.labeling, verdict->witness()) << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& labeling_path, const std::string& format,
               bool json) {
  const cg::Graph g = load_graph(path, format);
  std::istringstream in(read_all(labeling_path));
  const cg::Labeling lab = cg::read_labeling(in, g);
  const auto verdict = cg::is_closed_by_definition(g, lab);
  if (json) {
    cg::Json out{{"schema", cg::kReportSchema}, {"command", "verify"}, {"closed", verdict.holds()}};
    if (!verdict) out["violation"] = cg::to_json(g, lab, verdict.witness());
    std::cout << out.dump(2) << '\n';
  } else if (verdict) {
    std::cout << "closed\n";
  } else {
    std::cout << "not closed: " << cg::describe(g, lab, verdict.witness()) << '\n';
  }
  return verdict ? kOk : kNegative;
}

int cmd_oracle(const std::string& path, const std::string& format, bool count, bool json) {
  const cg::Graph g = load_graph(path, format);
  const auto found = cg::find_closed_labeling(g);
  std::optional<std::uint64_t> total;
  if (count) total = cg::count_closed_labelings(g);
  if (json) {
    cg::Json out{{"schema", cg::kReportSchema}, {"command", "oracle"}, {"closed", found.has_value()}};
    if (found) out["labeling"] = cg::to_json(g, *found);
    if (total) out["count"] = *total;
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  if (found) {
    std::cout << "closed\n";
    cg::write_labeling(std::cout, g, *found);
  } else {
    std::cout << "not closed\n";
  }
  if (total) std::cout << "# closed labelings: " << *total << '\n';
  return kOk;
}

int cmd_sweep(int max_n, bool weak, int tie_trials, int jobs, const std::string& graph6_file, bool json) {
  const cg::SweepOptions options{weak, tie_trials, jobs};
  cg::SweepReport report;
  if (graph6_file.empty()) {
    report = cg::sweep_theorem(max_n, options);
  } else {
    std::istringstream in(read_all(graph6_file));
    report = cg::sweep_graph6(in, options);
  }
  if (json)
    std::cout << cg::to_json(report).dump(2) << '\n';
  else
    std::cout << cg::to_text(report);
  std::cerr << "elapsed: " << report.elapsed.count() << " s\n";
  return report.ok() ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-graph recognition, labeling and verification"};
  app.require_subcommand(1);

  std::string path, labeling_path, format = "auto", tie_break = "min-id", graph6_file;
  bool json = false, verify = false, count = false, weak = false;
  std::uint64_t seed = 0;
  int max_n = 6, tie_trials = 5;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("graph", path, "Graph file (edge list or graph6), '-' for stdin")->required();
    sub->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    sub->add_flag("--json", json, "Structured JSON output");
  };

  auto* check = app.add_subcommand("check", "Classify a graph and report witnesses");
  add_input(check);

  auto* label = app.add_subcommand("label", "Run the labeling algorithm");
  add_input(label);
  label->add_option("--tie-break", tie_break, "Tie-break rule")
      ->check(CLI::IsMember({"min-id", "seeded"}));
  label->add_option("--seed", seed, "Seed for --tie-break seeded");
  label->add_flag("--verify", verify, "Check the produced labeling for closedness");

  auto* verify_cmd = app.add_subcommand("verify", "Check whether a labeling is closed");
  add_input(verify_cmd);
  verify_cmd->add_option("labeling", labeling_path, "File of 'vertex label' lines")->required();

  auto* oracle = app.add_subcommand("oracle", "Search for a closed labeling exhaustively");
  add_input(oracle);
  oracle->add_flag("--count", count, "Also count all closed labelings (n <= 9)");

  auto* sweep = app.add_subcommand("sweep", "Check the characterization on all small graphs");
  sweep->add_option("--max-n", max_n, "Largest vertex count (1..7)");
  sweep->add_flag("--weak-chordal", weak, "Also test with 4/5/6-cycle chords replacing chordality");
  sweep->add_option("--tie-trials", tie_trials, "Random tie-break seeds per graph");
  sweep->add_option("--jobs", jobs, "Worker threads");
  sweep->add_option("--graph6-file", graph6_file, "Sweep graphs from this graph6 file instead");
  sweep->add_flag("--json", json, "Structured JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(path, format, json);
    if (*label) return cmd_label(path, format, tie_break, seed, verify, json);
    if (*verify_cmd) return cmd_verify(path, labeling_path, format, json);
    if (*oracle) return cmd_oracle(path, format, count, json);
    if (*sweep) return cmd_sweep(max_n, weak, tie_trials, jobs, graph6_file, json);
  } catch (const cg::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
