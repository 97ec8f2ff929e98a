#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "betti/json_io.hpp"
#include "betti/scan.hpp"

using namespace betti;

namespace {

struct InputOpts {
  std::string g6_path;
  std::string edges_path;
  std::vector<int> enums;
  bool any() const { return !g6_path.empty() || !edges_path.empty() || !enums.empty(); }
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--g6", in.g6_path, "graph6 file, one graph per line ('>' lines skipped)");
  cmd->add_option("--edges", in.edges_path, "edge list file: n then u v pairs");
  cmd->add_option("--enum", in.enums,
                  "all isomorphism classes on N vertices (N <= 6), repeatable");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// strict: any bad line aborts
std::vector<Graph> load_graphs(const InputOpts& in) {
  std::vector<Graph> out;
  if (!in.g6_path.empty()) {
    std::ifstream f(in.g6_path);
    if (!f) throw std::runtime_error("cannot open " + in.g6_path);
    auto gs = read_graph6_stream(f);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  if (!in.edges_path.empty()) out.push_back(parse_edge_list(slurp(in.edges_path)));
  for (int n : in.enums) {
    auto gs = enumerate_graphs(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  if (out.empty()) throw std::runtime_error("no input graphs: pass --g6, --edges, or --enum");
  return out;
}

// lenient variant for corpus scans: bad graph6 lines are logged and counted
std::vector<Graph> load_graphs_lenient(const InputOpts& in, long long& errored) {
  std::vector<Graph> out;
  if (!in.g6_path.empty()) {
    std::ifstream f(in.g6_path);
    if (!f) throw std::runtime_error("cannot open " + in.g6_path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '>') continue;
      try {
        out.push_back(parse_graph6(line));
      } catch (const std::exception& e) {
        std::cerr << in.g6_path << ":" << lineno << ": " << e.what() << "\n";
        ++errored;
      }
    }
  }
  if (!in.edges_path.empty()) out.push_back(parse_edge_list(slurp(in.edges_path)));
  for (int n : in.enums) {
    auto gs = enumerate_graphs(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  if (out.empty() && errored == 0)
    throw std::runtime_error("no input graphs: pass --g6, --edges, or --enum");
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("BETTILAB_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

std::vector<FieldChar> to_fields(std::vector<std::uint32_t> ps) {
  if (ps.empty()) ps = {2};
  std::vector<FieldChar> out;
  for (auto p : ps) out.push_back(FieldChar(p));
  return out;
}

// JSONL sink: --out file when given, stdout otherwise
struct LineSink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;
  explicit LineSink(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw std::runtime_error("cannot write " + path);
      os = file.get();
    }
  }
  void line(const nlohmann::json& j) { *os << j.dump() << "\n"; }
};

ShiftVector parse_shift_fixture(const std::string& text) {
  std::istringstream in(text);
  ShiftVector out;
  int v;
  while (in >> v) out.t.push_back(v);
  if (!in.eof() || out.t.empty())
    throw FormatError("fixture shifts: expected space-separated integers", 0);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded Betti tables of graph edge ideals, maximal shifts, and "
               "corpus-level checking of homological inequalities"};
  app.require_subcommand(1);

  // ---- betti ----
  auto* cmd_betti = app.add_subcommand("betti", "print the graded Betti table");
  InputOpts betti_in;
  add_input_flags(cmd_betti, betti_in);
  std::vector<std::uint32_t> betti_fields;
  cmd_betti->add_option("--field", betti_fields, "coefficient field characteristic, repeatable");
  bool betti_json = false;
  cmd_betti->add_flag("--json", betti_json, "emit one JSON object per table instead of text");
  int betti_threads = default_threads();
  cmd_betti->add_option("--threads", betti_threads, "worker threads for the subset sweep");

  // ---- shifts ----
  auto* cmd_shifts = app.add_subcommand("shifts", "print maximal shifts t_0 .. t_pd");
  InputOpts shifts_in;
  add_input_flags(cmd_shifts, shifts_in);
  std::vector<std::uint32_t> shifts_fields;
  cmd_shifts->add_option("--field", shifts_fields, "coefficient field characteristic, repeatable");
  int shifts_threads = default_threads();
  cmd_shifts->add_option("--threads", shifts_threads, "worker threads for the subset sweep");

  // ---- check ----
  auto* cmd_check = app.add_subcommand("check", "run law checks on each input graph");
  InputOpts check_in;
  add_input_flags(cmd_check, check_in);
  std::vector<std::uint32_t> check_fields;
  cmd_check->add_option("--field", check_fields, "coefficient field characteristic, repeatable");
  std::vector<std::string> check_laws;
  cmd_check->add_option("--laws", check_laws, "law ids to run (default: all)")->delimiter(',');
  int check_rmax = 8;
  cmd_check->add_option("--rmax", check_rmax, "largest matching size searched");
  int check_mv = 20;
  cmd_check->add_option("--mv-samples", check_mv, "cover instances sampled per graph");
  std::uint64_t check_seed = 1;
  cmd_check->add_option("--seed", check_seed, "seed for sampled checks");
  int check_threads = default_threads();
  cmd_check->add_option("--threads", check_threads, "worker threads for the subset sweep");
  std::string check_out;
  cmd_check->add_option("--out", check_out, "write JSONL reports here instead of stdout");
  std::string fixture_shifts;
  cmd_check->add_option("--fixture-shifts", fixture_shifts,
                        "testing hook: run shift laws on 't_0 t_1 ...' instead of a graph");
  std::string fixture_table;
  cmd_check->add_option("--fixture-table", fixture_table,
                        "testing hook: run table laws on a table file instead of a graph");

  // ---- scan ----
  auto* cmd_scan = app.add_subcommand("scan", "check a whole corpus and tally the results");
  InputOpts scan_in;
  add_input_flags(cmd_scan, scan_in);
  std::vector<std::uint32_t> scan_fields;
  cmd_scan->add_option("--field", scan_fields, "coefficient field characteristic, repeatable");
  std::vector<std::string> scan_laws;
  cmd_scan->add_option("--laws", scan_laws, "law ids to run (default: all)")->delimiter(',');
  int scan_rmax = 8;
  cmd_scan->add_option("--rmax", scan_rmax, "largest matching size searched");
  int scan_mv = 20;
  cmd_scan->add_option("--mv-samples", scan_mv, "cover instances sampled per graph");
  std::uint64_t scan_seed = 1;
  cmd_scan->add_option("--seed", scan_seed, "seed for sampled checks");
  int scan_threads = default_threads();
  cmd_scan->add_option("--threads", scan_threads, "graphs processed in parallel");
  long long scan_budget_ms = 0;
  cmd_scan->add_option("--budget-ms", scan_budget_ms, "per-graph time budget; overruns skip");
  std::string scan_out;
  cmd_scan->add_option("--out", scan_out, "write JSONL report lines here instead of stdout");
  bool scan_emit_all = false;
  cmd_scan->add_flag("--emit-all", scan_emit_all,
                     "emit every report line, not just failures/skips/errors");

  // ---- witness ----
  auto* cmd_witness = app.add_subcommand("witness", "subsets certifying the maximal shift t_i");
  InputOpts witness_in;
  add_input_flags(cmd_witness, witness_in);
  std::vector<std::uint32_t> witness_fields;
  cmd_witness->add_option("--field", witness_fields, "coefficient field characteristic");
  int witness_i = 0;
  cmd_witness->add_option("--i", witness_i, "homological index, 1 <= i <= pd")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_betti->parsed()) {
      auto graphs = load_graphs(betti_in);
      auto fields = to_fields(betti_fields);
      TableOptions topt;
      topt.threads = betti_threads;
      bool first = true;
      for (const Graph& g : graphs)
        for (FieldChar f : fields) {
          BettiTable t = betti_table(g, f, topt);
          if (betti_json) {
            std::cout << table_json(t).dump() << "\n";
          } else {
            if (!first) std::cout << "\n";
            std::cout << to_text(t);
          }
          first = false;
        }
      return 0;
    }

    if (cmd_shifts->parsed()) {
      auto graphs = load_graphs(shifts_in);
      auto fields = to_fields(shifts_fields);
      TableOptions topt;
      topt.threads = shifts_threads;
      for (const Graph& g : graphs)
        for (FieldChar f : fields) {
          ShiftVector s = max_shifts(betti_table(g, f, topt));
          for (int i = 0; i <= s.pd(); ++i) std::cout << (i ? " " : "") << s.t[i];
          std::cout << "\n";
        }
      return 0;
    }

    if (cmd_check->parsed()) {
      bool any_fail = false;
      LineSink sink(check_out);
      if (!fixture_shifts.empty() || !fixture_table.empty()) {
        if (check_in.any())
          throw std::runtime_error("fixtures and graph inputs are mutually exclusive");
        std::vector<CheckReport> reports;
        if (!fixture_shifts.empty()) {
          auto rs = check_shift_laws(parse_shift_fixture(fixture_shifts), check_laws);
          for (auto& r : rs) r.p = 0;  // synthetic, no field involved
          reports.insert(reports.end(), rs.begin(), rs.end());
        }
        if (!fixture_table.empty()) {
          auto rs = check_table_laws(table_from_text(slurp(fixture_table)), check_laws);
          reports.insert(reports.end(), rs.begin(), rs.end());
        }
        for (const CheckReport& r : reports) {
          sink.line(report_json(r, std::nullopt, true));
          any_fail |= r.status == LawStatus::fail;
        }
        return any_fail ? 1 : 0;
      }
      auto graphs = load_graphs(check_in);
      auto fields = to_fields(check_fields);
      CheckOptions opts;
      opts.r_max = check_rmax;
      opts.mv_samples = check_mv;
      opts.seed = check_seed;
      opts.threads = check_threads;
      opts.laws = check_laws;
      for (const Graph& g : graphs) {
        std::string g6 = to_graph6(g);
        for (const CheckReport& r : check_all(g, fields, opts)) {
          sink.line(report_json(r, g6, true));
          any_fail |= r.status == LawStatus::fail;
        }
      }
      return any_fail ? 1 : 0;
    }

    if (cmd_scan->parsed()) {
      long long parse_errors = 0;
      auto graphs = load_graphs_lenient(scan_in, parse_errors);
      RunConfig cfg;
      cfg.fields = scan_fields.empty() ? std::vector<std::uint32_t>{2} : scan_fields;
      cfg.laws = scan_laws;
      cfg.r_max = scan_rmax;
      cfg.mv_samples = scan_mv;
      cfg.seed = scan_seed;
      cfg.threads = scan_threads;
      if (scan_budget_ms > 0) cfg.budget_per_graph = std::chrono::milliseconds(scan_budget_ms);
      ScanResult res = scan_corpus(graphs, cfg);
      res.summary.graphs_errored += parse_errors;
      LineSink sink(scan_out);
      bool any_fail = false;
      for (const GraphOutcome& out : res.outcomes) {
        if (!out.error.empty()) {
          sink.line(nlohmann::json{{"schema_version", kSchemaVersion},
                                   {"graph6", out.g6},
                                   {"status", "error"},
                                   {"error", out.error}});
          continue;
        }
        if (out.skipped) {
          sink.line(nlohmann::json{
              {"schema_version", kSchemaVersion}, {"graph6", out.g6}, {"status", "skipped"}});
          continue;
        }
        for (const CheckReport& r : out.reports) {
          if (r.status == LawStatus::fail) any_fail = true;
          if (scan_emit_all || r.status == LawStatus::fail)
            sink.line(report_json(r, out.g6, false));
        }
      }
      std::cout << summary_json(res.summary).dump() << "\n";
      if (any_fail) return 1;
      return res.summary.graphs_errored > 0 ? 2 : 0;
    }

    if (cmd_witness->parsed()) {
      auto graphs = load_graphs(witness_in);
      auto fields = to_fields(witness_fields);
      for (const Graph& g : graphs)
        for (FieldChar f : fields)
          for (const Witness& w : witnesses(g, witness_i, f))
            std::cout << "W=" << to_string(w.w) << " d=" << w.d << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
