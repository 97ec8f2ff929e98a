#include "betti/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace betti {

namespace {

void process_one(const Graph& g, const RunConfig& cfg, GraphOutcome& out) {
  out.g6 = to_graph6(g);
  CheckOptions opts;
  opts.r_max = cfg.r_max;
  opts.mv_samples = cfg.mv_samples;
  opts.seed = cfg.seed;
  opts.laws = cfg.laws;
  if (cfg.budget_per_graph)
    opts.deadline = std::chrono::steady_clock::now() + *cfg.budget_per_graph;
  try {
    for (auto p : cfg.fields) {
      FieldChar field(p);
      TableOptions topt;
      topt.deadline = opts.deadline;
      BettiTable table = betti_table(g, field, topt);
      ShiftVector shifts = max_shifts(table);
      out.shifts.emplace_back(p, shifts);
      auto reports = run_laws(g, table, shifts, opts);
      out.reports.insert(out.reports.end(), reports.begin(), reports.end());
    }
    std::sort(out.reports.begin(), out.reports.end(),
              [](const CheckReport& a, const CheckReport& b) {
                return std::tie(a.p, a.law) < std::tie(b.p, b.law);
              });
  } catch (const BudgetError&) {
    out.skipped = true;
    out.reports.clear();
    out.shifts.clear();
  } catch (const std::exception& e) {
    out.error = e.what();
    out.reports.clear();
    out.shifts.clear();
  }
}

void fold_shift_stats(const GraphOutcome& out, ScanSummary& sum) {
  for (auto& [p, t] : out.shifts) {
    ShiftStats& st = sum.field_stats[p];
    for (int b = 1; b <= t.pd(); ++b) {
      st.pd_ge[b] += 1;
      if (t.t[b] >= ceil_3b_over_2(b)) st.hyp_ceil[b] += 1;
      if (t.t[b] < 2 * b) st.below_double[b] += 1;
      if (t.t[b] == 2 * b) {
        auto& rec = st.attain_double[b];
        rec.count += 1;
        if (rec.examples.size() < 3) rec.examples.push_back(out.g6);
      }
      if (t.t[b] == ceil_3b_over_2(b)) {
        auto& rec = st.attain_ceil[b];
        rec.count += 1;
        if (rec.examples.size() < 3) rec.examples.push_back(out.g6);
      }
    }
  }
}

}  // namespace

ScanResult scan_corpus(const std::vector<Graph>& graphs, const RunConfig& cfg) {
  for (auto& id : cfg.laws)
    if (!is_known_law(id)) throw std::invalid_argument("unknown law id: " + id);
  for (auto p : cfg.fields) FieldChar{p};  // validate up front

  auto start = std::chrono::steady_clock::now();
  ScanResult res;
  res.outcomes.resize(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) res.outcomes[i].index = i;

  const int threads = std::max(1, cfg.threads);
  if (threads == 1 || graphs.size() <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      process_one(graphs[i], cfg, res.outcomes[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= graphs.size()) return;
          process_one(graphs[i], cfg, res.outcomes[i]);
        }
      });
    for (auto& th : pool) th.join();
  }

  // single deterministic fold in input order
  ScanSummary& sum = res.summary;
  const std::vector<std::string> selected = cfg.laws.empty() ? law_registry() : cfg.laws;
  for (const GraphOutcome& out : res.outcomes) {
    if (!out.error.empty()) {
      sum.graphs_errored += 1;
      continue;
    }
    sum.graphs += 1;
    if (out.skipped) {
      sum.graphs_skipped += 1;
      for (auto& id : selected) sum.law_tallies[id].skipped += (long long)cfg.fields.size();
      continue;
    }
    for (const CheckReport& r : out.reports) {
      LawTally& tally = sum.law_tallies[r.law];
      if (r.status == LawStatus::pass) tally.pass += 1;
      else if (r.status == LawStatus::fail) tally.fail += 1;
      else tally.not_applicable += 1;
    }
    fold_shift_stats(out, sum);
  }
  sum.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return res;
}

}  // namespace betti
