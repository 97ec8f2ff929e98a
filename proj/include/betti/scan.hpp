#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "betti/laws.hpp"

namespace betti {

struct RunConfig {
  std::vector<std::uint32_t> fields = {2};
  std::vector<std::string> laws;  // empty = all
  int r_max = 8;
  int mv_samples = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  std::optional<std::chrono::milliseconds> budget_per_graph;
};

struct LawTally {
  long long pass = 0, fail = 0, not_applicable = 0, skipped = 0;
  long long total() const { return pass + fail + not_applicable + skipped; }
};

struct ExtremalRecord {
  long long count = 0;
  std::vector<std::string> examples;  // first few graph6 strings, input order
};

// Distribution of maximal shifts for one coefficient field.
struct ShiftStats {
  std::map<int, long long> pd_ge;          // graphs with pd >= b
  std::map<int, long long> hyp_ceil;       // t_b >= ceil(3b/2)
  std::map<int, long long> below_double;   // t_b < 2b
  std::map<int, ExtremalRecord> attain_double;  // t_b = 2b
  std::map<int, ExtremalRecord> attain_ceil;    // t_b = ceil(3b/2)
};

struct ScanSummary {
  long long graphs = 0;          // processed (including skipped)
  long long graphs_skipped = 0;  // budget ran out
  long long graphs_errored = 0;  // filled in by callers that tolerate bad input
  std::map<std::string, LawTally> law_tallies;
  std::map<std::uint32_t, ShiftStats> field_stats;
  std::chrono::microseconds elapsed{0};
};

struct GraphOutcome {
  std::size_t index = 0;
  std::string g6;
  std::vector<CheckReport> reports;  // sorted by (p, law id)
  std::vector<std::pair<std::uint32_t, ShiftVector>> shifts;  // per field
  bool skipped = false;
  std::string error;  // engine-level failure, empty otherwise
};

struct ScanResult {
  ScanSummary summary;
  std::vector<GraphOutcome> outcomes;  // input order
};

// Checks every selected law on every graph. Work is split across threads by
// graph index; outcomes and summary are byte-for-byte independent of the
// thread count. A graph that blows its time budget is marked skipped and the
// scan continues.
ScanResult scan_corpus(const std::vector<Graph>& graphs, const RunConfig& cfg);

}  // namespace betti
