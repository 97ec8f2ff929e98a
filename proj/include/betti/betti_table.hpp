#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "betti/graph.hpp"
#include "betti/homology.hpp"

namespace betti {

// Cap for the full 2^n sweep; beyond this the run refuses rather than hang.
inline constexpr int kMaxTableVertices = 22;

// Graded Betti numbers of the quotient by the edge ideal. Entry (i, j) maps
// to beta_{i,j}; absent means zero. Row 0 is the single entry (0,0) -> 1.
struct BettiTable {
  int n = 0;
  FieldChar field{2};
  std::map<std::pair<int, int>, long long> entries;
  int pd = 0;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// t_i = max { j : beta_{i,j} != 0 }, i = 0 .. pd.
struct ShiftVector {
  std::vector<int> t;
  int pd() const { return (int)t.size() - 1; }
};

// One vertex subset certifying beta_{i,j} != 0, with its homology degree.
struct Witness {
  int i = 0;
  int j = 0;
  VertexSet w;
  int d = 0;
};

struct TableOptions {
  bool prune = true;   // skip subsets whose induced graph has an isolated vertex
  int threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Sum of reduced homology of induced independence complexes over all vertex
// subsets, bucketed by (|W| - d - 1, |W|). Deadline overruns raise
// BudgetError; n > 22 raises SizeError. Output is identical for any thread
// count and with pruning on or off.
BettiTable betti_table(const Graph& g, FieldChar field, const TableOptions& opts = {});

ShiftVector max_shifts(const BettiTable& t);

// All subsets of size t_i whose induced complex has nonzero homology in the
// matching degree; requires 1 <= i <= pd.
std::vector<Witness> witnesses(const Graph& g, int i, FieldChar field);

// Rows i with an entry at column offset j_off: { i : beta_{i,i+j_off} != 0 }.
std::set<int> strand(const BettiTable& t, int j_off);

// Consistency checks an engine-produced table must satisfy; throws
// std::logic_error naming the first failure.
void validate(const BettiTable& t);

// Canonical text form: "n <n>\np <p>\npd <pd>\n" then one "i j value" line
// per entry in row-major order. table_from_text accepts the same format
// (including deliberately invalid tables used as checker fixtures).
std::string to_text(const BettiTable& t);
BettiTable table_from_text(std::string_view text);

}  // namespace betti
