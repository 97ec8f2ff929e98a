#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betti/betti_table.hpp"

namespace betti {

enum class LawStatus { pass, fail, not_applicable };
std::string_view to_string(LawStatus s);

inline int ceil_3b_over_2(int b) { return (3 * b + 1) / 2; }

// Everything needed to re-derive a failure by hand: the indices involved,
// the bound that was exceeded, and the combinatorial witness if one exists.
struct Violation {
  std::optional<int> a, b, i, j, d;
  std::optional<long long> bound, observed;
  std::optional<VertexSet> witness;
  std::vector<std::pair<int, int>> witness_edges;
  std::optional<int> v;
  std::optional<VertexSet> xs;
  std::string detail;
};

struct CheckReport {
  std::string law;
  LawStatus status = LawStatus::pass;
  std::optional<Violation> violation;  // present iff status == fail
  std::uint32_t p = 2;
  std::chrono::microseconds elapsed{0};
};

// t_{a+b} <= t_a + t_b over a, b >= 1, a + b <= pd (optionally b <= b_max).
CheckReport check_subadditivity(const ShiftVector& t, std::optional<int> b_max = {});

// beta_{i,i+j} = beta_{i,i+j+1} = 0 forces beta_{i+1,i+j+2} = 0.
CheckReport check_corner_vanishing(const BettiTable& t);

// { i : beta_{i,i+2} != 0 } must be a contiguous interval.
CheckReport check_strand_contiguity(const BettiTable& t);

// t_0 = 0 and i < t_i <= 2i for 1 <= i <= pd.
CheckReport check_taylor_bounds(const ShiftVector& t);

// For a >= 2 with t_a < 2a (or a beyond pd): every matching of r > a edges
// must put a vertex of degree >= 2 inside its endpoint graph. Matching sizes
// are searched up to r_max.
CheckReport check_matching_degree(const Graph& g, const ShiftVector& t, int a,
                                        int r_max = 8);

// For every a >= 2 with t_a < 2a: t_{a+b} <= t_a + ceil(3b/2) for all b >= 0
// with a + b <= pd. not_applicable when no a qualifies.
CheckReport check_halfshift_bound(const ShiftVector& t);

// For every b with t_b >= ceil(3b/2): t_{a+b} <= t_a + t_b whenever a+b <= pd.
CheckReport check_hypothesis_subadditivity(const ShiftVector& t);

// Subadditivity restricted to 1 <= b <= 4.
CheckReport check_b4_subadditivity(const ShiftVector& t);

// pd <= 9: full subadditivity outright. pd > 9: full subadditivity under the
// hypothesis t_j >= ceil(3j/2) for 5 <= j <= pd/2, else not_applicable.
CheckReport check_pd9(const ShiftVector& t);

// Rank inequality and Euler additivity for the cover of Ind(G[w]) by the
// deletions of v and of xs (a nonempty set of neighbors of v inside w).
// Bad (w, v, xs) raises std::invalid_argument.
CheckReport check_mayer_vietoris(const Graph& g, VertexSet w, int v, VertexSet xs,
                                 FieldChar field);

struct CheckOptions {
  int r_max = 8;
  int mv_samples = 20;
  std::uint64_t seed = 1;
  int threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::vector<std::string> laws;  // law ids; empty = all

  // Extra diagnostics for table invariants live in validate(); laws assume
  // their inputs came from the engine (or a deliberately broken fixture).
};

// Canonical law id order used for report emission.
const std::vector<std::string>& law_registry();
bool is_known_law(const std::string& id);

// Laws computable from a shift vector / table alone; used both by check_all
// and by synthetic fixtures.
std::vector<CheckReport> check_shift_laws(const ShiftVector& t,
                                          const std::vector<std::string>& laws = {});
std::vector<CheckReport> check_table_laws(const BettiTable& t,
                                          const std::vector<std::string>& laws = {});

// Full per-graph run for one field, given the table and shifts already
// computed for that field.
std::vector<CheckReport> run_laws(const Graph& g, const BettiTable& table,
                                  const ShiftVector& shifts, const CheckOptions& opts);

// Computes the table per field, then runs every selected law.
std::vector<CheckReport> check_all(const Graph& g, const std::vector<FieldChar>& fields,
                                   const CheckOptions& opts = {});

}  // namespace betti
