#include "betti/laws.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

namespace betti {

std::string_view to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  LawStatus status = LawStatus::pass;
  std::optional<Violation> violation;
};

template <class Body>
CheckReport timed(const char* law, Body&& body) {
  auto start = Clock::now();
  Outcome o = body();
  CheckReport r;
  r.law = law;
  r.status = o.status;
  r.violation = std::move(o.violation);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  assert((r.status == LawStatus::fail) == r.violation.has_value());
  return r;
}

Outcome fail(Violation v) { return {LawStatus::fail, std::move(v)}; }

// shared core: t_{a+b} <= t_a + t_b over 1 <= a, a+b <= pd, b in [1, b_cap]
std::optional<Violation> subadditivity_violation(const ShiftVector& t, int b_cap) {
  const int pd = t.pd();
  for (int a = 1; a + 1 <= pd; ++a)
    for (int b = 1; b <= std::min(b_cap, pd - a); ++b)
      if (t.t[a + b] > t.t[a] + t.t[b]) {
        Violation v;
        v.a = a;
        v.b = b;
        v.observed = t.t[a + b];
        v.bound = (long long)t.t[a] + t.t[b];
        v.detail = "t_" + std::to_string(a + b) + " exceeds t_" + std::to_string(a) + " + t_" +
                   std::to_string(b);
        return v;
      }
  return std::nullopt;
}

}  // namespace

CheckReport check_subadditivity(const ShiftVector& t, std::optional<int> b_max) {
  return timed("subadditivity", [&]() -> Outcome {
    auto v = subadditivity_violation(t, b_max.value_or(t.pd()));
    if (v) return fail(*v);
    return {};
  });
}

CheckReport check_b4_subadditivity(const ShiftVector& t) {
  return timed("b4-subadditivity", [&]() -> Outcome {
    auto v = subadditivity_violation(t, 4);
    if (v) return fail(*v);
    return {};
  });
}

CheckReport check_corner_vanishing(const BettiTable& t) {
  return timed("corner-vanishing", [&]() -> Outcome {
    int max_j = 0;
    for (auto& [key, val] : t.entries) max_j = std::max(max_j, key.second);
    for (int i = 0; i <= t.pd; ++i)
      for (int j = 0; j <= max_j; ++j)
        if (t.at(i, i + j) == 0 && t.at(i, i + j + 1) == 0 && t.at(i + 1, i + j + 2) != 0) {
          Violation v;
          v.i = i;
          v.j = j;
          v.observed = t.at(i + 1, i + j + 2);
          v.bound = 0;
          v.detail = "beta_{" + std::to_string(i) + "," + std::to_string(i + j) + "} and the " +
                     "next column vanish but beta_{" + std::to_string(i + 1) + "," +
                     std::to_string(i + j + 2) + "} does not";
          return fail(v);
        }
    return {};
  });
}

CheckReport check_strand_contiguity(const BettiTable& t) {
  return timed("strand-contiguity", [&]() -> Outcome {
    std::set<int> s = strand(t, 2);
    if (s.size() >= 2) {
      int prev = *s.begin();
      for (int i : s) {
        if (i > prev + 1) {
          Violation v;
          v.i = prev;
          v.j = i;
          v.detail = "degree-2 strand skips row " + std::to_string(prev + 1);
          return fail(v);
        }
        prev = i;
      }
    }
    return {};
  });
}

CheckReport check_taylor_bounds(const ShiftVector& t) {
  return timed("taylor-bounds", [&]() -> Outcome {
    if (t.t.empty() || t.t[0] != 0) {
      Violation v;
      v.i = 0;
      v.observed = t.t.empty() ? -1 : t.t[0];
      v.bound = 0;
      v.detail = "t_0 must be 0";
      return fail(v);
    }
    for (int i = 1; i <= t.pd(); ++i)
      if (t.t[i] <= i || t.t[i] > 2 * i) {
        Violation v;
        v.i = i;
        v.observed = t.t[i];
        v.bound = 2 * i;
        v.detail = "t_" + std::to_string(i) + " outside (i, 2i]";
        return fail(v);
      }
    return {};
  });
}

CheckReport check_matching_degree(const Graph& g, const ShiftVector& t, int a, int r_max) {
  assert(a >= 2);
  return timed("matching-degree", [&]() -> Outcome {
    // t_a = 2a means an induced a-matching exists and the hypothesis fails.
    // Beyond pd the row is zero, so the hypothesis automatically holds.
    if (a <= t.pd() && t.t[a] >= 2 * a) return {LawStatus::not_applicable, std::nullopt};
    const int r_hi = std::min(r_max, g.vertex_count() / 2);
    for (int r = a + 1; r <= r_hi; ++r) {
      std::optional<Violation> bad;
      for_each_matching(g, r, [&](const Matching& m) {
        if (bad) return;
        if (induced_subgraph(g, m.support).max_degree() < 2) {
          Violation v;
          v.a = a;
          v.b = r;
          v.witness = m.support;
          v.witness_edges = m.edges;
          v.detail = "matching of size " + std::to_string(r) +
                     " whose endpoint graph has maximum degree < 2";
          bad = v;
        }
      });
      if (bad) return fail(*bad);
    }
    return {};
  });
}

CheckReport check_halfshift_bound(const ShiftVector& t) {
  return timed("halfshift-bound", [&]() -> Outcome {
    const int pd = t.pd();
    bool any = false;
    for (int a = 2; a <= pd; ++a) {
      if (t.t[a] >= 2 * a) continue;
      any = true;
      for (int b = 0; a + b <= pd; ++b)
        if (t.t[a + b] > t.t[a] + ceil_3b_over_2(b)) {
          Violation v;
          v.a = a;
          v.b = b;
          v.observed = t.t[a + b];
          v.bound = (long long)t.t[a] + ceil_3b_over_2(b);
          v.detail = "t_" + std::to_string(a + b) + " exceeds t_" + std::to_string(a) +
                     " + ceil(3*" + std::to_string(b) + "/2)";
          return fail(v);
        }
    }
    if (!any) return {LawStatus::not_applicable, std::nullopt};
    return {};
  });
}

CheckReport check_hypothesis_subadditivity(const ShiftVector& t) {
  return timed("hypothesis-subadditivity", [&]() -> Outcome {
    const int pd = t.pd();
    for (int b = 1; b <= pd; ++b) {
      if (t.t[b] < ceil_3b_over_2(b)) continue;
      for (int a = 1; a + b <= pd; ++a)
        if (t.t[a + b] > t.t[a] + t.t[b]) {
          Violation v;
          v.a = a;
          v.b = b;
          v.observed = t.t[a + b];
          v.bound = (long long)t.t[a] + t.t[b];
          v.detail = "qualifying b (t_b >= ceil(3b/2)) but t_{a+b} > t_a + t_b";
          return fail(v);
        }
    }
    return {};
  });
}

CheckReport check_pd9(const ShiftVector& t) {
  return timed("pd9-subadditivity", [&]() -> Outcome {
    const int pd = t.pd();
    if (pd > 9) {
      for (int j = 5; j <= pd / 2; ++j)
        if (t.t[j] < ceil_3b_over_2(j)) return {LawStatus::not_applicable, std::nullopt};
    }
    auto v = subadditivity_violation(t, pd);
    if (v) return fail(*v);
    return {};
  });
}

CheckReport check_mayer_vietoris(const Graph& g, VertexSet w, int v, VertexSet xs,
                                 FieldChar field) {
  if (!w.subset_of(g.vertices()))
    throw std::invalid_argument("mayer-vietoris: w is not a vertex subset");
  if (v < 0 || v >= g.vertex_count() || !w.contains(v))
    throw std::invalid_argument("mayer-vietoris: v outside w");
  if (xs.empty() || !xs.subset_of(g.neighbors(v) & w))
    throw std::invalid_argument("mayer-vietoris: xs must be a nonempty set of neighbors of v in w");
  return timed("mayer-vietoris", [&]() -> Outcome {
    auto rb = [&](VertexSet s) {
      return reduced_betti_vector(induced_subgraph(g, s), field);
    };
    ReducedBettiVector whole = rb(w);
    ReducedBettiVector del_v = rb(w.without(v));
    ReducedBettiVector del_xs = rb(w - xs);
    ReducedBettiVector overlap = rb(w - (xs.with(v)));
    int top = std::max({whole.max_dim(), del_v.max_dim(), del_xs.max_dim(), overlap.max_dim() + 1});
    for (int d = -1; d <= top; ++d) {
      long long lhs = whole.at(d);
      long long rhs = del_v.at(d) + del_xs.at(d) + overlap.at(d - 1);
      if (lhs > rhs) {
        Violation out;
        out.d = d;
        out.observed = lhs;
        out.bound = rhs;
        out.witness = w;
        out.v = v;
        out.xs = xs;
        out.detail = "rank inequality fails in degree " + std::to_string(d);
        return fail(out);
      }
    }
    long long lhs = whole.reduced_euler();
    long long rhs = del_v.reduced_euler() + del_xs.reduced_euler() - overlap.reduced_euler();
    if (lhs != rhs) {
      Violation out;
      out.observed = lhs;
      out.bound = rhs;
      out.witness = w;
      out.v = v;
      out.xs = xs;
      out.detail = "Euler characteristic is not additive over the cover";
      return fail(out);
    }
    return {};
  });
}

const std::vector<std::string>& law_registry() {
  static const std::vector<std::string> ids = {
      "taylor-bounds",           "subadditivity",      "b4-subadditivity",
      "hypothesis-subadditivity", "halfshift-bound",   "pd9-subadditivity",
      "corner-vanishing",        "strand-contiguity",  "matching-degree",
      "mayer-vietoris",
  };
  return ids;
}

bool is_known_law(const std::string& id) {
  auto& reg = law_registry();
  return std::find(reg.begin(), reg.end(), id) != reg.end();
}

namespace {

bool selected(const std::vector<std::string>& laws, const char* id) {
  return laws.empty() || std::find(laws.begin(), laws.end(), id) != laws.end();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Aggregate over a = 2 .. max(2, pd); any fail wins, else pass unless every
// probe was gated off.
CheckReport matching_degree_all_a(const Graph& g, const ShiftVector& t, const CheckOptions& o) {
  CheckReport agg;
  agg.law = "matching-degree";
  bool any_applicable = false;
  for (int a = 2; a <= std::max(2, t.pd()); ++a) {
    CheckReport r = check_matching_degree(g, t, a, o.r_max);
    agg.elapsed += r.elapsed;
    if (r.status == LawStatus::fail) {
      agg.status = LawStatus::fail;
      agg.violation = r.violation;
      return agg;
    }
    if (r.status == LawStatus::pass) any_applicable = true;
  }
  agg.status = any_applicable ? LawStatus::pass : LawStatus::not_applicable;
  return agg;
}

// Deterministic per-graph sampling: the stream depends only on the graph and
// the configured seed, never on thread scheduling.
CheckReport mayer_vietoris_sampled(const Graph& g, FieldChar field, const CheckOptions& o) {
  CheckReport agg;
  agg.law = "mayer-vietoris";
  std::mt19937_64 rng(fnv1a(to_graph6(g)) ^ o.seed);
  int found = 0;
  auto start = Clock::now();
  for (int attempt = 0; attempt < o.mv_samples * 16 && found < o.mv_samples; ++attempt) {
    std::uint32_t w_bits = (std::uint32_t)rng() & g.vertices().bits;
    VertexSet w(w_bits);
    if (w.empty()) continue;
    std::vector<int> eligible;
    for (int v : w.elements())
      if (!(g.neighbors(v) & w).empty()) eligible.push_back(v);
    if (eligible.empty()) continue;
    int v = eligible[rng() % eligible.size()];
    VertexSet nb = g.neighbors(v) & w;
    VertexSet xs((std::uint32_t)rng() & nb.bits);
    if (xs.empty()) xs = VertexSet::single(nb.lowest());
    CheckReport r = check_mayer_vietoris(g, w, v, xs, field);
    ++found;
    if (r.status == LawStatus::fail) {
      agg.status = LawStatus::fail;
      agg.violation = r.violation;
      agg.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
      return agg;
    }
  }
  agg.status = found > 0 ? LawStatus::pass : LawStatus::not_applicable;
  agg.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return agg;
}

}  // namespace

std::vector<CheckReport> check_shift_laws(const ShiftVector& t,
                                          const std::vector<std::string>& laws) {
  std::vector<CheckReport> out;
  if (selected(laws, "taylor-bounds")) out.push_back(check_taylor_bounds(t));
  if (selected(laws, "subadditivity")) out.push_back(check_subadditivity(t));
  if (selected(laws, "b4-subadditivity")) out.push_back(check_b4_subadditivity(t));
  if (selected(laws, "hypothesis-subadditivity")) out.push_back(check_hypothesis_subadditivity(t));
  if (selected(laws, "halfshift-bound")) out.push_back(check_halfshift_bound(t));
  if (selected(laws, "pd9-subadditivity")) out.push_back(check_pd9(t));
  return out;
}

std::vector<CheckReport> check_table_laws(const BettiTable& t,
                                          const std::vector<std::string>& laws) {
  std::vector<CheckReport> out;
  if (selected(laws, "corner-vanishing")) out.push_back(check_corner_vanishing(t));
  if (selected(laws, "strand-contiguity")) out.push_back(check_strand_contiguity(t));
  for (auto& r : out) r.p = t.field.p();
  return out;
}

std::vector<CheckReport> run_laws(const Graph& g, const BettiTable& table,
                                  const ShiftVector& shifts, const CheckOptions& opts) {
  std::vector<CheckReport> out;
  for (const std::string& id : law_registry()) {
    if (!selected(opts.laws, id.c_str())) continue;
    if (id == "taylor-bounds") out.push_back(check_taylor_bounds(shifts));
    else if (id == "subadditivity") out.push_back(check_subadditivity(shifts));
    else if (id == "b4-subadditivity") out.push_back(check_b4_subadditivity(shifts));
    else if (id == "hypothesis-subadditivity") out.push_back(check_hypothesis_subadditivity(shifts));
    else if (id == "halfshift-bound") out.push_back(check_halfshift_bound(shifts));
    else if (id == "pd9-subadditivity") out.push_back(check_pd9(shifts));
    else if (id == "corner-vanishing") out.push_back(check_corner_vanishing(table));
    else if (id == "strand-contiguity") out.push_back(check_strand_contiguity(table));
    else if (id == "matching-degree") out.push_back(matching_degree_all_a(g, shifts, opts));
    else if (id == "mayer-vietoris") out.push_back(mayer_vietoris_sampled(g, table.field, opts));
  }
  for (auto& r : out) r.p = table.field.p();
  return out;
}

std::vector<CheckReport> check_all(const Graph& g, const std::vector<FieldChar>& fields,
                                   const CheckOptions& opts) {
  for (auto& id : opts.laws)
    if (!is_known_law(id)) throw std::invalid_argument("unknown law id: " + id);
  std::vector<CheckReport> out;
  for (FieldChar field : fields) {
    TableOptions topt;
    topt.threads = opts.threads;
    topt.deadline = opts.deadline;
    BettiTable table = betti_table(g, field, topt);
    ShiftVector shifts = max_shifts(table);
    auto reports = run_laws(g, table, shifts, opts);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  return out;
}

}  // namespace betti
