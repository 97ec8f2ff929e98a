#include "betti/json_io.hpp"

namespace betti {

using nlohmann::json;

json table_json(const BettiTable& t) {
  json entries = json::array();
  for (auto& [key, val] : t.entries) entries.push_back({key.first, key.second, val});
  return json{{"schema_version", kSchemaVersion},
              {"n", t.n},
              {"p", t.field.p()},
              {"pd", t.pd},
              {"entries", entries}};
}

static json vertex_list(VertexSet s) {
  json out = json::array();
  for (int v : s.elements()) out.push_back(v);
  return out;
}

static json violation_json(const Violation& v) {
  json out = json::object();
  if (v.a) out["a"] = *v.a;
  if (v.b) out["b"] = *v.b;
  if (v.i) out["i"] = *v.i;
  if (v.j) out["j"] = *v.j;
  if (v.d) out["d"] = *v.d;
  if (v.bound) out["bound"] = *v.bound;
  if (v.observed) out["observed"] = *v.observed;
  if (v.witness) out["witness"] = vertex_list(*v.witness);
  if (!v.witness_edges.empty()) {
    json es = json::array();
    for (auto& [a, b] : v.witness_edges) es.push_back({a, b});
    out["witness_edges"] = es;
  }
  if (v.v) out["v"] = *v.v;
  if (v.xs) out["xs"] = vertex_list(*v.xs);
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

json report_json(const CheckReport& r, const std::optional<std::string>& graph6,
                 bool include_elapsed) {
  json out{{"schema_version", kSchemaVersion},
           {"law", r.law},
           {"status", std::string(to_string(r.status))},
           {"p", r.p}};
  if (graph6) out["graph6"] = *graph6;
  if (r.violation) out["violation"] = violation_json(*r.violation);
  if (include_elapsed) out["elapsed_us"] = r.elapsed.count();
  return out;
}

static json int_map_json(const std::map<int, long long>& m) {
  json out = json::object();
  for (auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

static json extremal_json(const std::map<int, ExtremalRecord>& m) {
  json out = json::object();
  for (auto& [k, rec] : m)
    out[std::to_string(k)] = json{{"count", rec.count}, {"examples", rec.examples}};
  return out;
}

json summary_json(const ScanSummary& s) {
  json laws = json::object();
  for (auto& [id, tally] : s.law_tallies)
    laws[id] = json{{"pass", tally.pass},
                    {"fail", tally.fail},
                    {"not_applicable", tally.not_applicable},
                    {"skipped", tally.skipped}};
  json fields = json::object();
  for (auto& [p, st] : s.field_stats)
    fields[std::to_string(p)] = json{{"pd_ge", int_map_json(st.pd_ge)},
                                     {"t_ge_ceil3b2", int_map_json(st.hyp_ceil)},
                                     {"t_lt_2b", int_map_json(st.below_double)},
                                     {"attain_t_eq_2b", extremal_json(st.attain_double)},
                                     {"attain_t_eq_ceil3b2", extremal_json(st.attain_ceil)}};
  return json{{"schema_version", kSchemaVersion},
              {"graphs", s.graphs},
              {"graphs_skipped", s.graphs_skipped},
              {"graphs_errored", s.graphs_errored},
              {"laws", laws},
              {"fields", fields},
              {"elapsed_us", s.elapsed.count()}};
}

}  // namespace betti
