#include <algorithm>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "test_util.hpp"

#include "betti/laws.hpp"

using namespace betti;

static ShiftVector sv(std::vector<int> t) { return ShiftVector{std::move(t)}; }

static BettiTable fixture_table(int n, std::vector<std::tuple<int, int, long long>> rows) {
  BettiTable t;
  t.n = n;
  t.field = FieldChar(2);
  for (auto [i, j, v] : rows) {
    t.entries[{i, j}] = v;
    t.pd = std::max(t.pd, i);
  }
  return t;
}

TEST_CASE("registry") {
  const auto& reg = law_registry();
  CHECK(reg.size() == 10);
  for (const char* id :
       {"taylor-bounds", "subadditivity", "b4-subadditivity", "hypothesis-subadditivity",
        "halfshift-bound", "pd9-subadditivity", "corner-vanishing", "strand-contiguity",
        "matching-degree", "mayer-vietoris"})
    CHECK(is_known_law(id));
  CHECK(!is_known_law("subadditive"));
  CHECK(ceil_3b_over_2(0) == 0);
  CHECK(ceil_3b_over_2(1) == 2);
  CHECK(ceil_3b_over_2(2) == 3);
  CHECK(ceil_3b_over_2(3) == 5);
  CHECK(ceil_3b_over_2(4) == 6);
}

TEST_CASE("subadditivity checker") {
  CHECK(check_subadditivity(sv({0, 2, 3, 5})).status == LawStatus::pass);
  CHECK(check_subadditivity(sv({0})).status == LawStatus::pass);
  CheckReport r = check_subadditivity(sv({0, 2, 3, 6}));
  REQUIRE(r.status == LawStatus::fail);
  REQUIRE(r.violation.has_value());
  const Violation& v = *r.violation;
  CHECK(v.a == 1);
  CHECK(v.b == 2);
  CHECK(v.observed == 6);
  CHECK(v.bound == 5);
  std::vector<int> t = {0, 2, 3, 6};
  CHECK(t[*v.a + *v.b] > t[*v.a] + t[*v.b]);  // the violation re-checks
}

TEST_CASE("b4 matches subadditivity capped at four") {
  CHECK(check_b4_subadditivity(sv({0, 2, 3, 6})).status == LawStatus::fail);
  CHECK(check_b4_subadditivity(sv({0, 2, 3, 5})).status == LawStatus::pass);
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      ShiftVector t = max_shifts(betti_table(g, FieldChar(2)));
      CHECK(check_b4_subadditivity(t).status == check_subadditivity(t, 4).status);
    }
}

TEST_CASE("taylor bound checker") {
  CHECK(check_taylor_bounds(sv({0, 2, 4, 5})).status == LawStatus::pass);
  CHECK(check_taylor_bounds(sv({0})).status == LawStatus::pass);
  CheckReport high = check_taylor_bounds(sv({0, 3}));
  REQUIRE(high.status == LawStatus::fail);
  CHECK(high.violation->i == 1);
  CHECK(high.violation->observed == 3);
  CHECK(check_taylor_bounds(sv({0, 1})).status == LawStatus::fail);   // t_i <= i
  CHECK(check_taylor_bounds(sv({1, 2})).status == LawStatus::fail);   // t_0 != 0
  CHECK(check_taylor_bounds(sv({1, 2})).violation->i == 0);
}

TEST_CASE("halfshift checker") {
  CHECK(check_halfshift_bound(sv({0, 2, 3, 5})).status == LawStatus::pass);
  CHECK(check_halfshift_bound(sv({0, 2, 4})).status == LawStatus::not_applicable);
  CHECK(check_halfshift_bound(sv({0})).status == LawStatus::not_applicable);
  CheckReport r = check_halfshift_bound(sv({0, 2, 3, 7}));
  REQUIRE(r.status == LawStatus::fail);
  const Violation& v = *r.violation;
  CHECK(v.a == 2);
  CHECK(v.b == 1);
  CHECK(v.observed == 7);
  CHECK(v.bound == 5);
  std::vector<int> t = {0, 2, 3, 7};
  CHECK(t[*v.a] < 2 * *v.a);
  CHECK(t[*v.a + *v.b] > t[*v.a] + ceil_3b_over_2(*v.b));
}

TEST_CASE("hypothesis-gated subadditivity checker") {
  CHECK(check_hypothesis_subadditivity(sv({0, 2, 3, 5})).status == LawStatus::pass);
  CheckReport r = check_hypothesis_subadditivity(sv({0, 2, 4, 7}));
  REQUIRE(r.status == LawStatus::fail);
  const Violation& v = *r.violation;
  std::vector<int> t = {0, 2, 4, 7};
  CHECK(t[*v.b] >= ceil_3b_over_2(*v.b));        // b really qualifies
  CHECK(t[*v.a + *v.b] > t[*v.a] + t[*v.b]);     // and the bound really breaks
}

TEST_CASE("pd9 checker") {
  CHECK(check_pd9(sv({0, 2, 3, 5})).status == LawStatus::pass);
  CHECK(check_pd9(sv({0, 2, 3, 6})).status == LawStatus::fail);
  // pd = 10 but t_5 misses ceil(15/2): the gate disarms the check
  CHECK(check_pd9(sv({0, 2, 3, 5, 6, 7, 8, 9, 10, 11, 14})).status ==
        LawStatus::not_applicable);
  // same pd with t_5 = 8: armed, and t_10 = 20 > t_5 + t_5 = 16 fails
  CheckReport armed = check_pd9(sv({0, 2, 4, 6, 8, 8, 10, 12, 14, 16, 20}));
  REQUIRE(armed.status == LawStatus::fail);
  CHECK(*armed.violation->a + *armed.violation->b <= 10);
}

TEST_CASE("corner vanishing checker") {
  CHECK(check_corner_vanishing(
            fixture_table(5, {{0, 0, 1}, {1, 2, 5}, {2, 3, 5}, {3, 5, 1}}))
            .status == LawStatus::pass);
  CheckReport r =
      check_corner_vanishing(fixture_table(6, {{0, 0, 1}, {1, 2, 1}, {2, 5, 1}}));
  REQUIRE(r.status == LawStatus::fail);
  const Violation& v = *r.violation;
  CHECK(v.i == 1);
  CHECK(v.j == 2);
  BettiTable t = fixture_table(6, {{0, 0, 1}, {1, 2, 1}, {2, 5, 1}});
  CHECK(t.at(*v.i, *v.i + *v.j) == 0);
  CHECK(t.at(*v.i, *v.i + *v.j + 1) == 0);
  CHECK(t.at(*v.i + 1, *v.i + *v.j + 2) != 0);
}

TEST_CASE("strand contiguity checker") {
  CHECK(check_strand_contiguity(
            fixture_table(5, {{0, 0, 1}, {1, 3, 1}, {2, 4, 1}, {3, 5, 1}}))
            .status == LawStatus::pass);
  CheckReport r =
      check_strand_contiguity(fixture_table(6, {{0, 0, 1}, {1, 3, 1}, {3, 5, 1}}));
  REQUIRE(r.status == LawStatus::fail);
  CHECK(r.violation->i == 1);
  CHECK(r.violation->j == 3);
}

TEST_CASE("matching degree checker") {
  // three disjoint edges with understated shifts: the full matching is a
  // counterexample the checker must surface with its edges
  Graph g3 = matching_graph(3);
  CheckReport r = check_matching_degree(g3, sv({0, 2, 3, 5}), 2);
  REQUIRE(r.status == LawStatus::fail);
  const Violation& v = *r.violation;
  CHECK(v.a == 2);
  CHECK(v.b == 3);
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness_edges.size() == 3);
  VertexSet support;
  for (auto [x, y] : v.witness_edges) {
    CHECK(g3.has_edge(x, y));
    CHECK(!support.contains(x));
    CHECK(!support.contains(y));
    support = support.with(x).with(y);
  }
  CHECK(support == *v.witness);
  CHECK(induced_subgraph(g3, support).max_degree() < 2);

  // honest shifts for the same graph: t_2 = 4 gates the probe off
  CHECK(check_matching_degree(g3, sv({0, 2, 4, 6}), 2).status ==
        LawStatus::not_applicable);
  // beyond pd the hypothesis holds vacuously; no counterexample in C5
  CHECK(check_matching_degree(cycle_graph(5), sv({0, 2, 3, 5}), 4).status ==
        LawStatus::pass);
}

TEST_CASE("mayer-vietoris checker") {
  Graph k2 = path_graph(2);
  CheckReport r =
      check_mayer_vietoris(k2, VertexSet::first_n(2), 0, VertexSet::single(1), FieldChar(2));
  CHECK(r.status == LawStatus::pass);

  Graph c5 = cycle_graph(5);
  for (std::uint32_t p : {2u, 3u}) {
    CheckReport full = check_mayer_vietoris(c5, VertexSet::first_n(5), 0,
                                            c5.neighbors(0), FieldChar(p));
    CHECK(full.status == LawStatus::pass);
    CheckReport one = check_mayer_vietoris(c5, VertexSet::first_n(5), 0,
                                           VertexSet::single(1), FieldChar(p));
    CHECK(one.status == LawStatus::pass);
  }

  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(check_mayer_vietoris(p3, VertexSet(0b1011), 0, VertexSet::single(1),
                                       FieldChar(2)),
                  std::invalid_argument);  // w reaches past the vertex set
  CHECK_THROWS_AS(check_mayer_vietoris(p3, VertexSet(0b110), 0, VertexSet::single(1),
                                       FieldChar(2)),
                  std::invalid_argument);  // v outside w
  CHECK_THROWS_AS(check_mayer_vietoris(p3, VertexSet(0b111), 0, VertexSet(0), FieldChar(2)),
                  std::invalid_argument);  // xs empty
  CHECK_THROWS_AS(check_mayer_vietoris(p3, VertexSet(0b111), 0, VertexSet::single(2),
                                       FieldChar(2)),
                  std::invalid_argument);  // xs not neighbors of v
}

TEST_CASE("shift fixture bundles") {
  auto reports = check_shift_laws(sv({0, 2, 3, 6}));
  REQUIRE(reports.size() == 6);
  std::map<std::string, LawStatus> by_law;
  for (const auto& r : reports) by_law[r.law] = r.status;
  CHECK(by_law.at("taylor-bounds") == LawStatus::pass);
  CHECK(by_law.at("subadditivity") == LawStatus::fail);
  CHECK(by_law.at("b4-subadditivity") == LawStatus::fail);
  CHECK(by_law.at("hypothesis-subadditivity") == LawStatus::fail);
  CHECK(by_law.at("halfshift-bound") == LawStatus::fail);
  CHECK(by_law.at("pd9-subadditivity") == LawStatus::fail);

  auto only = check_shift_laws(sv({0, 2, 3, 6}), {"taylor-bounds", "subadditivity"});
  REQUIRE(only.size() == 2);
  CHECK(only[0].law == "taylor-bounds");
  CHECK(only[1].law == "subadditivity");
}

TEST_CASE("table fixture bundles") {
  BettiTable bad = fixture_table(6, {{0, 0, 1}, {1, 3, 1}, {3, 5, 1}});
  auto reports = check_table_laws(bad);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].law == "corner-vanishing");
  CHECK(reports[1].law == "strand-contiguity");
  CHECK(reports[1].status == LawStatus::fail);
  for (const auto& r : reports) CHECK(r.p == 2);
}

TEST_CASE("full run on honest graphs") {
  CheckOptions opts;
  auto reports = check_all(cycle_graph(5), {FieldChar(2), FieldChar(3)}, opts);
  REQUIRE(reports.size() == 20);
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].law == law_registry()[i % 10]);
    CHECK(reports[i].p == (i < 10 ? 2u : 3u));
    CHECK(reports[i].status == LawStatus::pass);
  }

  auto edgeless = check_all(Graph(3), {FieldChar(2)}, opts);
  std::map<std::string, LawStatus> by_law;
  for (const auto& r : edgeless) by_law[r.law] = r.status;
  CHECK(by_law.at("halfshift-bound") == LawStatus::not_applicable);
  CHECK(by_law.at("mayer-vietoris") == LawStatus::not_applicable);
  CHECK(by_law.at("subadditivity") == LawStatus::pass);

  auto two_k2 = check_all(matching_graph(2), {FieldChar(2)}, opts);
  for (const auto& r : two_k2) {
    if (r.law == "matching-degree" || r.law == "halfshift-bound")
      CHECK(r.status == LawStatus::not_applicable);
    else
      CHECK(r.status != LawStatus::fail);
  }

  CheckOptions bad;
  bad.laws = {"no-such-law"};
  CHECK_THROWS_AS(check_all(cycle_graph(5), {FieldChar(2)}, bad), std::invalid_argument);
}

TEST_CASE("mayer-vietoris sampling is deterministic per seed") {
  CheckOptions opts;
  opts.laws = {"mayer-vietoris"};
  std::mt19937 rng(139);
  for (int iter = 0; iter < 10; ++iter) {
    Graph g = random_graph(rng, 7, 0.4);
    auto a = check_all(g, {FieldChar(2)}, opts);
    auto b = check_all(g, {FieldChar(2)}, opts);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].status == b[0].status);
    CHECK(a[0].status != LawStatus::fail);
  }
}
