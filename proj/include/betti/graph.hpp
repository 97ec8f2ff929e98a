#pragma once

#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betti/errors.hpp"
#include "betti/vertex_set.hpp"

namespace betti {

inline constexpr int kMaxVertices = 32;

// Simple undirected graph on {0, ..., n-1}; one adjacency row per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  VertexSet neighbors(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  int max_degree() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // loops rejected; duplicates collapse
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// graph6, short form only (n <= 32 here). Malformed input raises FormatError
// with the offending byte offset; n > 32 raises SizeError.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// One graph per line; blank lines and lines starting with '>' are skipped.
// Errors are rethrown with the 1-based line number prefixed.
std::vector<Graph> read_graph6_stream(std::istream& in);

// "n  u v  u v ...", whitespace-separated, duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

Graph induced_subgraph(const Graph& g, VertexSet w);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

struct Matching {
  std::vector<std::pair<int, int>> edges;
  VertexSet support;
};

// All matchings of exactly r edges, each emitted once (edge lists ascend in
// the graph's edge order).
void for_each_matching(const Graph& g, int r,
                       const std::function<void(const Matching&)>& fn);
std::vector<Matching> enumerate_matchings(const Graph& g, int r);

// Matchings of size a whose endpoint set induces no extra edge.
long long count_induced_matchings(const Graph& g, int a);

// Isomorphism-invariant key: equal strings iff isomorphic. Brute force over
// all vertex relabelings, so capped at n <= 8.
std::string canonical_form(const Graph& g);

// One representative per isomorphism class on exactly n vertices (the
// lexicographically least labeled graph). Brute force; capped at n <= 6.
void for_each_graph_class(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(int n);

}  // namespace betti
