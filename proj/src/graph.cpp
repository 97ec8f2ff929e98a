#include "betti/graph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <istream>
#include <numeric>
#include <sstream>

namespace betti {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n), adj_(n >= 0 ? (size_t)n : 0) {
  if (n < 0 || n > kMaxVertices)
    throw SizeError("graph: vertex count " + std::to_string(n) + " out of range [0, 32]");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

VertexSet Graph::neighbors(int v) const {
  assert(v >= 0 && v < n_);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  return adj_[u].contains(v);
}

void Graph::add_edge(int u, int v) {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  assert(u != v);
  adj_[u] = adj_[u].with(v);
  adj_[v] = adj_[v].with(u);
}

int Graph::edge_count() const {
  int deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += adj_[v].size();
  return deg_sum / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].size());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : (adj_[u] - VertexSet::first_n(u + 1)).elements())
      out.emplace_back(u, v);
  return out;
}

// graph6 pair order is column-major on the upper triangle:
// x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) ...
static std::pair<int, int> graph6_pair(int bit) {
  int v = 1;
  while (v * (v + 1) / 2 <= bit) ++v;
  return {bit - v * (v - 1) / 2, v};
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw FormatError("graph6: empty input", 0);
  unsigned h = (unsigned char)line[0];
  if (h == 126) throw SizeError("graph6: long form header (n > 62) not supported, cap is 32");
  if (h < 63 || h > 126)
    throw FormatError("graph6: malformed header byte at offset 0", 0);
  int n = (int)h - 63;
  if (n > kMaxVertices)
    throw SizeError("graph6: vertex count " + std::to_string(n) + " exceeds cap 32");
  int nbits = n * (n - 1) / 2;
  size_t nbytes = (size_t)(nbits + 5) / 6;
  if (line.size() < 1 + nbytes)
    throw FormatError("graph6: truncated bit field at offset " + std::to_string(line.size()),
                      line.size());
  if (line.size() > 1 + nbytes)
    throw FormatError("graph6: trailing garbage at offset " + std::to_string(1 + nbytes),
                      1 + nbytes);
  Graph g(n);
  int bit = 0;
  for (size_t i = 0; i < nbytes; ++i) {
    unsigned c = (unsigned char)line[1 + i];
    if (c < 63 || c > 126)
      throw FormatError("graph6: invalid data byte at offset " + std::to_string(1 + i), 1 + i);
    unsigned val = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      bool on = (val >> k) & 1u;
      if (bit < nbits) {
        if (on) {
          auto [u, v] = graph6_pair(bit);
          g.add_edge(u, v);
        }
      } else if (on) {
        throw FormatError("graph6: nonzero padding bit at offset " + std::to_string(1 + i), 1 + i);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out += (char)(n + 63);
  int nbits = n * (n - 1) / 2;
  unsigned acc = 0;
  int filled = 0;
  for (int bit = 0; bit < nbits; ++bit) {
    auto [u, v] = graph6_pair(bit);
    acc = (acc << 1) | (g.has_edge(u, v) ? 1u : 0u);
    if (++filled == 6) {
      out += (char)(acc + 63);
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) out += (char)((acc << (6 - filled)) + 63);
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '>') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    } catch (const SizeError& e) {
      throw SizeError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  if (!(in >> n)) throw FormatError("edge list: missing vertex count", 0);
  if (n < 0 || n > kMaxVertices)
    throw SizeError("edge list: vertex count " + std::to_string(n) + " out of range [0, 32]");
  Graph g((int)n);
  auto pos = [&]() { return in.tellg() < 0 ? text.size() : (size_t)in.tellg(); };
  long long u;
  while (in >> u) {
    long long v;
    if (!(in >> v)) {
      if (in.eof()) throw FormatError("edge list: dangling endpoint", pos());
      throw FormatError("edge list: unreadable token", pos());
    }
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw FormatError("edge list: vertex out of range: " + std::to_string(u) + " " +
                            std::to_string(v),
                        pos());
    if (u == v) throw FormatError("edge list: loop at vertex " + std::to_string(u), pos());
    g.add_edge((int)u, (int)v);
  }
  if (!in.eof()) throw FormatError("edge list: unreadable token", pos());
  return g;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  assert(w.subset_of(g.vertices()));
  std::array<int, kMaxVertices> relabel{};
  int m = 0;
  for (int v : w.elements()) relabel[v] = m++;
  Graph h(m);
  for (int v : w.elements())
    for (int u : (g.neighbors(v) & w).elements()) {
      if (u >= v) break;
      h.add_edge(relabel[u], relabel[v]);
    }
  return h;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

void for_each_matching(const Graph& g, int r,
                       const std::function<void(const Matching&)>& fn) {
  assert(r >= 1);
  const auto es = g.edges();
  Matching cur;
  cur.edges.reserve(r);
  auto rec = [&](auto&& self, size_t start) -> void {
    if ((int)cur.edges.size() == r) {
      fn(cur);
      return;
    }
    int missing = r - (int)cur.edges.size();
    for (size_t i = start; i + missing <= es.size(); ++i) {
      auto [u, v] = es[i];
      if (cur.support.contains(u) || cur.support.contains(v)) continue;
      cur.edges.push_back(es[i]);
      cur.support = cur.support.with(u).with(v);
      self(self, i + 1);
      cur.support = cur.support.without(u).without(v);
      cur.edges.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<Matching> enumerate_matchings(const Graph& g, int r) {
  std::vector<Matching> out;
  for_each_matching(g, r, [&](const Matching& m) { out.push_back(m); });
  return out;
}

static int edges_within(const Graph& g, VertexSet s) {
  int deg_sum = 0;
  for (int v : s.elements()) deg_sum += (g.neighbors(v) & s).size();
  return deg_sum / 2;
}

long long count_induced_matchings(const Graph& g, int a) {
  assert(a >= 1);
  long long count = 0;
  for_each_matching(g, a, [&](const Matching& m) {
    if (edges_within(g, m.support) == a) ++count;
  });
  return count;
}

// Upper-triangle bits packed with x(0,1) most significant, graph6 pair order.
static std::uint64_t upper_bits_permuted(const Graph& g, const int* perm) {
  std::uint64_t bits = 0;
  int n = g.vertex_count();
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      bits = (bits << 1) | (g.has_edge(perm[u], perm[v]) ? 1u : 0u);
  return bits;
}

static Graph graph_from_upper_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  int pos = nbits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      --pos;
      if ((bits >> pos) & 1u) g.add_edge(u, v);
    }
  return g;
}

static std::uint64_t canonical_upper_bits(const Graph& g) {
  int n = g.vertex_count();
  int perm[8];
  std::iota(perm, perm + n, 0);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, upper_bits_permuted(g, perm));
  } while (std::next_permutation(perm, perm + n));
  return best;
}

std::string canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n > 8) throw SizeError("canonical_form: brute-force relabeling capped at n <= 8");
  std::uint64_t bits = canonical_upper_bits(g);
  std::string out;
  out += (char)n;
  for (int shift = 24; shift >= 0; shift -= 8) out += (char)((bits >> shift) & 0xff);
  return out;
}

void for_each_graph_class(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 6)
    throw SizeError("graph class enumeration capped at n <= 6 (use graph6 corpora beyond)");
  int nbits = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (1ull << nbits); ++m) {
    Graph g = graph_from_upper_bits(n, m);
    // keep only the least labeled graph of each class
    if (canonical_upper_bits(g) == m) fn(g);
  }
}

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<Graph> out;
  for_each_graph_class(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace betti
