#include "naive_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace naive {

using betti::Graph;

static long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int rank_mod_p(std::vector<std::vector<long long>> m, std::uint32_t pp) {
  const long long p = pp;
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = pow_mod(m[rank][col], p - 2, p);
    for (size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv % p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long long f = m[r][col];
      if (f == 0) continue;
      for (size_t c = col; c < cols; ++c)
        m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return (int)rank;
}

static bool independent(const Graph& g, std::uint32_t s) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!((s >> u) & 1u)) continue;
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (((s >> v) & 1u) && g.has_edge(u, v)) return false;
  }
  return true;
}

// every independent subset of w, grouped by cardinality, ascending masks
static std::vector<std::vector<std::uint32_t>> faces_by_size(const Graph& g, std::uint32_t w) {
  std::vector<std::vector<std::uint32_t>> out((size_t)std::popcount(w) + 1);
  std::uint32_t sub = w;
  for (;;) {
    if (independent(g, sub)) out[(size_t)std::popcount(sub)].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & w;
  }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

static std::vector<std::vector<long long>> boundary(const std::vector<std::uint32_t>& lower,
                                                    const std::vector<std::uint32_t>& upper) {
  std::vector<std::vector<long long>> m(lower.size(),
                                        std::vector<long long>(upper.size(), 0));
  for (size_t c = 0; c < upper.size(); ++c) {
    std::uint32_t face = upper[c];
    int t = 0;
    for (int v = 0; v < 32; ++v) {
      if (!((face >> v) & 1u)) continue;
      std::uint32_t sub = face & ~(1u << v);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      assert(it != lower.end() && *it == sub);
      m[(size_t)(it - lower.begin())][c] = (t % 2 == 0) ? 1 : -1;
      ++t;
    }
  }
  return m;
}

std::vector<long long> reduced_betti_subset(const Graph& g, std::uint32_t w, std::uint32_t p) {
  if (w == 0) return {1};
  auto faces = faces_by_size(g, w);
  int top = (int)faces.size() - 1;
  while (top > 0 && faces[top].empty()) --top;
  std::vector<int> ranks(top + 3, 0);
  for (int k = 1; k <= top; ++k) ranks[k] = rank_mod_p(boundary(faces[k - 1], faces[k]), p);
  std::vector<long long> out(top + 1);
  for (int d = -1; d <= top - 1; ++d)
    out[d + 1] = (long long)faces[d + 1].size() - ranks[d + 1] - ranks[d + 2];
  return out;
}

std::vector<long long> reduced_betti(const Graph& g, std::uint32_t p) {
  return reduced_betti_subset(g, betti::VertexSet::first_n(g.vertex_count()).bits, p);
}

long long reduced_euler(const Graph& g, std::uint32_t w) {
  if (w == 0) return -1;
  auto faces = faces_by_size(g, w);
  long long chi = 0;
  for (size_t k = 0; k < faces.size(); ++k)
    chi += (k % 2 == 1 ? 1 : -1) * (long long)faces[k].size();
  return chi;
}

std::map<std::pair<int, int>, long long> betti_table(const Graph& g, std::uint32_t p) {
  std::map<std::pair<int, int>, long long> entries;
  entries[{0, 0}] = 1;
  const int n = g.vertex_count();
  for (std::uint32_t w = 1; w < (1u << n); ++w) {
    auto rb = reduced_betti_subset(g, w, p);
    const int size = std::popcount(w);
    for (int d = 0; d + 1 < (int)rb.size(); ++d)
      if (rb[d + 1] != 0) entries[{size - d - 1, size}] += rb[d + 1];
  }
  return entries;
}

}  // namespace naive
