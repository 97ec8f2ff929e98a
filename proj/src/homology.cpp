#include "betti/homology.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace betti {

FieldChar::FieldChar(std::uint32_t p) : p_(p) {
  if (p < 2 || p > 46337)
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " outside [2, 46337]");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
}

FaceBasis independent_sets_of_size(const Graph& g, int k) {
  int n = g.vertex_count();
  assert(k >= 0 && k <= n);
  FaceBasis out{k, {}};
  if (k == 0) {
    out.faces.push_back(VertexSet{});
    return out;
  }
  VertexSet cur;
  auto rec = [&](auto&& self, int start, int chosen) -> void {
    if (chosen == k) {
      out.faces.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - chosen); ++v) {
      if (!(g.neighbors(v) & cur).empty()) continue;
      cur = cur.with(v);
      self(self, v + 1, chosen + 1);
      cur = cur.without(v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

GfMatrix::GfMatrix(FieldChar field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  assert(rows >= 0 && cols >= 0);
  if (field_.p() == 2)
    bit_rows_.assign((size_t)rows_ * words_, 0);
  else
    val_rows_.assign((size_t)rows_ * cols_, 0);
}

void GfMatrix::set(int r, int c, long long value) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  long long p = field_.p();
  std::uint32_t v = (std::uint32_t)(((value % p) + p) % p);
  if (field_.p() == 2) {
    std::uint64_t& w = bit_rows_[(size_t)r * words_ + c / 64];
    std::uint64_t bit = 1ull << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  } else {
    val_rows_[(size_t)r * cols_ + c] = (std::uint16_t)v;
  }
}

std::uint32_t GfMatrix::get(int r, int c) const {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
  if (field_.p() == 2)
    return (bit_rows_[(size_t)r * words_ + c / 64] >> (c % 64)) & 1u;
  return val_rows_[(size_t)r * cols_ + c];
}

int rank_mod_p(GfMatrix m) {
  const int rows = m.rows_, cols = m.cols_;
  int rank = 0;
  if (m.field_.p() == 2) {
    const int words = m.words_;
    auto row = [&](int r) { return m.bit_rows_.data() + (size_t)r * words; };
    for (int col = 0; col < cols && rank < rows; ++col) {
      const int w = col / 64;
      const std::uint64_t bit = 1ull << (col % 64);
      int pivot = rank;
      while (pivot < rows && !(row(pivot)[w] & bit)) ++pivot;
      if (pivot == rows) continue;
      if (pivot != rank)
        std::swap_ranges(row(pivot), row(pivot) + words, row(rank));
      for (int r = rank + 1; r < rows; ++r)
        if (row(r)[w] & bit)
          for (int k = w; k < words; ++k) row(r)[k] ^= row(rank)[k];
      ++rank;
    }
    return rank;
  }
  const std::uint64_t p = m.field_.p();
  auto at = [&](int r, int c) -> std::uint16_t& {
    return m.val_rows_[(size_t)r * cols + c];
  };
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    const std::uint64_t pv = at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = at(r, col);
      if (f == 0) continue;
      // row_r := pv*row_r - f*row_rank; scaling by pv != 0 keeps the rank
      for (int c = col; c < cols; ++c) {
        std::uint64_t x = (pv * at(r, c) + (p - 1) * ((f * at(rank, c)) % p)) % p;
        at(r, c) = (std::uint16_t)x;
      }
    }
    ++rank;
  }
  return rank;
}

GfMatrix boundary_matrix(const FaceBasis& lower, const FaceBasis& upper, FieldChar field) {
  assert(upper.k == lower.k + 1 && upper.k >= 1);
  GfMatrix m(field, (int)lower.faces.size(), (int)upper.faces.size());
  // mask -> row index, binary search on the numerically sorted copy
  std::vector<std::pair<std::uint32_t, int>> index;
  index.reserve(lower.faces.size());
  for (int r = 0; r < (int)lower.faces.size(); ++r)
    index.emplace_back(lower.faces[r].bits, r);
  std::sort(index.begin(), index.end());
  auto row_of = [&](VertexSet f) {
    auto it = std::lower_bound(index.begin(), index.end(),
                               std::make_pair(f.bits, 0));
    assert(it != index.end() && it->first == f.bits);
    return it->second;
  };
  for (int c = 0; c < (int)upper.faces.size(); ++c) {
    VertexSet f = upper.faces[c];
    int t = 0;
    for (int v : f.elements()) {
      m.set(row_of(f.without(v)), c, (t % 2 == 0) ? 1 : -1);
      ++t;
    }
  }
  return m;
}

GfMatrix boundary_matrix(const Graph& g, int k, FieldChar field) {
  assert(k >= 1);
  return boundary_matrix(independent_sets_of_size(g, k - 1),
                         independent_sets_of_size(g, k), field);
}

long long ReducedBettiVector::reduced_euler() const {
  long long chi = 0;
  for (int idx = 0; idx < (int)values.size(); ++idx)
    chi += (idx % 2 == 0 ? -1 : 1) * values[idx];  // idx 0 is degree -1
  return chi;
}

ReducedBettiVector reduced_betti_vector(const Graph& g, FieldChar field) {
  int n = g.vertex_count();
  ReducedBettiVector out{field, {}};
  if (n == 0) {
    out.values = {1};  // the empty complex: only the (-1)-dimensional face
    return out;
  }
  std::vector<FaceBasis> bases;
  bases.push_back(FaceBasis{0, {VertexSet{}}});
  for (int k = 1; k <= n; ++k) {
    FaceBasis fb = independent_sets_of_size(g, k);
    if (fb.faces.empty()) break;
    bases.push_back(std::move(fb));
  }
  const int top = (int)bases.size() - 1;  // independence number, >= 1
  std::vector<int> ranks(top + 3, 0);
  for (int k = 1; k <= top; ++k)
    ranks[k] = rank_mod_p(boundary_matrix(bases[k - 1], bases[k], field));
  out.values.resize(top + 1);
  long long alternating = 0, chi = 0;
  for (int d = -1; d <= top - 1; ++d) {
    long long f = (long long)bases[d + 1].faces.size();
    long long b = f - ranks[d + 1] - ranks[d + 2];
    if (b < 0) throw std::logic_error("homology: negative rank-nullity result");
    out.values[d + 1] = b;
    alternating += (d % 2 == 0 ? 1 : -1) * b;
    chi += (d % 2 == 0 ? 1 : -1) * f;
  }
  // cheap self-check: both routes must give the reduced Euler characteristic
  if (alternating != chi)
    throw std::logic_error("homology: Euler characteristic mismatch");
  return out;
}

long long reduced_euler_characteristic(const Graph& g) {
  int n = g.vertex_count();
  long long chi = -1;  // the empty face
  for (int k = 1; k <= n; ++k) {
    FaceBasis fb = independent_sets_of_size(g, k);
    if (fb.faces.empty()) break;
    chi += (k % 2 == 1 ? 1 : -1) * (long long)fb.faces.size();
  }
  return chi;
}

bool is_cone(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace betti
