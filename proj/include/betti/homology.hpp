#pragma once

#include <cstdint>
#include <vector>

#include "betti/graph.hpp"

namespace betti {

// Prime field characteristic. 46337 is the largest prime whose square stays
// below 2^31, so products of two reduced entries always fit 32 bits.
class FieldChar {
public:
  explicit FieldChar(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  friend bool operator==(FieldChar a, FieldChar b) { return a.p_ == b.p_; }
  friend bool operator!=(FieldChar a, FieldChar b) { return a.p_ != b.p_; }

private:
  std::uint32_t p_;
};

// All independent sets of one cardinality, lexicographic by vertex list.
struct FaceBasis {
  int k = 0;
  std::vector<VertexSet> faces;
};

FaceBasis independent_sets_of_size(const Graph& g, int k);

// Dense matrix over GF(p). Rows are bit-packed words for p = 2 and uint16
// entries otherwise.
class GfMatrix {
public:
  GfMatrix(FieldChar field, int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldChar field() const { return field_; }
  void set(int r, int c, long long value);  // reduced mod p, negatives fine
  std::uint32_t get(int r, int c) const;

private:
  friend int rank_mod_p(GfMatrix m);
  FieldChar field_;
  int rows_, cols_, words_;
  std::vector<std::uint64_t> bit_rows_;   // p == 2
  std::vector<std::uint16_t> val_rows_;   // p > 2
};

// Signed simplicial boundary from k-faces to (k-1)-faces; the k = 1 matrix is
// the all-ones augmentation row. Column order follows the face bases.
GfMatrix boundary_matrix(const FaceBasis& lower, const FaceBasis& upper, FieldChar field);
GfMatrix boundary_matrix(const Graph& g, int k, FieldChar field);

int rank_mod_p(GfMatrix m);  // Gaussian elimination on the by-value copy

// Reduced Betti numbers of the independence complex, degrees -1 .. dim.
struct ReducedBettiVector {
  FieldChar field{2};
  std::vector<long long> values;  // values[d + 1] = dim H~_d

  long long at(int d) const {
    int idx = d + 1;
    return (idx >= 0 && idx < (int)values.size()) ? values[idx] : 0;
  }
  int max_dim() const { return (int)values.size() - 2; }
  long long reduced_euler() const;
};

// Rank–nullity over the chosen field. The zero-vertex graph yields the empty
// complex {emptyset} with H~_{-1} of dimension 1; every other complex here is
// nonvoid so H~_{-1} vanishes.
ReducedBettiVector reduced_betti_vector(const Graph& g, FieldChar field);

// From face counts alone (no ranks): sum over k of (-1)^(k-1) f_k.
long long reduced_euler_characteristic(const Graph& g);

// True iff some vertex is isolated, i.e. the independence complex is a cone
// (and all reduced homology vanishes).
bool is_cone(const Graph& g);

}  // namespace betti
