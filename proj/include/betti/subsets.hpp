#pragma once

#include <cassert>
#include <cstdint>

namespace betti {

// C(n, k) in exact 64-bit arithmetic; fine for n <= 32.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (std::uint64_t)(n - k + i) / (std::uint64_t)i;
  return r;
}

// Next bitmask with the same popcount (Gosper). Precondition: v != 0 and a
// successor of the same weight exists below the caller's range bound.
inline std::uint32_t next_same_popcount(std::uint32_t v) {
  std::uint32_t c = v & (0u - v);
  std::uint32_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// The k-subset of {0,...} with the given colex rank, as a bitmask.  Colex
// order on fixed-size subsets coincides with numeric order of their masks,
// so this unranks the Gosper sequence.
inline std::uint32_t subset_at_colex_rank(int k, std::uint64_t rank) {
  std::uint32_t mask = 0;
  for (int t = k; t >= 1; --t) {
    int c = t - 1;
    while (binomial(c + 1, t) <= rank) ++c;
    mask |= 1u << c;
    rank -= binomial(c, t);
  }
  assert(rank == 0);
  return mask;
}

}  // namespace betti
