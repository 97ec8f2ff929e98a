#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace betti {

// Subset of {0, ..., 31} packed into one machine word.
struct VertexSet {
  std::uint32_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t b) : bits(b) {}

  static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
  // {0, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 32 ? 0xffffffffu : (1u << n) - 1u);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }

  constexpr VertexSet with(int v) const { return VertexSet(bits | (1u << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits & ~(1u << v)); }
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr int lowest() const { return std::countr_zero(bits); }  // empty set: 32

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

  struct iterator {
    std::uint32_t rest;
    constexpr int operator*() const { return std::countr_zero(rest); }
    constexpr iterator& operator++() { rest &= rest - 1; return *this; }
    constexpr bool operator!=(iterator o) const { return rest != o.rest; }
  };
  struct Elements {
    std::uint32_t bits;
    constexpr iterator begin() const { return {bits}; }
    constexpr iterator end() const { return {0}; }
  };
  // ascending vertex order
  constexpr Elements elements() const { return {bits}; }
};

std::string to_string(VertexSet s);  // "{0,2,3}"

}  // namespace betti
