#pragma once

#include <bit>
#include <cstdint>

namespace vtcrit {

// Vertex subsets are single machine words; vertex v is bit v.
// Everything in this library assumes n <= 64.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

// Low n bits set. Valid for 0 <= n <= 64.
inline constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

// Calls f(v) for every vertex in s, ascending.
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace vtcrit
