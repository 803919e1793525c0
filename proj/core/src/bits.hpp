#pragma once

// Bitmask routines for graphs of order <= 64. A graph is a span of neighbor
// masks; a vertex subset is a 64-bit mask.

#include <bit>
#include <cstdint>
#include <span>

namespace lmss::bits {

using Mask = std::uint64_t;
using Masks = std::span<const Mask>;

inline constexpr Mask bit(unsigned v) { return Mask{1} << v; }

inline int count(Mask m) { return std::popcount(m); }

inline unsigned lowest(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }

inline bool is_stable(Masks nbr, Mask s) {
  for (Mask m = s; m != 0; m &= m - 1) {
    if (nbr[lowest(m)] & s) return false;
  }
  return true;
}

inline Mask closed_neighborhood(Masks nbr, Mask s) {
  Mask out = s;
  for (Mask m = s; m != 0; m &= m - 1) out |= nbr[lowest(m)];
  return out;
}

inline int edge_count(Masks nbr, Mask sub) {
  int twice = 0;
  for (Mask m = sub; m != 0; m &= m - 1) twice += count(nbr[lowest(m)] & sub);
  return twice / 2;
}

inline int component_count(Masks nbr, Mask sub) {
  int components = 0;
  while (sub != 0) {
    Mask frontier = bit(lowest(sub));
    Mask reached = frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) next |= nbr[lowest(m)];
      next &= sub & ~reached;
      reached |= next;
      frontier = next;
    }
    sub &= ~reached;
    ++components;
  }
  return components;
}

inline bool is_forest(Masks nbr, Mask sub) {
  return edge_count(nbr, sub) + component_count(nbr, sub) == count(sub);
}

/// Size of a maximum stable set of the subgraph induced by `sub`.
///
/// Vertices of degree 0 or 1 are taken greedily (some maximum stable set
/// always contains them); otherwise the search branches on a vertex of
/// maximum degree. Forests never reach the branching step.
inline int alpha(Masks nbr, Mask sub) {
  int taken = 0;
  while (sub != 0) {
    bool reduced = false;
    unsigned best = 0;
    int best_degree = -1;
    for (Mask m = sub; m != 0; m &= m - 1) {
      unsigned v = lowest(m);
      Mask around = nbr[v] & sub;
      if ((around & (around - 1)) == 0) {
        ++taken;
        sub &= ~(bit(v) | around);
        reduced = true;
        break;
      }
      int d = count(around);
      if (d > best_degree) {
        best_degree = d;
        best = v;
      }
    }
    if (!reduced) {
      int skip = alpha(nbr, sub & ~bit(best));
      int take = 1 + alpha(nbr, sub & ~(bit(best) | nbr[best]));
      return taken + (skip > take ? skip : take);
    }
  }
  return taken;
}

}  // namespace lmss::bits
