#pragma once

#include <cstddef>
#include <vector>

#include "lmss/graph.hpp"

namespace lmss {

struct Matching {
  /// Sorted, each edge with u < v.
  std::vector<Edge> edges;
  /// All matched endpoints.
  VertexSet covered;

  std::size_t size() const noexcept { return edges.size(); }
};

/// Builds the derived `covered` set. Throws Error(internal_error) if two
/// edges share an endpoint or an edge is missing from `g`.
Matching make_matching(const Graph& g, std::vector<Edge> edges);

/// Leaf-greedy maximum matching on a forest: the lowest-indexed pendant
/// vertex is matched to its neighbor and both are deleted, until no edges
/// remain. Throws NotAForest.
Matching maximum_matching(const Graph& g);

/// A maximum matching of a forest that covers every vertex of degree >= 2.
///
/// Starts from `maximum_matching` and, while some internal vertex v is
/// exposed, shifts along an alternating path from v: take v's lowest matched
/// neighbor u, replace u's matching edge uw by vu, and continue from w until
/// the newly exposed vertex is pendant. Throws NotAForest.
Matching internal_cover_matching(const Graph& g);

struct KonigEgervaryReport {
  std::size_t alpha = 0;
  std::size_t mu = 0;
  std::size_t order = 0;
  bool identity_holds = false;
  bool has_perfect_matching = false;
};

KonigEgervaryReport verify_konig_egervary(const Graph& g);

}  // namespace lmss
