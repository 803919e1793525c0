#pragma once

#include <string_view>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/stable.hpp"

namespace lmss {

enum class EmbedMode {
  /// Partners go to the vertices exposed by `maximum_matching`.
  any,
  /// Partners go to the vertices exposed by `internal_cover_matching`, so
  /// every new edge meets a pendant or isolated vertex.
  pendant_only,
};

std::string_view to_string(EmbedMode mode);

/// A forest enlarged into a perfect forest with the same stability number.
struct Embedding {
  /// Original vertex i keeps index i; fresh vertices follow in the order of
  /// their partners.
  Graph host;
  VertexSet original_vertices;
  /// (original vertex, fresh vertex) pairs.
  std::vector<Edge> added_edges;
};

/// Gives every vertex left exposed by the chosen maximum matching a fresh
/// pendant partner labeled `<label>_w` (a counter suffix resolves clashes).
/// Throws NotAForest.
Embedding embed_perfect(const Graph& g, EmbedMode mode = EmbedMode::any);

/// Local maximality of `a` inside host[sub_vertices]. Throws InvalidVertex
/// unless `a` is contained in `sub_vertices` and both are valid for `host`.
bool psi_restrict_check(const Graph& host, const VertexSet& sub_vertices,
                        const VertexSet& a, const Limits& limits = {});

}  // namespace lmss
