#include "lmss/embedding.hpp"

#include <unordered_set>

#include "lmss/error.hpp"
#include "lmss/matching.hpp"

namespace lmss {

std::string_view to_string(EmbedMode mode) {
  return mode == EmbedMode::any ? "any" : "pendant_only";
}

Embedding embed_perfect(const Graph& g, EmbedMode mode) {
  const Matching matching =
      mode == EmbedMode::any ? maximum_matching(g) : internal_cover_matching(g);

  std::vector<std::string> labels = g.labels();
  std::unordered_set<std::string> taken(labels.begin(), labels.end());
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> added;

  for (Vertex v = 0; v < g.order(); ++v) {
    if (matching.covered.contains(v)) continue;
    std::string fresh = g.label(v) + "_w";
    for (int suffix = 2; taken.contains(fresh); ++suffix) {
      fresh = g.label(v) + "_w" + std::to_string(suffix);
    }
    taken.insert(fresh);
    const auto w = static_cast<Vertex>(labels.size());
    labels.push_back(std::move(fresh));
    edges.push_back({v, w});
    added.push_back({v, w});
  }

  return {Graph::from_edges(std::move(labels), edges), g.vertices(), std::move(added)};
}

bool psi_restrict_check(const Graph& host, const VertexSet& sub_vertices,
                        const VertexSet& a, const Limits& limits) {
  host.require_valid(sub_vertices);
  host.require_valid(a);
  if (!a.is_subset_of(sub_vertices)) {
    throw Error(ErrorKind::invalid_vertex, "set is not contained in the subgraph");
  }
  std::vector<Vertex> local;
  local.reserve(a.size());
  const auto& members = sub_vertices.members();
  for (Vertex v : a) {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    local.push_back(static_cast<Vertex>(it - members.begin()));
  }
  return is_local_max_stable(induced_subgraph(host, sub_vertices),
                             VertexSet(std::move(local)), limits);
}

}  // namespace lmss
