#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lmss/vertex_set.hpp"

namespace lmss {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes so that u < v.
inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable labeled simple graph.
///
/// Vertices are the dense indices 0..order()-1, each carrying a unique string
/// label. Copies share storage. Graphs of order at most 64 additionally keep
/// one neighbor bitmask per vertex, which the small-graph search routines use.
class Graph {
 public:
  Graph();

  /// Validates and builds. Throws Error(invalid_vertex) for out-of-range
  /// endpoints or duplicate labels and Error(self_loop) for loops. Repeated
  /// edges collapse.
  static Graph from_edges(std::vector<std::string> labels,
                          const std::vector<Edge>& edges);

  /// Labels "1".."n".
  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return impl_->labels.size(); }
  std::size_t edge_count() const noexcept { return impl_->edge_count; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const {
    return impl_->offsets[v + 1] - impl_->offsets[v];
  }
  bool adjacent(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const { return impl_->labels[v]; }
  const std::vector<std::string>& labels() const noexcept {
    return impl_->labels;
  }
  std::optional<Vertex> find(std::string_view label) const;

  /// Sorted edge list with u < v.
  std::vector<Edge> edges() const;
  VertexSet vertices() const;

  bool has_masks() const noexcept { return !impl_->masks.empty() || order() == 0; }
  /// Neighbor bitmasks; empty unless order() <= 64.
  std::span<const std::uint64_t> masks() const noexcept {
    return impl_->masks;
  }

  /// Throws Error(invalid_vertex) unless every member is a vertex.
  void require_valid(const VertexSet& set) const;

  /// Resolves labels to a set. Throws Error(invalid_vertex) on an unknown one.
  VertexSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const VertexSet& set) const;
  /// "{a,c,f}"
  std::string format(const VertexSet& set) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::vector<std::size_t> offsets{0};
    std::vector<Vertex> adjacency;
    std::vector<std::uint64_t> masks;
    std::size_t edge_count = 0;
  };

  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

struct ComponentDecomposition {
  /// Ordered by smallest member.
  std::vector<VertexSet> components;
  bool is_forest = true;
  bool is_tree = false;
};

/// N[A]: the set together with every vertex adjacent to one of its members.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);

/// G[A]. Vertex i of the result is the i-th smallest member of `a`; labels
/// carry over.
Graph induced_subgraph(const Graph& g, const VertexSet& a);

/// Vertices of degree exactly one.
VertexSet pendant_vertices(const Graph& g);

ComponentDecomposition decompose(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace lmss
