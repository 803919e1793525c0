#include "lmss/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lmss/error.hpp"

namespace lmss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_vertex: return "InvalidVertex";
    case ErrorKind::too_large_for_brute_force: return "TooLargeForBruteForce";
    case ErrorKind::too_large_for_enumeration: return "TooLargeForEnumeration";
    case ErrorKind::not_a_forest: return "NotAForest";
    case ErrorKind::not_in_psi: return "NotInPsi";
    case ErrorKind::not_maximum: return "NotMaximum";
    case ErrorKind::accessibility_failure: return "AccessibilityFailure";
    case ErrorKind::not_perfect_tree: return "NotPerfectTree";
    case ErrorKind::base_case: return "BaseCase";
    case ErrorKind::not_disjoint_or_not_stable: return "NotDisjointOrNotStable";
    case ErrorKind::size_mismatch: return "SizeMismatch";
    case ErrorKind::invalid_family_parameter: return "InvalidFamilyParameter";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::self_loop: return "SelfLoopError";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::unsupported_format: return "UnsupportedFormat";
    case ErrorKind::internal_error: return "InternalError";
  }
  return "Unknown";
}

Graph::Graph() : impl_(std::make_shared<const Impl>()) {}

Graph Graph::from_edges(std::vector<std::string> labels,
                        const std::vector<Edge>& edges) {
  const std::size_t n = labels.size();
  {
    std::unordered_set<std::string_view> seen;
    seen.reserve(n);
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::invalid_vertex, "duplicate vertex label '" + l + "'");
      }
    }
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::invalid_vertex, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::self_loop, "self-loop at '" + labels[e.u] + "'");
    }
    normalized.push_back(make_edge(e.u, e.v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->edge_count = normalized.size();

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : normalized) {
    ++degree[e.u];
    ++degree[e.v];
  }
  impl->offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    impl->offsets[v + 1] = impl->offsets[v] + degree[v];
  }
  impl->adjacency.resize(impl->offsets[n]);
  std::vector<std::size_t> cursor(impl->offsets.begin(), impl->offsets.end() - 1);
  // normalized is sorted, so each row fills in ascending order for the
  // smaller endpoint; sort rows afterwards to cover the larger endpoint.
  for (const Edge& e : normalized) {
    impl->adjacency[cursor[e.u]++] = e.v;
    impl->adjacency[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(impl->adjacency.begin() + static_cast<std::ptrdiff_t>(impl->offsets[v]),
              impl->adjacency.begin() + static_cast<std::ptrdiff_t>(impl->offsets[v + 1]));
  }

  if (n <= 64) {
    impl->masks.assign(n, 0);
    for (const Edge& e : normalized) {
      impl->masks[e.u] |= std::uint64_t{1} << e.v;
      impl->masks[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  return Graph(std::move(impl));
}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges) {
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) labels[i] = std::to_string(i + 1);
  return from_edges(std::move(labels), edges);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  const auto& impl = *impl_;
  return std::span<const Vertex>(impl.adjacency.data() + impl.offsets[v],
                                 impl.offsets[v + 1] - impl.offsets[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!impl_->masks.empty()) return (impl_->masks[u] >> v) & 1U;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  const auto& labels = impl_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet Graph::vertices() const {
  std::vector<Vertex> all(order());
  std::iota(all.begin(), all.end(), Vertex{0});
  return VertexSet(std::move(all));
}

void Graph::require_valid(const VertexSet& set) const {
  if (set.bound() > order()) {
    throw Error(ErrorKind::invalid_vertex,
                "vertex index " + std::to_string(set.bound() - 1) +
                    " out of range for graph of order " + std::to_string(order()));
  }
}

VertexSet Graph::set_of(const std::vector<std::string>& labels) const {
  std::vector<Vertex> members;
  members.reserve(labels.size());
  for (const auto& l : labels) {
    auto v = find(l);
    if (!v) throw Error(ErrorKind::invalid_vertex, "unknown vertex '" + l + "'");
    members.push_back(*v);
  }
  return VertexSet(std::move(members));
}

std::vector<std::string> Graph::labels_of(const VertexSet& set) const {
  require_valid(set);
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(label(v));
  return out;
}

std::string Graph::format(const VertexSet& set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(set)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  out += '}';
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.impl_ == b.impl_) return true;
  return a.labels() == b.labels() && a.impl_->offsets == b.impl_->offsets &&
         a.impl_->adjacency == b.impl_->adjacency;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
  g.require_valid(a);
  if (g.has_masks()) {
    std::uint64_t m = a.to_mask();
    std::uint64_t out = m;
    for (Vertex v : a) out |= g.masks()[v];
    return VertexSet::from_mask(out);
  }
  std::vector<char> in(g.order(), 0);
  for (Vertex v : a) {
    in[v] = 1;
    for (Vertex w : g.neighbors(v)) in[w] = 1;
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

Graph induced_subgraph(const Graph& g, const VertexSet& a) {
  g.require_valid(a);
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> position(g.order(), absent);
  std::vector<std::string> labels;
  labels.reserve(a.size());
  Vertex next = 0;
  for (Vertex v : a) {
    position[v] = next++;
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (Vertex v : a) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && position[w] != absent) edges.push_back({position[v], position[w]});
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

VertexSet pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

ComponentDecomposition decompose(const Graph& g) {
  ComponentDecomposition out;
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.components.emplace_back(std::move(members));
  }
  out.is_forest = g.edge_count() + out.components.size() == n;
  out.is_tree = out.is_forest && out.components.size() == 1 && n >= 2;
  return out;
}

bool is_forest(const Graph& g) {
  return decompose(g).is_forest;
}

}  // namespace lmss
