#include "lmss/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "lmss/error.hpp"
#include "lmss/stable.hpp"

namespace lmss {
namespace {

constexpr Vertex unmatched = ~Vertex{0};

void require_forest(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorKind::not_a_forest, "graph contains a cycle");
}

std::vector<Vertex> greedy_mates(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> mate(n, unmatched);
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> pendants;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) pendants.push(v);
  }
  while (!pendants.empty()) {
    Vertex v = pendants.top();
    pendants.pop();
    if (!alive[v] || degree[v] != 1) continue;
    Vertex u = unmatched;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) {
        u = w;
        break;
      }
    }
    mate[v] = u;
    mate[u] = v;
    alive[v] = 0;
    alive[u] = 0;
    for (Vertex w : g.neighbors(u)) {
      if (alive[w] && --degree[w] == 1) pendants.push(w);
    }
  }
  return mate;
}

Matching from_mates(const Graph& g, const std::vector<Vertex>& mate) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < mate.size(); ++v) {
    if (mate[v] != unmatched && v < mate[v]) edges.push_back({v, mate[v]});
  }
  return make_matching(g, std::move(edges));
}

}  // namespace

Matching make_matching(const Graph& g, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw Error(ErrorKind::internal_error, "matching edge is not an edge of the graph");
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  VertexSet covered(std::move(endpoints));
  if (covered.size() != 2 * edges.size()) {
    throw Error(ErrorKind::internal_error, "matching edges share an endpoint");
  }
  return {std::move(edges), std::move(covered)};
}

Matching maximum_matching(const Graph& g) {
  require_forest(g);
  return from_mates(g, greedy_mates(g));
}

Matching internal_cover_matching(const Graph& g) {
  require_forest(g);
  std::vector<Vertex> mate = greedy_mates(g);
  std::vector<char> visited(g.order(), 0);

  for (Vertex start = 0; start < g.order(); ++start) {
    if (g.degree(start) < 2 || mate[start] != unmatched) continue;
    std::fill(visited.begin(), visited.end(), 0);
    visited[start] = 1;
    Vertex current = start;
    for (;;) {
      Vertex next = unmatched;
      for (Vertex u : g.neighbors(current)) {
        if (visited[u]) continue;
        if (mate[u] == unmatched) {
          throw Error(ErrorKind::internal_error,
                      "exposed neighbors while shifting: matching was not maximum");
        }
        next = u;
        break;
      }
      if (next == unmatched) {
        throw Error(ErrorKind::internal_error, "alternating walk has nowhere to go");
      }
      Vertex released = mate[next];
      if (visited[released]) {
        throw Error(ErrorKind::internal_error, "alternating walk revisited a vertex");
      }
      visited[next] = 1;
      visited[released] = 1;
      mate[current] = next;
      mate[next] = current;
      mate[released] = unmatched;
      if (g.degree(released) < 2) break;
      current = released;
    }
  }
  return from_mates(g, mate);
}

KonigEgervaryReport verify_konig_egervary(const Graph& g) {
  require_forest(g);
  KonigEgervaryReport report;
  report.alpha = forest_alpha(g).size;
  report.mu = maximum_matching(g).size();
  report.order = g.order();
  report.identity_holds = report.alpha + report.mu == report.order;
  report.has_perfect_matching = 2 * report.mu == report.order;
  return report;
}

}  // namespace lmss
