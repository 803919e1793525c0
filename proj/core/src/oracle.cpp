#include "lmss/oracle.hpp"

#include <algorithm>
#include <functional>

#include "lmss/error.hpp"

namespace lmss::oracle {
namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> nbr(g.order(), 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }
  return nbr;
}

int popcount(std::uint64_t m) {
  int c = 0;
  for (; m != 0; m &= m - 1) ++c;
  return c;
}

void require_small(const Graph& g, std::size_t limit) {
  if (g.order() > limit) {
    throw Error(ErrorKind::too_large_for_brute_force,
                "oracle limited to " + std::to_string(limit) + " vertices");
  }
}

}  // namespace

SubsetTable::SubsetTable(const Graph& g)
    : order_(g.order()),
      full_(g.order() == 0 ? 0 : (std::uint64_t{1} << g.order()) - 1),
      neighbors_(adjacency_masks(g)) {
  require_small(g, 22);
  alpha_.assign(std::size_t{1} << order_, 0);
  for (std::uint64_t x = 1; x <= full_; ++x) {
    unsigned v = 0;
    while (((x >> v) & 1U) == 0) ++v;
    const std::uint64_t drop = x & ~(std::uint64_t{1} << v);
    const std::uint64_t keep = drop & ~neighbors_[v];
    alpha_[x] = static_cast<std::uint8_t>(std::max<int>(alpha_[drop], 1 + alpha_[keep]));
  }
}

bool SubsetTable::is_stable(std::uint64_t set) const {
  for (std::size_t v = 0; v < order_; ++v) {
    if (((set >> v) & 1U) && (neighbors_[v] & set)) return false;
  }
  return true;
}

std::uint64_t SubsetTable::closed_neighborhood(std::uint64_t set) const {
  std::uint64_t out = set;
  for (std::size_t v = 0; v < order_; ++v) {
    if ((set >> v) & 1U) out |= neighbors_[v];
  }
  return out;
}

bool SubsetTable::is_local_max(std::uint64_t set) const {
  return is_stable(set) && alpha_[closed_neighborhood(set)] == popcount(set);
}

bool SubsetTable::is_maximum(std::uint64_t set) const {
  return is_stable(set) && popcount(set) == alpha_[full_];
}

std::vector<std::uint64_t> SubsetTable::psi() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x <= full_; ++x) {
    if (is_local_max(x)) out.push_back(x);
  }
  return out;
}

std::size_t naive_alpha(const Graph& g) {
  require_small(g, 24);
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool stable = true;
    for (Vertex u = 0; u < n && stable; ++u) {
      if (!((x >> u) & 1U)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (((x >> v) & 1U) && g.adjacent(u, v)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) best = std::max<std::size_t>(best, static_cast<std::size_t>(popcount(x)));
  }
  return best;
}

std::size_t naive_matching_number(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<char> used(g.order(), 0);
  std::function<std::size_t(std::size_t)> search = [&](std::size_t i) -> std::size_t {
    if (i == edges.size()) return 0;
    std::size_t best = search(i + 1);
    const Edge& e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      best = std::max(best, 1 + search(i + 1));
      used[e.u] = used[e.v] = 0;
    }
    return best;
  };
  return search(0);
}

bool naive_is_local_max(const Graph& g, const VertexSet& s) {
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && g.adjacent(u, v)) return false;
    }
  }
  std::vector<Vertex> region;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool inside = s.contains(v);
    for (Vertex w : s) inside = inside || g.adjacent(v, w);
    if (inside) region.push_back(v);
  }
  if (region.size() > 24) {
    throw Error(ErrorKind::too_large_for_brute_force, "oracle neighborhood too large");
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << region.size()); ++x) {
    if (static_cast<std::size_t>(popcount(x)) <= s.size()) continue;
    bool stable = true;
    for (std::size_t i = 0; i < region.size() && stable; ++i) {
      if (!((x >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < region.size(); ++j) {
        if (((x >> j) & 1U) && g.adjacent(region[i], region[j])) {
          stable = false;
          break;
        }
      }
    }
    if (stable) return false;
  }
  return true;
}

}  // namespace lmss::oracle
