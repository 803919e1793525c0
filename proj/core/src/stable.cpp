#include "lmss/stable.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "kernels.hpp"
#include "lmss/error.hpp"

namespace lmss {

using bits::Mask;

std::string_view to_string(AlphaMethod method) {
  return method == AlphaMethod::forest_dp ? "forest_dp" : "brute_force";
}

namespace kernels {

std::size_t brute_force_limit(const Limits& limits) {
  return std::min<std::size_t>(limits.brute_force_cap, 64);
}

std::size_t enumeration_limit(const Limits& limits) {
  return std::min<std::size_t>(limits.enumeration_cap, 64);
}

bool canonical_less(Mask a, Mask b) {
  int ca = bits::count(a);
  int cb = bits::count(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  return (a >> bits::lowest(a ^ b)) & 1U;
}

bool is_psi(bits::Masks nbr, Mask s, std::size_t brute_force_cap) {
  if (!bits::is_stable(nbr, s)) return false;
  if (s == 0) return true;
  Mask closed = bits::closed_neighborhood(nbr, s);
  if (static_cast<std::size_t>(bits::count(closed)) > brute_force_cap &&
      !bits::is_forest(nbr, closed)) {
    throw Error(ErrorKind::too_large_for_brute_force,
                "closed neighborhood of order " + std::to_string(bits::count(closed)) +
                    " is not a forest and exceeds the brute-force cap");
  }
  return bits::alpha(nbr, closed) == bits::count(s);
}

std::vector<Mask> psi_masks(bits::Masks nbr, std::size_t order,
                            std::size_t brute_force_cap) {
  std::vector<Mask> out;
  const Mask all = order == 64 ? ~Mask{0} : bits::bit(static_cast<unsigned>(order)) - 1;
  // Stable sets in lexicographic order: inclusion-first preorder over the
  // set-enumeration tree.
  std::function<void(Mask, Mask)> visit = [&](Mask current, Mask candidates) {
    if (is_psi(nbr, current, brute_force_cap)) out.push_back(current);
    for (Mask m = candidates; m != 0; m &= m - 1) {
      unsigned v = bits::lowest(m);
      Mask above = (m & (m - 1));
      visit(current | bits::bit(v), above & ~nbr[v]);
    }
  };
  visit(0, all);
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return bits::count(a) < bits::count(b);
  });
  return out;
}

void require_enumerable(const Graph& g, const Limits& limits) {
  if (g.order() > enumeration_limit(limits)) {
    throw Error(ErrorKind::too_large_for_enumeration,
                "graph of order " + std::to_string(g.order()) +
                    " exceeds the enumeration cap of " +
                    std::to_string(enumeration_limit(limits)));
  }
}

}  // namespace kernels

bool PsiFamily::contains(const VertexSet& set) const {
  return std::binary_search(members.begin(), members.end(), set);
}

bool is_stable(const Graph& g, const VertexSet& s) {
  g.require_valid(s);
  if (g.has_masks()) return bits::is_stable(g.masks(), s.to_mask());
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

StableSetResult forest_alpha(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorKind::not_a_forest, "graph contains a cycle");
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> chosen;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> pendants;

  auto take = [&](Vertex v) {
    chosen.push_back(v);
    alive[v] = 0;
  };
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 0) take(v);
    if (degree[v] == 1) pendants.push(v);
  }
  while (!pendants.empty()) {
    Vertex v = pendants.top();
    pendants.pop();
    if (!alive[v] || degree[v] != 1) continue;
    take(v);
    Vertex partner = v;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) {
        partner = w;
        break;
      }
    }
    alive[partner] = 0;
    for (Vertex w : g.neighbors(partner)) {
      if (!alive[w]) continue;
      --degree[w];
      if (degree[w] == 0) take(w);
      else if (degree[w] == 1) pendants.push(w);
    }
  }
  VertexSet set(std::move(chosen));
  std::size_t size = set.size();
  return {std::move(set), size, AlphaMethod::forest_dp};
}

StableSetResult brute_force_alpha(const Graph& g, const Limits& limits) {
  if (g.order() > kernels::brute_force_limit(limits)) {
    throw Error(ErrorKind::too_large_for_brute_force,
                "graph of order " + std::to_string(g.order()) +
                    " exceeds the brute-force cap of " +
                    std::to_string(kernels::brute_force_limit(limits)));
  }
  const auto nbr = g.masks();
  Mask best = 0;
  int best_size = -1;
  std::function<void(Mask, int, Mask)> extend = [&](Mask current, int size,
                                                   Mask candidates) {
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    for (Mask m = candidates; m != 0; m &= m - 1) {
      if (size + bits::count(m) <= best_size) return;
      unsigned v = bits::lowest(m);
      extend(current | bits::bit(v), size + 1, (m & (m - 1)) & ~nbr[v]);
    }
  };
  const Mask all = g.order() == 0 ? 0 : (~Mask{0} >> (64 - g.order()));
  extend(0, 0, all);
  return {VertexSet::from_mask(best), static_cast<std::size_t>(best_size),
          AlphaMethod::brute_force};
}

StableSetResult alpha(const Graph& g, const Limits& limits) {
  if (is_forest(g)) return forest_alpha(g);
  return brute_force_alpha(g, limits);
}

std::vector<VertexSet> enumerate_omega(const Graph& g, const Limits& limits) {
  kernels::require_enumerable(g, limits);
  const auto nbr = g.masks();
  const Mask all = g.order() == 0 ? 0 : (~Mask{0} >> (64 - g.order()));
  const int target = bits::alpha(nbr, all);
  std::vector<VertexSet> out;
  std::function<void(Mask, int, Mask)> extend = [&](Mask current, int size,
                                                   Mask candidates) {
    if (size == target) {
      out.push_back(VertexSet::from_mask(current));
      return;
    }
    for (Mask m = candidates; m != 0; m &= m - 1) {
      if (size + bits::count(m) < target) return;
      unsigned v = bits::lowest(m);
      extend(current | bits::bit(v), size + 1, (m & (m - 1)) & ~nbr[v]);
    }
  };
  extend(0, 0, all);
  return out;
}

bool is_local_max_stable(const Graph& g, const VertexSet& s, const Limits& limits) {
  g.require_valid(s);
  if (g.has_masks()) {
    return kernels::is_psi(g.masks(), s.to_mask(), kernels::brute_force_limit(limits));
  }
  if (!is_stable(g, s)) return false;
  if (s.empty()) return true;
  Graph local = induced_subgraph(g, closed_neighborhood(g, s));
  if (is_forest(local)) return forest_alpha(local).size == s.size();
  if (local.order() > kernels::brute_force_limit(limits)) {
    throw Error(ErrorKind::too_large_for_brute_force,
                "closed neighborhood of order " + std::to_string(local.order()) +
                    " is not a forest and exceeds the brute-force cap");
  }
  return static_cast<std::size_t>(bits::alpha(local.masks(), ~Mask{0} >> (64 - local.order()))) ==
         s.size();
}

PsiFamily enumerate_psi(const Graph& g, const Limits& limits) {
  kernels::require_enumerable(g, limits);
  PsiFamily family{g, {}};
  for (Mask m : kernels::psi_masks(g.masks(), g.order(), kernels::brute_force_limit(limits))) {
    family.members.push_back(VertexSet::from_mask(m));
  }
  return family;
}

}  // namespace lmss
