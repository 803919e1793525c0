#include "lmss/greedoid.hpp"

#include <algorithm>
#include <unordered_map>

#include "kernels.hpp"
#include "lmss/embedding.hpp"
#include "lmss/error.hpp"
#include "lmss/matching.hpp"

namespace lmss {
namespace {

using bits::Mask;

void require_psi(const Graph& g, const VertexSet& s, const Limits& limits,
                 std::string_view what) {
  if (!is_local_max_stable(g, s, limits)) {
    throw Error(ErrorKind::not_in_psi,
                std::string(what) + " " + g.format(s) + " is not a local maximum stable set");
  }
}

// Positions of `subset` inside the sorted member list of `superset`.
VertexSet relabel_into(const VertexSet& superset, const VertexSet& subset) {
  const auto& members = superset.members();
  std::vector<Vertex> local;
  local.reserve(subset.size());
  for (Vertex v : subset) {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    local.push_back(static_cast<Vertex>(it - members.begin()));
  }
  return VertexSet(std::move(local));
}

VertexSet relabel_out_of(const VertexSet& superset, const VertexSet& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex i : local) out.push_back(superset.members()[i]);
  return VertexSet(std::move(out));
}

PendantEdge find_pendant_k2(const Graph& t) {
  for (Vertex x = 0; x < t.order(); ++x) {
    if (t.degree(x) != 1) continue;
    Vertex y = t.neighbors(x).front();
    if (t.degree(y) == 2) return {x, y};
  }
  throw Error(ErrorKind::internal_error, "perfect tree without a pendant K2");
}

// Chain for a maximum stable set of a perfect tree: strip a pendant K2 {x,y}
// with deg(y) = 2, recurse on the remaining perfect tree, then either prefix
// {x} to every link (x in s) or append s itself (y in s).
std::vector<VertexSet> perfect_tree_chain(const Graph& t, const VertexSet& s) {
  if (t.order() == 2) return {s};
  const auto [x, y] = find_pendant_k2(t);
  const VertexSet rest = without(without(t.vertices(), x), y);
  const Graph reduced = induced_subgraph(t, rest);
  const VertexSet inner_target =
      relabel_into(rest, without(without(s, x), y));

  std::vector<VertexSet> chain;
  chain.reserve(s.size());
  if (s.contains(x)) {
    chain.push_back(VertexSet{x});
    for (const auto& link : perfect_tree_chain(reduced, inner_target)) {
      chain.push_back(with(relabel_out_of(rest, link), x));
    }
  } else if (s.contains(y)) {
    for (const auto& link : perfect_tree_chain(reduced, inner_target)) {
      chain.push_back(relabel_out_of(rest, link));
    }
    chain.push_back(s);
  } else {
    throw Error(ErrorKind::internal_error,
                "maximum stable set of a perfect tree misses a pendant edge");
  }
  return chain;
}

// s is a maximum stable set of the tree c. Embedding keeps original indices,
// so the perfect-tree chain is already expressed in c's indices.
std::vector<VertexSet> tree_chain(const Graph& c, const VertexSet& s) {
  const Embedding embedding = embed_perfect(c, EmbedMode::any);
  return perfect_tree_chain(embedding.host, s);
}

std::vector<VertexSet> constructive_chain(const Graph& g, const VertexSet& s,
                                          const Limits& limits) {
  if (s.empty()) return {};
  const VertexSet closed = closed_neighborhood(g, s);
  const Graph local = induced_subgraph(g, closed);
  const VertexSet local_s = relabel_into(closed, s);

  std::vector<VertexSet> chain;
  chain.reserve(s.size());
  VertexSet prefix;
  for (const VertexSet& component : decompose(local).components) {
    const VertexSet part = set_intersection(local_s, component);
    std::vector<VertexSet> links;
    if (component.size() == 1) {
      links.push_back(VertexSet{0});
    } else {
      links = tree_chain(induced_subgraph(local, component),
                         relabel_into(component, part));
    }
    for (const auto& link : links) {
      VertexSet lifted = relabel_out_of(closed, relabel_out_of(component, link));
      chain.push_back(prefix.empty() ? lifted : union_local_max(g, prefix, lifted, limits));
    }
    prefix = chain.back();
  }
  return chain;
}

std::vector<VertexSet> greedy_chain(const Graph& g, const VertexSet& s,
                                    const Limits& limits) {
  std::vector<VertexSet> chain;
  if (s.empty()) return chain;
  chain.push_back(s);
  VertexSet current = s;
  while (current.size() > 1) {
    bool peeled = false;
    for (Vertex v : current) {
      VertexSet smaller = without(current, v);
      if (is_local_max_stable(g, smaller, limits)) {
        current = std::move(smaller);
        peeled = true;
        break;
      }
    }
    if (!peeled) {
      throw AccessibilityFailure(current, "no vertex of " + g.format(current) +
                                              " can be removed within Psi");
    }
    chain.push_back(current);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

GreedoidReport report_from_masks(const std::vector<Mask>& family) {
  GreedoidReport report;
  report.family_size = family.size();

  std::unordered_map<Mask, std::size_t> index;
  index.reserve(family.size() * 2);
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family[i], i);

  // extensions[i]: vertices x with family[i] ∪ {x} feasible.
  std::vector<Mask> extensions(family.size(), 0);
  for (Mask x_set : family) {
    bool accessible = x_set == 0;
    for (Mask m = x_set; m != 0; m &= m - 1) {
      const unsigned x = bits::lowest(m);
      auto it = index.find(x_set & ~bits::bit(x));
      if (it != index.end()) {
        accessible = true;
        extensions[it->second] |= bits::bit(x);
      }
    }
    if (!accessible) report.accessibility_violations.push_back(VertexSet::from_mask(x_set));
  }

  // family is grouped by size; walk adjacent size levels.
  std::size_t level_begin = 0;
  while (level_begin < family.size()) {
    const int size = bits::count(family[level_begin]);
    std::size_t level_end = level_begin;
    while (level_end < family.size() && bits::count(family[level_end]) == size) ++level_end;
    std::size_t next_end = level_end;
    while (next_end < family.size() && bits::count(family[next_end]) == size + 1) ++next_end;
    for (std::size_t y = level_begin; y < level_end; ++y) {
      for (std::size_t x = level_end; x < next_end; ++x) {
        if ((family[x] & ~family[y] & extensions[y]) == 0) {
          report.exchange_violations.emplace_back(VertexSet::from_mask(family[y]),
                                                  VertexSet::from_mask(family[x]));
        }
      }
    }
    level_begin = level_end;
  }

  report.accessibility_ok = report.accessibility_violations.empty();
  report.exchange_ok = report.exchange_violations.empty();
  return report;
}

}  // namespace

std::string_view to_string(ChainStrategy strategy) {
  return strategy == ChainStrategy::greedy_peel ? "greedy_peel" : "constructive";
}

ChainCertificate chain_decompose(const Graph& g, const VertexSet& s,
                                 ChainStrategy strategy, const Limits& limits) {
  g.require_valid(s);
  if (strategy == ChainStrategy::constructive && !is_forest(g)) {
    throw Error(ErrorKind::not_a_forest, "constructive chains need a forest");
  }
  require_psi(g, s, limits, "set");
  ChainCertificate certificate{g, {}, strategy};
  certificate.chain = strategy == ChainStrategy::greedy_peel
                          ? greedy_chain(g, s, limits)
                          : constructive_chain(g, s, limits);
  return certificate;
}

bool validate_chain(const ChainCertificate& certificate, const VertexSet& target,
                    const Limits& limits) {
  const auto& chain = certificate.chain;
  if (chain.empty()) return target.empty();
  if (chain.back() != target) return false;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].size() != i + 1) return false;
    if (i > 0 && !chain[i - 1].is_subset_of(chain[i])) return false;
    if (chain[i].bound() > certificate.graph.order()) return false;
    if (!is_local_max_stable(certificate.graph, chain[i], limits)) return false;
  }
  return true;
}

PendantEdge pendant_k2_edge(const Graph& g) {
  const ComponentDecomposition parts = decompose(g);
  if (!parts.is_tree || 2 * maximum_matching(g).size() != g.order()) {
    throw Error(ErrorKind::not_perfect_tree, "graph is not a perfect tree");
  }
  if (g.order() == 2) throw Error(ErrorKind::base_case, "K2 has no pendant K2 edge to strip");
  return find_pendant_k2(g);
}

VertexSet union_local_max(const Graph& g, const VertexSet& a, const VertexSet& b,
                          const Limits& limits) {
  g.require_valid(a);
  g.require_valid(b);
  require_psi(g, a, limits, "first set");
  require_psi(g, b, limits, "second set");
  VertexSet joined = set_union(a, b);
  if (!a.is_disjoint_from(b) || !is_stable(g, joined)) {
    throw Error(ErrorKind::not_disjoint_or_not_stable,
                g.format(a) + " and " + g.format(b) + " are not disjoint with a stable union");
  }
  if (!is_local_max_stable(g, joined, limits)) {
    throw Error(ErrorKind::internal_error, "union " + g.format(joined) + " left Psi");
  }
  return joined;
}

VertexSet nt_extend(const Graph& g, const VertexSet& s1, const VertexSet& s2,
                    const Limits& limits) {
  g.require_valid(s1);
  g.require_valid(s2);
  require_psi(g, s1, limits, "s1");
  const std::size_t target = alpha(g, limits).size;
  if (!is_stable(g, s2) || s2.size() != target) {
    throw Error(ErrorKind::not_maximum, "s2 " + g.format(s2) + " is not a maximum stable set");
  }
  const VertexSet extension = set_difference(s2, closed_neighborhood(g, s1));
  VertexSet result = set_union(s1, extension);
  if (result.size() != target || !is_stable(g, result)) {
    throw Error(ErrorKind::internal_error, "extension " + g.format(result) + " is not maximum");
  }
  return result;
}

ExchangeWitness exchange_witness(const Graph& g, const VertexSet& s1,
                                 const VertexSet& s2, const Limits& limits) {
  g.require_valid(s1);
  g.require_valid(s2);
  require_psi(g, s1, limits, "s1");
  require_psi(g, s2, limits, "s2");
  if (s2.size() != s1.size() + 1) {
    throw Error(ErrorKind::size_mismatch, "|s2| must equal |s1| + 1");
  }
  ExchangeWitness result{s1, s2, std::nullopt};
  for (Vertex v : s2) {
    if (s1.contains(v)) continue;
    if (is_local_max_stable(g, with(s1, v), limits)) {
      result.witness = v;
      return result;
    }
  }
  if (is_forest(g)) {
    throw Error(ErrorKind::internal_error,
                "forest without exchange witness for " + g.format(s1) + ", " + g.format(s2));
  }
  return result;
}

GreedoidReport verify_greedoid(const Graph& g, const Limits& limits) {
  kernels::require_enumerable(g, limits);
  return report_from_masks(
      kernels::psi_masks(g.masks(), g.order(), kernels::brute_force_limit(limits)));
}

GreedoidReport verify_greedoid(const PsiFamily& family) {
  if (family.graph.order() > 64) {
    throw Error(ErrorKind::too_large_for_enumeration, "family graph exceeds 64 vertices");
  }
  std::vector<Mask> masks;
  masks.reserve(family.members.size());
  for (const auto& member : family.members) masks.push_back(member.to_mask());
  std::sort(masks.begin(), masks.end(), kernels::canonical_less);
  return report_from_masks(masks);
}

}  // namespace lmss
