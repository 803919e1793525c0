#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/stable.hpp"

namespace lmss {

enum class ChainStrategy {
  /// Peel the lowest-indexed vertex whose removal stays local maximum.
  greedy_peel,
  /// Component split, perfect embedding and pendant-K2 recursion.
  constructive,
};

std::string_view to_string(ChainStrategy strategy);

/// S1 ⊂ S2 ⊂ ... ⊂ Sk, |Si| = i, every Si local maximum stable.
struct ChainCertificate {
  Graph graph;
  std::vector<VertexSet> chain;
  ChainStrategy strategy = ChainStrategy::greedy_peel;
};

struct ExchangeWitness {
  VertexSet s1;
  VertexSet s2;
  std::optional<Vertex> witness;
};

/// Greedoid axioms checked over Ψ(G).
///
/// An exchange violation (Y, X) has |X| = |Y| + 1 and no x in X - Y with
/// Y ∪ {x} in Ψ; the smaller set is listed first.
struct GreedoidReport {
  std::size_t family_size = 0;
  bool accessibility_ok = true;
  bool exchange_ok = true;
  std::vector<VertexSet> accessibility_violations;
  std::vector<std::pair<VertexSet, VertexSet>> exchange_violations;
};

struct PendantEdge {
  Vertex pendant = 0;
  Vertex neighbor = 0;
};

/// Builds a chain ending at `s`. Throws NotInPsi, NotAForest (constructive
/// strategy on a graph with a cycle) or AccessibilityFailure (greedy peel
/// stuck, which cannot happen on forests).
ChainCertificate chain_decompose(const Graph& g, const VertexSet& s,
                                 ChainStrategy strategy = ChainStrategy::greedy_peel,
                                 const Limits& limits = {});

/// Checks a certificate from its contents alone: sizes 1..k, single-vertex
/// growth, every member local maximum, last member equal to `target`.
bool validate_chain(const ChainCertificate& certificate, const VertexSet& target,
                    const Limits& limits = {});

/// In a perfect tree on at least four vertices, the lowest-indexed pendant
/// vertex whose neighbor has degree exactly two. Throws BaseCase on K2 and
/// NotPerfectTree otherwise.
PendantEdge pendant_k2_edge(const Graph& g);

/// A ∪ B for disjoint local maximum stable sets whose union is stable.
VertexSet union_local_max(const Graph& g, const VertexSet& a, const VertexSet& b,
                          const Limits& limits = {});

/// s1 ∪ (s2 - N[s1]) for s1 in Ψ and s2 in Ω; the result is in Ω.
VertexSet nt_extend(const Graph& g, const VertexSet& s1, const VertexSet& s2,
                    const Limits& limits = {});

/// First v in s2 - s1 (index order) with s1 ∪ {v} in Ψ, if any.
ExchangeWitness exchange_witness(const Graph& g, const VertexSet& s1,
                                 const VertexSet& s2, const Limits& limits = {});

GreedoidReport verify_greedoid(const Graph& g, const Limits& limits = {});
GreedoidReport verify_greedoid(const PsiFamily& family);

}  // namespace lmss
