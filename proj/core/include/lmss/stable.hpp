#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "lmss/graph.hpp"
#include "lmss/vertex_set.hpp"

namespace lmss {

/// Exhaustive-search ceilings. Exceeding one is an error, never an
/// approximation. Both are clamped to 64 internally.
struct Limits {
  std::size_t brute_force_cap = 24;
  std::size_t enumeration_cap = 20;
};

enum class AlphaMethod { forest_dp, brute_force };

std::string_view to_string(AlphaMethod method);

struct StableSetResult {
  VertexSet set;
  std::size_t size = 0;
  AlphaMethod method = AlphaMethod::forest_dp;
};

/// All local maximum stable sets of `graph` in canonical order (size, then
/// lexicographic). Always starts with the empty set.
struct PsiFamily {
  Graph graph;
  std::vector<VertexSet> members;

  bool contains(const VertexSet& set) const;
};

bool is_stable(const Graph& g, const VertexSet& s);

/// Stability number with a deterministic witness. Forests go through the
/// pendant-greedy dynamic program; anything else is searched exhaustively.
StableSetResult alpha(const Graph& g, const Limits& limits = {});

/// Repeatedly takes the lowest-indexed pendant vertex and deletes its
/// neighbor; isolated vertices are always taken. Throws NotAForest.
StableSetResult forest_alpha(const Graph& g);

/// Depth-first search over vertices in index order, inclusion first, with a
/// cardinality bound. The witness is the lexicographically smallest maximum
/// stable set. Throws TooLargeForBruteForce above the cap.
StableSetResult brute_force_alpha(const Graph& g, const Limits& limits = {});

/// Ω(G) in canonical order.
std::vector<VertexSet> enumerate_omega(const Graph& g, const Limits& limits = {});

/// True iff `s` is a maximum stable set of G[N[s]]. The empty set qualifies.
bool is_local_max_stable(const Graph& g, const VertexSet& s,
                         const Limits& limits = {});

PsiFamily enumerate_psi(const Graph& g, const Limits& limits = {});

}  // namespace lmss
