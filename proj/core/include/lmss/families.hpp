#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lmss/graph.hpp"

namespace lmss {

enum class Family {
  path,
  cycle,
  complete,
  star,
  fig1,
  fig2,
  fig4_tree,
  fig7,
  random_tree,
  random_forest,
  random_graph,
};

std::string_view to_string(Family family);
/// Throws InvalidFamilyParameter for an unknown name.
Family parse_family(std::string_view name);

/// Identifier of the pseudorandom stream used by the random families; it is
/// recorded in emitted graph metadata.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/rejection-v1";

struct FamilySpec {
  Family family = Family::path;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  /// random_forest: chance that each tree edge is dropped.
  double deletion_probability = 0.15;
  /// random_graph: chance that each vertex pair is joined.
  double edge_probability = 0.3;
};

/// Vertex labels: path uses a, b, c, ... (v1.. beyond 26); cycle, complete,
/// random_* and enumerated trees use 1..n; star uses c for the center and
/// x1.. for leaves; fig7 uses a1..an. The fixed figures ignore n.
/// Throws InvalidFamilyParameter when n is outside the family's range.
Graph generate(const FamilySpec& spec);

enum class PairClass { small, large };

/// The two local maximum stable sets of generate(fig7, n) that admit no
/// exchange. small: ({a1}, {a(n-2), a(n-1)}), n >= 6. large (n even, n >= 8):
/// ({a1, a3, ..., a(n-5)}, {a1, a3, ..., a(n-7), a(n-2), a(n-1)}).
std::pair<VertexSet, VertexSet> fig7_exchange_pair(std::size_t n, PairClass size_class);

/// Tree on vertices 0..n-1 for a code of length n-2 with entries < n.
std::vector<Edge> prufer_decode(const std::vector<Vertex>& code, std::size_t n);
/// Inverse of prufer_decode. Throws InvalidFamilyParameter unless `tree` is a
/// tree.
std::vector<Vertex> prufer_encode(const Graph& tree);

/// All n^(n-2) labeled trees on n vertices (2 <= n <= 8), in lexicographic
/// Prüfer order. Restartable; single consumer.
class LabeledTreeStream {
 public:
  explicit LabeledTreeStream(std::size_t n);

  std::optional<Graph> next();
  void restart();
  std::size_t total() const noexcept { return total_; }

 private:
  std::size_t n_;
  std::size_t total_;
  std::vector<Vertex> code_;
  bool done_ = false;
};

LabeledTreeStream enumerate_labeled_trees(std::size_t n);

}  // namespace lmss
