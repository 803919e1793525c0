#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

/// Corpus-scale certification: every structural claim the library encodes is
/// re-checked exhaustively on small trees and on seeded random corpora, with
/// the brute-force oracle as the independent reference.
namespace lmss::certify {

struct Options {
  /// Labeled trees on 2..max_tree_order vertices are enumerated exhaustively.
  std::size_t max_tree_order = 8;
  /// Random forests on 9..14 vertices for the greedoid sweep.
  std::size_t random_forests = 1000;
  /// Random (not necessarily acyclic) graphs on 4..12 vertices.
  std::size_t random_graphs = 500;
  /// Random forests on 2..20 vertices for the matching/embedding sweep.
  std::size_t matching_forests = 1000;
  std::uint64_t seed = 20240601;
};

/// Smaller corpora for interactive use (trees up to 6 vertices, 100 of each
/// random family).
Options quick_options();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Corpus sizes, counts and the first few failures.
  std::string detail;
  double seconds = 0.0;
};

using Progress = std::function<void(std::string_view)>;

std::vector<CriterionResult> run_all(const Options& options, const Progress& progress = {});

}  // namespace lmss::certify
