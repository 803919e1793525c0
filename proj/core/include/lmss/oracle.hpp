#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lmss/graph.hpp"

/// Exhaustive reference computations, written directly from the definitions
/// and sharing no code with the algorithms they check. Intended for small
/// graphs only.
namespace lmss::oracle {

/// Stability numbers of every induced subgraph, indexed by vertex mask,
/// filled by the recurrence α(X) = max(α(X - v), 1 + α(X - N[v])).
/// Order at most 22.
class SubsetTable {
 public:
  explicit SubsetTable(const Graph& g);

  std::size_t order() const noexcept { return order_; }
  std::uint64_t full() const noexcept { return full_; }

  int alpha(std::uint64_t subset) const { return alpha_[subset]; }
  int alpha() const { return alpha_[full_]; }
  bool is_stable(std::uint64_t set) const;
  std::uint64_t closed_neighborhood(std::uint64_t set) const;
  bool is_local_max(std::uint64_t set) const;
  bool is_maximum(std::uint64_t set) const;

  /// Every subset passing is_local_max, in increasing mask order.
  std::vector<std::uint64_t> psi() const;

 private:
  std::size_t order_;
  std::uint64_t full_;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::uint8_t> alpha_;
};

/// Largest stable set by checking all 2^n vertex subsets pairwise.
std::size_t naive_alpha(const Graph& g);

/// Largest matching by include/exclude search over the edge list.
std::size_t naive_matching_number(const Graph& g);

/// Local maximality by enumerating every subset of N[s].
bool naive_is_local_max(const Graph& g, const VertexSet& s);

}  // namespace lmss::oracle
