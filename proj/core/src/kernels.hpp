#pragma once

// Mask-level entry points shared by the stable-set, greedoid and
// certification code. All of them require order <= 64.

#include <cstddef>
#include <vector>

#include "bits.hpp"
#include "lmss/graph.hpp"
#include "lmss/stable.hpp"

namespace lmss::kernels {

std::size_t brute_force_limit(const Limits& limits);
std::size_t enumeration_limit(const Limits& limits);

/// Membership in Ψ for a graph given by neighbor masks.
bool is_psi(bits::Masks nbr, bits::Mask s, std::size_t brute_force_cap);

/// Ψ as masks in canonical order (size, then lexicographic by index list).
std::vector<bits::Mask> psi_masks(bits::Masks nbr, std::size_t order,
                                  std::size_t brute_force_cap);

/// Canonical-order comparison on masks.
bool canonical_less(bits::Mask a, bits::Mask b);

/// Requires g.order() <= enumeration cap and <= 64; throws otherwise.
void require_enumerable(const Graph& g, const Limits& limits);

}  // namespace lmss::kernels
