#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lmss {

using Vertex = std::uint32_t;

/// A set of vertex indices kept sorted and duplicate-free.
///
/// Ordering (`operator<=>`) is the canonical family order used throughout:
/// ascending size first, then lexicographic on the sorted index lists.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet from_mask(std::uint64_t mask);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  /// Largest member plus one, or 0 when empty.
  Vertex bound() const noexcept { return empty() ? 0 : members_.back() + 1; }

  void insert(Vertex v);
  void erase(Vertex v);

  bool is_subset_of(const VertexSet& other) const;
  bool is_disjoint_from(const VertexSet& other) const;

  /// Only meaningful when every member is below 64.
  std::uint64_t to_mask() const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet with(const VertexSet& a, Vertex v);
VertexSet without(const VertexSet& a, Vertex v);

}  // namespace lmss
