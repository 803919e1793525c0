#include "lmss/vertex_set.hpp"

#include <bit>
#include <iterator>

namespace lmss {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet out;
  out.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.members_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool VertexSet::is_disjoint_from(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

std::uint64_t VertexSet::to_mask() const noexcept {
  std::uint64_t mask = 0;
  for (Vertex v : members_) mask |= std::uint64_t{1} << v;
  return mask;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet with(const VertexSet& a, Vertex v) {
  VertexSet out = a;
  out.insert(v);
  return out;
}

VertexSet without(const VertexSet& a, Vertex v) {
  VertexSet out = a;
  out.erase(v);
  return out;
}

}  // namespace lmss
