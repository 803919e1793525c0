#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lmss/error.hpp"
#include "lmss/families.hpp"
#include "lmss/graph.hpp"

namespace lmss::testing {

inline Graph make(Family family, std::size_t n = 0) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  return generate(spec);
}

inline Graph make_random(Family family, std::size_t n, std::uint64_t seed) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

inline Graph path(std::size_t n) { return make(Family::path, n); }

inline Graph labeled(std::vector<std::string> labels,
                     std::initializer_list<std::pair<const char*, const char*>> edges) {
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) {
    auto ia = std::find(labels.begin(), labels.end(), a) - labels.begin();
    auto ib = std::find(labels.begin(), labels.end(), b) - labels.begin();
    out.push_back(make_edge(static_cast<Vertex>(ia), static_cast<Vertex>(ib)));
  }
  return Graph::from_edges(std::move(labels), out);
}

inline Graph k2() { return labeled({"u", "v"}, {{"u", "v"}}); }

inline VertexSet S(const Graph& g, std::initializer_list<const char*> labels) {
  return g.set_of(std::vector<std::string>(labels.begin(), labels.end()));
}

template <class Fn>
ErrorKind thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no lmss::Error thrown";
  return ErrorKind::internal_error;
}

}  // namespace lmss::testing

#define EXPECT_KIND(stmt, expected_kind) \
  EXPECT_EQ(::lmss::testing::thrown_kind([&] { (void)(stmt); }), (expected_kind))
