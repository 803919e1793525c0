#include "lmss/families.hpp"

#include <set>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lmss/stable.hpp"

namespace lmss {
namespace {

using testing::S;
using testing::make;
using testing::make_random;

// Vertices left after repeatedly deleting vertices of degree at most one.
std::size_t two_core_size(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<char> gone(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (gone[v] || deg[v] > 1) continue;
      gone[v] = 1;
      changed = true;
      for (Vertex w : g.neighbors(v)) --deg[w];
    }
  }
  return static_cast<std::size_t>(std::count(gone.begin(), gone.end(), 0));
}

TEST(Generate, FixedFamilies) {
  const Graph p6 = make(Family::path, 6);
  EXPECT_EQ(p6.order(), 6u);
  EXPECT_EQ(p6.edge_count(), 5u);
  EXPECT_EQ(p6.label(5), "f");

  const Graph fig7 = make(Family::fig7, 6);
  EXPECT_EQ(fig7.order(), 6u);
  EXPECT_EQ(fig7.edge_count(), 6u);
  EXPECT_FALSE(is_forest(fig7));
  EXPECT_EQ(two_core_size(fig7), 4u);

  const Graph fig1 = make(Family::fig1);
  EXPECT_EQ(fig1.order(), 6u);
  EXPECT_EQ(fig1.edge_count(), 6u);
  EXPECT_EQ(alpha(fig1).size, 3u);

  const Graph fig2 = make(Family::fig2);
  EXPECT_EQ(fig2.order(), 9u);
  EXPECT_FALSE(is_forest(fig2));
  EXPECT_EQ(enumerate_omega(fig2).size(), 2u);

  const Graph fig4 = make(Family::fig4_tree);
  EXPECT_EQ(fig4.order(), 11u);
  EXPECT_TRUE(decompose(fig4).is_tree);

  const Graph star = make(Family::star, 4);
  EXPECT_EQ(star.order(), 4u);
  EXPECT_EQ(star.degree(*star.find("c")), 3u);

  EXPECT_EQ(make(Family::complete, 5).edge_count(), 10u);
  EXPECT_EQ(make(Family::cycle, 7).edge_count(), 7u);
}

TEST(Generate, Fig7HasOneFourCycleForEverySize) {
  for (std::size_t n = 6; n <= 14; ++n) {
    const Graph g = make(Family::fig7, n);
    EXPECT_EQ(g.edge_count(), n) << n;
    EXPECT_EQ(decompose(g).components.size(), 1u);
    EXPECT_EQ(two_core_size(g), 4u) << n;
  }
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_KIND(make(Family::cycle, 3), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(make(Family::fig7, 5), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(make(Family::path, 0), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(make(Family::star, 1), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(make(Family::random_tree, 1), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(parse_family("petersen"), ErrorKind::invalid_family_parameter);
}

TEST(Generate, FamilyNamesRoundTrip) {
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star, Family::fig1,
                   Family::fig2, Family::fig4_tree, Family::fig7, Family::random_tree,
                   Family::random_forest, Family::random_graph}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
}

TEST(Generate, RandomTreesAreSeededTrees) {
  const Graph t = make_random(Family::random_tree, 9, 42);
  EXPECT_EQ(t.order(), 9u);
  EXPECT_EQ(t.edge_count(), 8u);
  EXPECT_TRUE(decompose(t).is_tree);
  EXPECT_EQ(t, make_random(Family::random_tree, 9, 42));
  std::set<std::vector<Edge>> shapes;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    shapes.insert(make_random(Family::random_tree, 9, seed).edges());
  }
  EXPECT_GT(shapes.size(), 15u);
}

TEST(Generate, RandomForestsAndGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph f = make_random(Family::random_forest, 12, seed);
    EXPECT_TRUE(is_forest(f));
    EXPECT_EQ(f.order(), 12u);
    EXPECT_EQ(f, make_random(Family::random_forest, 12, seed));
    EXPECT_EQ(make_random(Family::random_graph, 10, seed), make_random(Family::random_graph, 10, seed));
  }
  FamilySpec dense;
  dense.family = Family::random_graph;
  dense.n = 8;
  dense.seed = 1;
  dense.edge_probability = 1.0;
  EXPECT_EQ(generate(dense).edge_count(), 28u);
  dense.family = Family::random_forest;
  dense.deletion_probability = 1.0;
  EXPECT_EQ(generate(dense).edge_count(), 0u);
}

TEST(Fig7ExchangePair, Examples) {
  const Graph g6 = make(Family::fig7, 6);
  const auto [s1, s2] = fig7_exchange_pair(6, PairClass::small);
  EXPECT_EQ(s1, S(g6, {"a1"}));
  EXPECT_EQ(s2, S(g6, {"a4", "a5"}));

  const Graph g8 = make(Family::fig7, 8);
  const auto [l1, l2] = fig7_exchange_pair(8, PairClass::large);
  EXPECT_EQ(l1, S(g8, {"a1", "a3"}));
  EXPECT_EQ(l2, S(g8, {"a1", "a6", "a7"}));

  EXPECT_KIND(fig7_exchange_pair(7, PairClass::large), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(fig7_exchange_pair(6, PairClass::large), ErrorKind::invalid_family_parameter);
  EXPECT_KIND(fig7_exchange_pair(5, PairClass::small), ErrorKind::invalid_family_parameter);
}

TEST(LabeledTrees, Counts) {
  EXPECT_EQ(enumerate_labeled_trees(3).total(), 3u);
  EXPECT_EQ(enumerate_labeled_trees(4).total(), 16u);
  EXPECT_EQ(enumerate_labeled_trees(8).total(), 262144u);
  for (std::size_t n : {2, 3, 4, 5, 6}) {
    LabeledTreeStream stream(n);
    std::set<std::vector<Edge>> distinct;
    std::size_t count = 0;
    while (auto t = stream.next()) {
      ASSERT_TRUE(decompose(*t).is_tree);
      distinct.insert(t->edges());
      ++count;
    }
    EXPECT_EQ(count, stream.total());
    EXPECT_EQ(distinct.size(), count);
  }
}

TEST(LabeledTrees, Restart) {
  LabeledTreeStream stream(4);
  const Graph first = *stream.next();
  while (stream.next()) {
  }
  EXPECT_FALSE(stream.next().has_value());
  stream.restart();
  EXPECT_EQ(*stream.next(), first);
  EXPECT_KIND(LabeledTreeStream(9), ErrorKind::invalid_family_parameter);
}

TEST(Prufer, RoundTrip) {
  LabeledTreeStream stream(6);
  while (auto t = stream.next()) {
    const std::vector<Vertex> code = prufer_encode(*t);
    ASSERT_EQ(code.size(), 4u);
    std::vector<Edge> decoded = prufer_decode(code, 6);
    std::sort(decoded.begin(), decoded.end());
    EXPECT_EQ(decoded, t->edges());
  }
  EXPECT_EQ(prufer_decode({}, 2), (std::vector<Edge>{Edge{0, 1}}));
  EXPECT_KIND(prufer_encode(make(Family::cycle, 4)), ErrorKind::invalid_family_parameter);
}

}  // namespace
}  // namespace lmss
