#include "lmss/graph.hpp"

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lmss/vertex_set.hpp"

namespace lmss {
namespace {

using testing::S;
using testing::make;
using testing::path;

TEST(VertexSet, KeepsMembersSortedAndUnique) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 5}));
  s.insert(2);
  s.erase(5);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(s.bound(), 4u);
  EXPECT_EQ(VertexSet::from_mask(s.to_mask()), s);
}

TEST(VertexSet, CanonicalOrderIsSizeThenLexicographic) {
  EXPECT_LT(VertexSet{}, VertexSet{0});
  EXPECT_LT((VertexSet{9}), (VertexSet{0, 1}));
  EXPECT_LT((VertexSet{0, 2}), (VertexSet{0, 3}));
  EXPECT_LT((VertexSet{0, 3}), (VertexSet{1, 2}));
}

TEST(VertexSet, SetAlgebra) {
  const VertexSet a{1, 2, 3}, b{3, 4};
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 2}));
  EXPECT_EQ(set_intersection(a, b), (VertexSet{3}));
  EXPECT_TRUE((VertexSet{1, 3}).is_subset_of(a));
  EXPECT_FALSE(a.is_disjoint_from(b));
  EXPECT_EQ(with(b, 0), (VertexSet{0, 3, 4}));
  EXPECT_EQ(without(b, 3), (VertexSet{4}));
}

TEST(Graph, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_KIND(Graph::from_edges(2, {Edge{1, 1}}), ErrorKind::self_loop);
  EXPECT_KIND(Graph::from_edges(2, {Edge{0, 2}}), ErrorKind::invalid_vertex);
  EXPECT_KIND(Graph::from_edges(std::vector<std::string>{"a", "a"}, {}), ErrorKind::invalid_vertex);
}

TEST(Graph, CollapsesRepeatedEdges) {
  const Graph g = Graph::from_edges(3, {Edge{0, 1}, Edge{1, 0}, Edge{1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(Graph, LabelsRoundTrip) {
  const Graph g = path(4);
  EXPECT_EQ(g.find("c"), std::optional<Vertex>{2});
  EXPECT_FALSE(g.find("z").has_value());
  EXPECT_EQ(g.format(S(g, {"d", "a"})), "{a,d}");
  EXPECT_KIND(g.set_of({"z"}), ErrorKind::invalid_vertex);
  EXPECT_KIND(g.require_valid(VertexSet{7}), ErrorKind::invalid_vertex);
}

TEST(ClosedNeighborhood, Examples) {
  const Graph fig1 = make(Family::fig1);
  EXPECT_EQ(closed_neighborhood(fig1, S(fig1, {"d", "e"})), S(fig1, {"c", "d", "e", "f"}));
  EXPECT_EQ(closed_neighborhood(fig1, {}), VertexSet{});
  const Graph p4 = path(4);
  EXPECT_EQ(closed_neighborhood(p4, S(p4, {"a"})), S(p4, {"a", "b"}));
}

TEST(InducedSubgraph, Examples) {
  const Graph fig1 = make(Family::fig1);
  const Graph abc = induced_subgraph(fig1, S(fig1, {"a", "b", "c"}));
  EXPECT_EQ(abc, testing::labeled({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  EXPECT_EQ(induced_subgraph(fig1, {}).order(), 0u);
  EXPECT_EQ(induced_subgraph(fig1, fig1.vertices()), fig1);
}

TEST(PendantVertices, Examples) {
  const Graph p6 = path(6);
  EXPECT_EQ(pendant_vertices(p6), S(p6, {"a", "f"}));
  EXPECT_EQ(pendant_vertices(make(Family::cycle, 4)), VertexSet{});
  const Graph fig1 = make(Family::fig1);
  EXPECT_EQ(pendant_vertices(fig1), S(fig1, {"a"}));
}

TEST(Decompose, Examples) {
  const Graph p3_p2 = Graph::from_edges(5, {Edge{0, 1}, Edge{1, 2}, Edge{3, 4}});
  const ComponentDecomposition d = decompose(p3_p2);
  EXPECT_EQ(d.components, (std::vector<VertexSet>{{0, 1, 2}, {3, 4}}));
  EXPECT_TRUE(d.is_forest);
  EXPECT_FALSE(d.is_tree);

  const ComponentDecomposition f = decompose(make(Family::fig1));
  EXPECT_EQ(f.components.size(), 1u);
  EXPECT_FALSE(f.is_forest);

  const ComponentDecomposition t = decompose(make(Family::fig4_tree));
  EXPECT_EQ(t.components.size(), 1u);
  EXPECT_TRUE(t.is_tree);
}

TEST(Decompose, DegenerateOrders) {
  EXPECT_TRUE(decompose(Graph::from_edges(0, {})).is_forest);
  const ComponentDecomposition one = decompose(Graph::from_edges(1, {}));
  EXPECT_TRUE(one.is_forest);
  EXPECT_FALSE(one.is_tree);
  EXPECT_TRUE(decompose(testing::k2()).is_tree);
}

}  // namespace
}  // namespace lmss
