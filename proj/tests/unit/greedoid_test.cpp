#include "lmss/greedoid.hpp"

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lmss/oracle.hpp"

namespace lmss {
namespace {

using testing::S;
using testing::make;
using testing::path;

void expect_prefixes_local_max(const ChainCertificate& cert, const VertexSet& target) {
  const oracle::SubsetTable table(cert.graph);
  ASSERT_EQ(cert.chain.size(), target.size());
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    EXPECT_EQ(cert.chain[i].size(), i + 1);
    EXPECT_TRUE(table.is_local_max(cert.chain[i].to_mask())) << cert.graph.format(cert.chain[i]);
    if (i > 0) EXPECT_TRUE(cert.chain[i - 1].is_subset_of(cert.chain[i]));
  }
  EXPECT_EQ(cert.chain.back(), target);
  EXPECT_TRUE(validate_chain(cert, target));
}

TEST(ChainDecompose, FigureFourTree) {
  const Graph t = make(Family::fig4_tree);
  const VertexSet target = S(t, {"a", "b", "c", "d", "e"});
  const oracle::SubsetTable table(t);
  // the chain named in the figure caption
  EXPECT_TRUE(table.is_local_max(S(t, {"a"}).to_mask()));
  EXPECT_TRUE(table.is_local_max(S(t, {"a", "b"}).to_mask()));
  EXPECT_TRUE(table.is_local_max(S(t, {"a", "b", "c"}).to_mask()));
  EXPECT_TRUE(table.is_local_max(target.to_mask()));
  for (ChainStrategy strategy : {ChainStrategy::greedy_peel, ChainStrategy::constructive}) {
    expect_prefixes_local_max(chain_decompose(t, target, strategy), target);
  }
}

TEST(ChainDecompose, PathOfEight) {
  const Graph p8 = path(8);
  const VertexSet target = S(p8, {"a", "c", "e", "h"});
  EXPECT_TRUE(is_local_max_stable(p8, S(p8, {"a", "f", "h"})));
  for (ChainStrategy strategy : {ChainStrategy::greedy_peel, ChainStrategy::constructive}) {
    expect_prefixes_local_max(chain_decompose(p8, target, strategy), target);
  }
}

TEST(ChainDecompose, GreedyPeelGetsStuckOnFigureOne) {
  const Graph fig1 = make(Family::fig1);
  const VertexSet acf = S(fig1, {"a", "c", "f"});
  for (Vertex v : acf) EXPECT_FALSE(is_local_max_stable(fig1, without(acf, v)));
  try {
    chain_decompose(fig1, acf, ChainStrategy::greedy_peel);
    FAIL() << "expected AccessibilityFailure";
  } catch (const AccessibilityFailure& e) {
    EXPECT_EQ(e.stuck(), acf);
  }
  EXPECT_KIND(chain_decompose(fig1, acf, ChainStrategy::constructive), ErrorKind::not_a_forest);
}

TEST(ChainDecompose, Errors) {
  const Graph p6 = path(6);
  EXPECT_KIND(chain_decompose(p6, S(p6, {"c", "f"})), ErrorKind::not_in_psi);
  EXPECT_TRUE(chain_decompose(p6, {}).chain.empty());
}

TEST(ChainDecompose, ForestWithSeveralComponents) {
  const Graph f = Graph::from_edges(9, {Edge{0, 1}, Edge{1, 2}, Edge{3, 4}, Edge{5, 6}, Edge{6, 7}});
  for (const VertexSet& s : enumerate_psi(f).members) {
    if (s.empty()) continue;
    expect_prefixes_local_max(chain_decompose(f, s, ChainStrategy::constructive), s);
  }
}

TEST(ValidateChain, RejectsBrokenCertificates) {
  const Graph p4 = path(4);
  const VertexSet ad = S(p4, {"a", "d"});
  ChainCertificate cert = chain_decompose(p4, ad);
  EXPECT_TRUE(validate_chain(cert, ad));
  EXPECT_FALSE(validate_chain(cert, S(p4, {"a", "c"})));
  ChainCertificate skipped = cert;
  skipped.chain.erase(skipped.chain.begin());
  EXPECT_FALSE(validate_chain(skipped, ad));
  ChainCertificate bad = cert;
  bad.chain[0] = S(p4, {"b"});
  EXPECT_FALSE(validate_chain(bad, ad));
}

TEST(PendantK2Edge, Examples) {
  const Graph p4 = path(4);
  const PendantEdge e4 = pendant_k2_edge(p4);
  EXPECT_EQ(p4.label(e4.pendant), "a");
  EXPECT_EQ(p4.label(e4.neighbor), "b");
  const Graph p6 = path(6);
  const PendantEdge e6 = pendant_k2_edge(p6);
  EXPECT_EQ(p6.label(e6.pendant), "a");
  EXPECT_EQ(p6.label(e6.neighbor), "b");
  EXPECT_KIND(pendant_k2_edge(testing::k2()), ErrorKind::base_case);
  EXPECT_KIND(pendant_k2_edge(path(5)), ErrorKind::not_perfect_tree);
  EXPECT_KIND(pendant_k2_edge(make(Family::cycle, 4)), ErrorKind::not_perfect_tree);
}

TEST(PendantK2Edge, ExistsInEveryPerfectTree) {
  for (std::size_t n = 4; n <= 8; n += 2) {
    LabeledTreeStream trees(n);
    while (auto t = trees.next()) {
      if (2 * oracle::naive_matching_number(*t) != n) continue;
      const PendantEdge e = pendant_k2_edge(*t);
      EXPECT_EQ(t->degree(e.pendant), 1u);
      EXPECT_EQ(t->degree(e.neighbor), 2u);
      EXPECT_TRUE(t->adjacent(e.pendant, e.neighbor));
    }
  }
}

TEST(UnionLocalMax, Examples) {
  const Graph fig1 = make(Family::fig1);
  const VertexSet ade = union_local_max(fig1, S(fig1, {"a"}), S(fig1, {"d", "e"}));
  EXPECT_EQ(ade, S(fig1, {"a", "d", "e"}));
  EXPECT_TRUE(oracle::naive_is_local_max(fig1, ade));

  const Graph p6 = path(6);
  EXPECT_EQ(union_local_max(p6, S(p6, {"a"}), S(p6, {"f"})), S(p6, {"a", "f"}));

  const Graph k2 = testing::k2();
  EXPECT_KIND(union_local_max(k2, S(k2, {"u"}), S(k2, {"v"})), ErrorKind::not_disjoint_or_not_stable);
  EXPECT_KIND(union_local_max(p6, S(p6, {"b"}), S(p6, {"f"})), ErrorKind::not_in_psi);
}

TEST(NtExtend, Examples) {
  const Graph fig1 = make(Family::fig1);
  const VertexSet r = nt_extend(fig1, S(fig1, {"d", "e"}), S(fig1, {"a", "c", "f"}));
  EXPECT_EQ(r, S(fig1, {"a", "d", "e"}));
  EXPECT_TRUE(oracle::SubsetTable(fig1).is_maximum(r.to_mask()));

  const Graph p5 = path(5);
  const VertexSet ace = S(p5, {"a", "c", "e"});
  EXPECT_EQ(nt_extend(p5, {}, ace), ace);
  EXPECT_EQ(nt_extend(p5, ace, ace), ace);
  EXPECT_KIND(nt_extend(p5, S(p5, {"b"}), ace), ErrorKind::not_in_psi);
  EXPECT_KIND(nt_extend(p5, {}, S(p5, {"a", "c"})), ErrorKind::not_maximum);
}

TEST(ExchangeWitness, Examples) {
  const Graph p6 = path(6);
  const ExchangeWitness w = exchange_witness(p6, S(p6, {"f"}), S(p6, {"a", "c"}));
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_EQ(p6.label(*w.witness), "a");

  const Graph fig7 = make(Family::fig7, 6);
  EXPECT_FALSE(exchange_witness(fig7, S(fig7, {"a1"}), S(fig7, {"a4", "a5"})).witness.has_value());

  const Graph k2 = testing::k2();
  const ExchangeWitness kw = exchange_witness(k2, {}, S(k2, {"u"}));
  ASSERT_TRUE(kw.witness.has_value());
  EXPECT_EQ(*kw.witness, *k2.find("u"));

  EXPECT_KIND(exchange_witness(p6, {}, S(p6, {"a", "c"})), ErrorKind::size_mismatch);
  EXPECT_KIND(exchange_witness(p6, S(p6, {"c"}), S(p6, {"a", "c"})), ErrorKind::not_in_psi);
}

TEST(VerifyGreedoid, Examples) {
  const GreedoidReport c4 = verify_greedoid(make(Family::cycle, 4));
  EXPECT_FALSE(c4.accessibility_ok);
  EXPECT_EQ(c4.accessibility_violations, (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(c4.family_size, 3u);

  const Graph fig7 = make(Family::fig7, 6);
  const GreedoidReport r7 = verify_greedoid(fig7);
  EXPECT_FALSE(r7.exchange_ok);
  const std::pair<VertexSet, VertexSet> pair{S(fig7, {"a1"}), S(fig7, {"a4", "a5"})};
  EXPECT_NE(std::find(r7.exchange_violations.begin(), r7.exchange_violations.end(), pair),
            r7.exchange_violations.end());

  const GreedoidReport fig4 = verify_greedoid(make(Family::fig4_tree));
  EXPECT_TRUE(fig4.accessibility_ok);
  EXPECT_TRUE(fig4.exchange_ok);
  EXPECT_TRUE(fig4.accessibility_violations.empty());
}

TEST(VerifyGreedoid, FlagsAgreeWithViolationLists) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GreedoidReport r = verify_greedoid(testing::make_random(Family::random_graph, 8, seed));
    EXPECT_EQ(r.accessibility_ok, r.accessibility_violations.empty());
    EXPECT_EQ(r.exchange_ok, r.exchange_violations.empty());
  }
}

TEST(VerifyGreedoid, RespectsCap) {
  Limits limits;
  limits.enumeration_cap = 6;
  EXPECT_KIND(verify_greedoid(path(7), limits), ErrorKind::too_large_for_enumeration);
}

}  // namespace
}  // namespace lmss
