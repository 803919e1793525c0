#include "lmss/oracle.hpp"

#include <gtest/gtest.h>

#include "helpers.hpp"

namespace lmss {
namespace {

using testing::make;

// The oracle pieces are checked against each other and against closed forms.
TEST(Oracle, ClosedForms) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(oracle::naive_alpha(make(Family::path, n)), (n + 1) / 2);
    EXPECT_EQ(oracle::naive_matching_number(make(Family::path, n)), n / 2);
    EXPECT_EQ(oracle::naive_alpha(make(Family::complete, n)), 1u);
  }
  for (std::size_t n = 4; n <= 12; ++n) {
    EXPECT_EQ(oracle::SubsetTable(make(Family::cycle, n)).alpha(), static_cast<int>(n / 2));
  }
}

TEST(Oracle, SubsetTableAgreesWithNaiveSearch) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    FamilySpec spec;
    spec.family = Family::random_graph;
    spec.n = 6 + seed % 7;
    spec.seed = seed;
    const Graph g = generate(spec);
    const oracle::SubsetTable table(g);
    EXPECT_EQ(static_cast<std::size_t>(table.alpha()), oracle::naive_alpha(g));
    for (std::uint64_t m : table.psi()) {
      EXPECT_TRUE(oracle::naive_is_local_max(g, VertexSet::from_mask(m)));
    }
    EXPECT_FALSE(table.psi().empty());
    EXPECT_EQ(table.psi().front(), 0u);
  }
}

TEST(Oracle, SizeLimit) {
  EXPECT_KIND(oracle::SubsetTable(make(Family::path, 23)), ErrorKind::too_large_for_brute_force);
}

}  // namespace
}  // namespace lmss
