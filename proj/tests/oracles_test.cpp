// Sanity checks for the test oracles themselves.

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace rdr::oracle {
namespace {

TEST(OracleTest, FreeTreeCounts) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(pruefer_tree_classes(k).size(), expected[k]) << "k=" << k;
}

TEST(OracleTest, IsomorphismBasics) {
  EXPECT_TRUE(brute_isomorphic(path(4), Graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  EXPECT_FALSE(brute_isomorphic(path(4), Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_TRUE(brute_isomorphic(path(3), path(3), 0, 2));
  EXPECT_FALSE(brute_isomorphic(path(3), path(3), 0, 1));
  const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(brute_isomorphic(k33, prism));
}

TEST(OracleTest, PseudoinverseOnPath) {
  const auto r = pseudoinverse_resistance(path(3));
  EXPECT_NEAR(r[0 * 3 + 2], 2.0, 1e-12);
  EXPECT_NEAR(r[1 * 3 + 1], 0.0, 1e-12);
}

TEST(OracleTest, FloydWarshallOnCycle) {
  const auto d = floyd_warshall(cycle(6));
  EXPECT_EQ(d[0 * 6 + 3], 3);
  EXPECT_EQ(d[1 * 6 + 5], 2);
}

}  // namespace
}  // namespace rdr::oracle
