#include <gtest/gtest.h>

#include "hwiener/canonical.hpp"
#include "hwiener/constructors.hpp"
#include "hwiener/errors.hpp"
#include "hwiener/indices.hpp"
#include "oracle.hpp"

using namespace hwiener;

TEST(Basic, Shapes) {
  EXPECT_EQ(path(2).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(cycle(3).edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(star(4).degree_sequence(), (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(path(1).order(), 1);
  EXPECT_THROW(path(0), DomainError);
  EXPECT_THROW(cycle(2), DomainError);
  EXPECT_THROW(star(1), DomainError);
  EXPECT_THROW(j_graph(3), DomainError);
  EXPECT_THROW(g_rn(2, 5), DomainError);
  EXPECT_THROW(g_rn(6, 5), DomainError);
}

TEST(Jn, Examples) {
  EXPECT_EQ(j_graph(4), g_rn(3, 4));
  EXPECT_EQ(distance_distribution(j_graph(6)).counts, (std::vector<std::uint64_t>{0, 6, 9}));
  EXPECT_EQ(wiener(j_graph(5)).as_exact(), Rational(15));
}

TEST(Jn, DegreeSequence) {
  for (int n = 4; n <= 20; ++n) {
    const auto g = j_graph(n);
    EXPECT_TRUE(is_unicyclic(g));
    std::vector<int> expected{n - 1};
    if (n == 4) expected = {3, 2, 2, 1};
    else {
      expected.push_back(2);
      expected.push_back(2);
      expected.insert(expected.end(), n - 3, 1);
    }
    EXPECT_EQ(g.degree_sequence(), expected);
  }
}

TEST(Grn, Examples) {
  for (int n = 3; n <= 10; ++n) EXPECT_TRUE(oracle::isomorphic_brute(g_rn(n, n), cycle(n)));
  EXPECT_EQ(wiener(g_rn(3, 6)).as_exact(), Rational(31));
  EXPECT_EQ(wiener(g_rn(4, 5)).as_exact(), Rational(16));
}

TEST(Grn, Structure) {
  for (int n = 3; n <= 14; ++n) {
    for (int r = 3; r <= n; ++r) {
      const auto g = g_rn(r, n);
      EXPECT_TRUE(is_unicyclic(g));
      EXPECT_EQ(find_cycle(g).length(), r);
      const auto deg = g.degree_sequence();
      EXPECT_EQ(std::count(deg.begin(), deg.end(), 3), r < n ? 1 : 0);
      EXPECT_LE(deg.front(), 3);
      EXPECT_EQ(std::count(deg.begin(), deg.end(), 1), r < n ? 1 : 0);
    }
  }
}

TEST(Families, UnicyclicOnlyWhereExpected) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_FALSE(is_unicyclic(path(n)));
    EXPECT_FALSE(is_unicyclic(star(n)));
    EXPECT_TRUE(is_unicyclic(cycle(n)));
  }
}
