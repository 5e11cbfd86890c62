#include <gtest/gtest.h>

#include <random>

#include "hwiener/closed_forms.hpp"
#include "hwiener/constructors.hpp"
#include "hwiener/errors.hpp"
#include "hwiener/indices.hpp"
#include "oracle.hpp"

using namespace hwiener;

namespace {
const auto kId = WeightFunction::power(1);
}

TEST(Path, Examples) {
  EXPECT_EQ(wh_path(4, kId).as_exact(), Rational(10));
  EXPECT_EQ(wh_path(1, kId).as_exact(), Rational(0));
  EXPECT_EQ(wh_path(1, WeightFunction::power(-1)).as_double(), 0.0);
  EXPECT_EQ(wh_path(3, WeightFunction::power(2)).as_exact(), Rational(6));
  EXPECT_THROW(wh_path(0, kId), DomainError);
}

TEST(Cycle, Examples) {
  EXPECT_EQ(wh_cycle(5, kId).as_exact(), Rational(15));
  EXPECT_EQ(wh_cycle(6, kId).as_exact(), Rational(27));
  const auto t = WeightFunction::table({2.5, 7.0});
  EXPECT_DOUBLE_EQ(wh_cycle(3, t).as_double(), 7.5);
  EXPECT_THROW(wh_cycle(2, kId), DomainError);
}

TEST(Jn, Examples) {
  EXPECT_EQ(wh_jn(6, kId).as_exact(), Rational(24));
  EXPECT_EQ(wh_jn(4, kId).as_exact(), Rational(8));
  EXPECT_EQ(wh_jn(6, WeightFunction::power(2)).as_exact(), Rational(42));
  EXPECT_THROW(wh_jn(3, kId), DomainError);
}

TEST(F, Examples) {
  EXPECT_EQ(f_closed(3, 6, kId).as_exact(), Rational(31));
  EXPECT_EQ(f3_collapsed(6, kId).as_exact(), Rational(31));
  EXPECT_EQ(f_closed(6, 6, kId).as_exact(), Rational(27));
  EXPECT_EQ(f_closed(12, 13, kId).as_exact().num() - f_closed(11, 13, kId).as_exact().num(), Int{5});
  EXPECT_THROW(f_closed(2, 6, kId), DomainError);
  EXPECT_THROW(f_closed(7, 6, kId), DomainError);
}

TEST(F, MatchesConstructedGraphs) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  std::vector<double> table(24);
  for (auto& v : table) v = pos(rng);
  const std::vector<WeightFunction> exact = {WeightFunction::power(1), WeightFunction::power(2),
                                             WeightFunction::power(3)};
  const std::vector<WeightFunction> floats = {WeightFunction::power(-1), WeightFunction::table(table),
                                              WeightFunction::q_bracket(0.5),
                                              WeightFunction::q_bracket_times_q_pow_l_minus_d(0.8)};
  for (int n = 3; n <= 12; ++n) {
    for (int r = 3; r <= n; ++r) {
      const auto g = g_rn(r, n);
      for (const auto& h : exact) {
        EXPECT_EQ(f_closed(r, n, h).as_exact(), w_h(g, h).as_exact()) << r << "," << n << " " << h.description();
        EXPECT_EQ(f_closed(r, n, h).as_exact(), Rational(oracle::pair_sum_exact(g, std::get<Power>(h.variant()).lambda)));
      }
      for (const auto& h : floats) {
        const double ref = w_h(g, h).as_double();
        EXPECT_NEAR(f_closed(r, n, h).as_double(), ref, 1e-9 * ref) << r << "," << n << " " << h.description();
      }
    }
  }
}

TEST(F, PairCountBothParities) {
  const auto h0 = WeightFunction::power(0);
  for (int n = 3; n <= 30; ++n)
    for (int r = 3; r <= n; ++r) EXPECT_EQ(f_closed(r, n, h0).as_exact(), Rational(Int{n} * (n - 1) / 2));
}

TEST(F, CollapsedFormAgrees) {
  for (int n = 3; n <= 30; ++n) {
    for (const auto& h : {WeightFunction::power(1), WeightFunction::power(2), WeightFunction::power(0)})
      EXPECT_EQ(f_closed(3, n, h).as_exact(), f3_collapsed(n, h).as_exact());
    const auto hr = WeightFunction::power(-1.5);
    EXPECT_NEAR(f_closed(3, n, hr).as_double(), f3_collapsed(n, hr).as_double(), 1e-12 * n * n);
  }
}

TEST(Families, AgreeWithOracleUpTo30) {
  for (int p : {1, 2}) {
    for (int n = 1; n <= 30; ++n) {
      const auto h = WeightFunction::power(p);
      EXPECT_EQ(wh_path(n, h).as_exact(), Rational(oracle::pair_sum_exact(path(n), p)));
      if (n >= 3) EXPECT_EQ(wh_cycle(n, h).as_exact(), Rational(oracle::pair_sum_exact(cycle(n), p)));
      if (n >= 4) EXPECT_EQ(wh_jn(n, h).as_exact(), Rational(oracle::pair_sum_exact(j_graph(n), p)));
    }
  }
}

TEST(Families, CorollaryFormulas) {
  for (Int n = 6; n <= 50; ++n) {
    EXPECT_EQ(wh_jn(static_cast<int>(n), kId).as_exact(), Rational(n * (n - 2)));
    EXPECT_EQ(f_closed(3, static_cast<int>(n), kId).as_exact(), Rational((n * n * n - 7 * n + 12) / 6));
  }
}

TEST(Families, SecondQVariantUsesFamilyDiameter) {
  const auto h = WeightFunction::q_bracket_times_q_pow_l_minus_d(0.6);
  for (int n = 4; n <= 10; ++n) {
    EXPECT_NEAR(wh_path(n, h).as_double(), w_h(path(n), h).as_double(), 1e-12 * n * n);
    EXPECT_NEAR(wh_cycle(n, h).as_double(), w_h(cycle(n), h).as_double(), 1e-12 * n * n);
    EXPECT_NEAR(wh_jn(n, h).as_double(), w_h(j_graph(n), h).as_double(), 1e-12 * n * n);
  }
}

TEST(Families, LargeExactValuesDoNotOverflow) {
  EXPECT_EQ(f_closed(3, 200, WeightFunction::power(5)).mode(), Mode::Exact);
  EXPECT_THROW(wh_path(100, WeightFunction::power(100)), std::overflow_error);
}
