#include <gtest/gtest.h>

#include "hwiener/canonical.hpp"
#include "hwiener/closed_forms.hpp"
#include "hwiener/constructors.hpp"
#include "hwiener/errors.hpp"
#include "hwiener/extremal.hpp"
#include "hwiener/report_io.hpp"

using namespace hwiener;

namespace {
void expect_all_pass(const TheoremClaims& c) {
  EXPECT_EQ(c.lower_value, ClaimStatus::Pass);
  EXPECT_EQ(c.lower_unique, ClaimStatus::Pass);
  EXPECT_EQ(c.upper_value, ClaimStatus::Pass);
  EXPECT_EQ(c.upper_unique, ClaimStatus::Pass);
}

std::set<CanonicalForm> only(const Graph& g) { return {canonical_form(g)}; }
}  // namespace

TEST(Verify, IdentityN6) {
  const auto r = verify_theorem(6, WeightFunction::power(1));
  EXPECT_EQ(r.graphs_scanned, 3660u);
  EXPECT_EQ(r.min_value->as_exact(), Rational(24));
  EXPECT_EQ(r.max_value->as_exact(), Rational(31));
  EXPECT_EQ(r.argmin_forms, only(j_graph(6)));
  EXPECT_EQ(r.argmax_forms, only(g_rn(3, 6)));
  EXPECT_EQ(r.monotonicity, Monotonicity::StrictlyIncreasing);
  expect_all_pass(r.claims);
  EXPECT_FALSE(r.partial());
  EXPECT_FALSE(r.counterexample);
}

TEST(Verify, IdentityN7) {
  const auto r = verify_theorem(7, WeightFunction::power(1));
  EXPECT_EQ(r.graphs_scanned, 68295u);
  EXPECT_EQ(r.min_value->as_exact(), Rational(35));
  EXPECT_EQ(r.max_value->as_exact(), Rational(7 * 7 * 7 - 7 * 7 + 12, 6));
  expect_all_pass(r.claims);
}

TEST(Verify, DecreasingWeightSwapsDirections) {
  const auto r = verify_theorem(6, WeightFunction::power(-1));
  EXPECT_EQ(r.monotonicity, Monotonicity::StrictlyDecreasing);
  EXPECT_EQ(r.argmin_forms, only(g_rn(3, 6)));
  EXPECT_EQ(r.argmax_forms, only(j_graph(6)));
  EXPECT_NEAR(r.min_value->as_double(), f_closed(3, 6, WeightFunction::power(-1)).as_double(), 1e-12);
  EXPECT_NEAR(r.max_value->as_double(), wh_jn(6, WeightFunction::power(-1)).as_double(), 1e-12);
  expect_all_pass(r.claims);
}

TEST(Verify, OtherStrictWeights) {
  for (int n : {6, 7}) {
    for (const auto& h : {WeightFunction::power(2), WeightFunction::power(-2), WeightFunction::q_bracket(2)}) {
      const auto r = verify_theorem(n, h);
      expect_all_pass(r.claims);
    }
  }
}

TEST(Verify, SmallNIsNotApplicable) {
  const auto r = verify_theorem(5, WeightFunction::power(1));
  EXPECT_EQ(r.graphs_scanned, 222u);
  EXPECT_TRUE(r.min_value);
  EXPECT_EQ(r.claims, TheoremClaims{});
  EXPECT_TRUE(r.passed());
}

TEST(Verify, RefusesNonMonotoneAndDiameterWeights) {
  EXPECT_THROW(verify_theorem(6, WeightFunction::power(0)), DomainError);
  EXPECT_THROW(verify_theorem(6, WeightFunction::table({1, 1, 2, 3, 4})), DomainError);
  EXPECT_THROW(verify_theorem(6, WeightFunction::q_bracket_times_q_pow_l_minus_d(0.5)), DomainError);
  EXPECT_THROW(verify_theorem(10, WeightFunction::power(1)), CapExceeded);
}

TEST(Verify, NonMonotoneAllowedWhenHypothesisWaived) {
  VerifyOptions opt;
  opt.require_theorem_hypothesis = false;
  const auto r = verify_theorem(6, WeightFunction::power(0), opt);
  EXPECT_EQ(r.min_value->as_exact(), Rational(15));
  EXPECT_EQ(r.max_value->as_exact(), Rational(15));
  EXPECT_EQ(r.claims, TheoremClaims{});
}

TEST(Merge, ShardsAreAssociativeAndOrderIndependent) {
  const auto h = WeightFunction::power(2);
  std::vector<VerificationReport> parts;
  for (int i = 0; i < 3; ++i) {
    VerifyOptions opt;
    opt.enumeration.shard = {i, 3};
    parts.push_back(verify_theorem(6, h, opt));
    EXPECT_TRUE(parts.back().partial());
  }
  const auto left = merge_reports(merge_reports(parts[0], parts[1]), parts[2]);
  const auto right = merge_reports(parts[0], merge_reports(parts[1], parts[2]));
  const auto swapped = merge_reports(parts[2], merge_reports(parts[1], parts[0]));
  EXPECT_EQ(to_json(left), to_json(right));
  EXPECT_EQ(to_json(left), to_json(swapped));

  const auto full = verify_theorem(6, h);
  EXPECT_FALSE(left.partial());
  EXPECT_EQ(left.graphs_scanned, full.graphs_scanned);
  EXPECT_EQ(left.min_value->as_exact(), full.min_value->as_exact());
  EXPECT_EQ(left.max_value->as_exact(), full.max_value->as_exact());
  EXPECT_EQ(left.argmin_forms, full.argmin_forms);
  EXPECT_EQ(left.argmax_forms, full.argmax_forms);
  EXPECT_EQ(left.claims, full.claims);
  EXPECT_THROW(merge_reports(parts[0], parts[0]), DomainError);
}

TEST(Merge, ThreadedMatchesSequential) {
  const auto h = WeightFunction::power(-1);
  const auto a = verify_theorem_sharded(6, h, 4, 2);
  const auto b = verify_theorem_sharded(6, h, 4, 1);
  EXPECT_EQ(to_json(a), to_json(b));
  expect_all_pass(a.claims);
}

TEST(Dominance, IdentityTo30) {
  const auto checks = check_f3_dominance(30, WeightFunction::power(1));
  std::size_t expected = 0;
  for (int n = 4; n <= 30; ++n) expected += n - 3;
  EXPECT_EQ(checks.size(), expected);
  for (const auto& c : checks) EXPECT_EQ(c.pass, !(c.r == 4 && c.n == 4)) << c.r << "," << c.n;
}

// G_{3,4} and C_4 share the distance distribution {1:4, 2:2}, so the two
// values tie for every h and the strict comparison fails at r = n = 4.
TEST(Dominance, TieAtFourForEveryWeight) {
  for (const auto& h : {WeightFunction::power(1), WeightFunction::power(-1), WeightFunction::q_bracket(3)}) {
    EXPECT_TRUE(same_value(f_closed(3, 4, h), f_closed(4, 4, h)));
    const auto checks = check_f3_dominance(4, h);
    ASSERT_EQ(checks.size(), 1u);
    EXPECT_FALSE(checks[0].pass);
  }
}

TEST(Dominance, DecreasingWeights) {
  for (const auto& h : {WeightFunction::power(-1), WeightFunction::power(-2)})
    for (const auto& c : check_f3_dominance(20, h)) EXPECT_EQ(c.pass, !(c.r == 4 && c.n == 4)) << c.r << "," << c.n;
}

TEST(Dominance, NonMonotoneInR) {
  const auto h = WeightFunction::power(1);
  EXPECT_EQ(f_closed(12, 13, h).as_exact().num() - f_closed(11, 13, h).as_exact().num(), Int{5});
}

TEST(Dominance, Errors) {
  EXPECT_THROW(check_f3_dominance(10, WeightFunction::power(0)), DomainError);
  EXPECT_THROW(check_f3_dominance(3, WeightFunction::power(1)), DomainError);
}

TEST(Claims, StatusStrings) {
  for (auto s : {ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::NotApplicable})
    EXPECT_EQ(parse_claim_status(to_string(s)), s);
  EXPECT_EQ(verification_domain(6), 4);
  EXPECT_EQ(verification_domain(3), 2);
}
