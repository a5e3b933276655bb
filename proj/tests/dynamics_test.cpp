#include <gtest/gtest.h>

#include <cmath>

#include "treeharm/dual_dynamics.hpp"

using namespace treeharm;

namespace {

TEST(Restrict, FormulaAndExceptionalPair) {
  auto res = restrict_to_plus(4, Rational(1, 3));
  ASSERT_TRUE(std::holds_alternative<RestrictSingle>(res));
  EXPECT_EQ(std::get<RestrictSingle>(res).gamma, Rational(-5, 27));

  EXPECT_TRUE(std::holds_alternative<ExceptionalPair>(restrict_to_plus(4, Rational(0))));
  EXPECT_TRUE(std::holds_alternative<ExceptionalPair>(restrict_to_plus(3, Rational(0))));

  // alpha and -alpha restrict to the same parameter.
  for (int d : {3, 4, 5})
    for (int k = 1; k <= 8; ++k) {
      Rational alpha(k, 8);
      auto a = restrict_to_plus(d, alpha);
      auto b = restrict_to_plus(d, -alpha);
      EXPECT_EQ(std::get<RestrictSingle>(a).gamma, std::get<RestrictSingle>(b).gamma);
    }
}

TEST(Restrict, DomainChecks) {
  EXPECT_THROW(restrict_to_plus(4, Rational(3, 2)), DomainError);
  EXPECT_THROW(restrict_to_plus(4, Rational(-3, 2)), DomainError);
  EXPECT_THROW(restrict_to_plus(2, Rational(0)), DomainError);
  EXPECT_NO_THROW(restrict_to_plus(3, Rational(1)));
  EXPECT_NO_THROW(restrict_to_plus(3, Rational(-1)));
}

TEST(Induce, ExactPairsAndExceptionalImage) {
  auto res = induce_from_plus(4, Rational(-5, 27));
  ASSERT_TRUE(std::holds_alternative<InducePair>(res));
  const auto& pair = std::get<InducePair>(res);
  EXPECT_TRUE(pair.alpha_plus.exact);
  EXPECT_EQ(pair.alpha_plus.exact_value, Rational(1, 3));
  EXPECT_EQ(pair.alpha_minus.exact_value, Rational(-1, 3));

  auto exc = induce_from_plus(4, Rational(-1, 3));
  ASSERT_TRUE(std::holds_alternative<ExceptionalImage>(exc));
  EXPECT_EQ(std::get<ExceptionalImage>(exc).alpha, Rational(0));

  EXPECT_THROW(induce_from_plus(4, Rational(-1, 2)), DomainError);
  EXPECT_THROW(induce_from_plus(4, Rational(2)), DomainError);
}

TEST(Induce, IrrationalRootsReportedAsFloats) {
  auto res = induce_from_plus(4, Rational(1, 2));
  ASSERT_TRUE(std::holds_alternative<InducePair>(res));
  const auto& pair = std::get<InducePair>(res);
  EXPECT_FALSE(pair.alpha_plus.exact);
  EXPECT_NEAR(pair.alpha_plus.value, std::sqrt(5.0 / 8.0), 1e-15);
  EXPECT_NEAR(pair.alpha_minus.value, -std::sqrt(5.0 / 8.0), 1e-15);
}

// Induction after restriction recovers {alpha, -alpha}; the acceptance set.
TEST(RoundTrip, RestrictionThenInduction) {
  for (Rational alpha : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
    auto gamma = restrict_to_plus(4, alpha);
    ASSERT_TRUE(std::holds_alternative<RestrictSingle>(gamma));
    auto back = induce_from_plus(4, std::get<RestrictSingle>(gamma).gamma);
    ASSERT_TRUE(std::holds_alternative<InducePair>(back));
    const auto& pair = std::get<InducePair>(back);
    ASSERT_TRUE(pair.alpha_plus.exact);
    EXPECT_EQ(pair.alpha_plus.exact_value, alpha);
    EXPECT_EQ(pair.alpha_minus.exact_value, -alpha);
  }
  // Property over a rational sweep.
  for (int d : {3, 5}) {
    for (int k = 1; k <= 40; ++k) {
      Rational alpha(k, 40);
      auto gamma = std::get<RestrictSingle>(restrict_to_plus(d, alpha)).gamma;
      const auto& pair = std::get<InducePair>(induce_from_plus(d, gamma));
      ASSERT_TRUE(pair.alpha_plus.exact);
      EXPECT_EQ(pair.alpha_plus.exact_value, alpha);
    }
  }
}

TEST(BaseChange, EndpointsAndMonotonicity) {
  // (4,6): domain [-1/5, 1]; the lower endpoint maps to -1/(d-1) = -1/3 and
  // is flagged as the exceptional parameter.
  auto low = base_change(4, 6, Rational(-1, 5));
  EXPECT_EQ(low.alpha_vprime, Rational(-1, 3));
  EXPECT_TRUE(low.exceptional_endpoint);
  auto one = base_change(4, 6, Rational(1));
  EXPECT_EQ(one.alpha_vprime, Rational(1));
  EXPECT_FALSE(one.exceptional_endpoint);

  auto low34 = base_change(3, 4, Rational(-1, 3));
  EXPECT_EQ(low34.alpha_vprime, Rational(-1, 2));
  EXPECT_TRUE(low34.exceptional_endpoint);
  EXPECT_EQ(base_change(3, 4, Rational(1)).alpha_vprime, Rational(1));

  Rational prev = base_change(4, 6, Rational(-1, 5)).alpha_vprime;
  for (int k = 1; k <= 24; ++k) {
    Rational alpha = Rational(-1, 5) + (Rational(1) - Rational(-1, 5)) * k / 24;
    Rational cur = base_change(4, 6, alpha).alpha_vprime;
    EXPECT_GT(cur, prev);
    prev = cur;
  }
  EXPECT_EQ(prev, Rational(1));
}

TEST(BaseChange, DomainChecks) {
  EXPECT_THROW(base_change(4, 6, Rational(-1, 4)), DomainError);
  EXPECT_THROW(base_change(4, 6, Rational(21, 20)), DomainError);
  EXPECT_THROW(base_change(2, 6, Rational(0)), DomainError);
  EXPECT_NO_THROW(base_change(6, 4, Rational(-1, 3)));
}

TEST(SpecialDynamics, IndexTwoTable) {
  auto rows = special_dynamics(3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].op, "Ind");
  EXPECT_EQ(rows[0].source, "sigma");
  EXPECT_EQ(rows[0].images, (std::vector<std::string>{"sigma_plus", "sigma_minus"}));
  EXPECT_EQ(rows[1].op, "Res");
  EXPECT_EQ(rows[1].source, "sigma_plus");
  EXPECT_EQ(rows[1].images, (std::vector<std::string>{"sigma"}));
  EXPECT_EQ(rows[2].source, "sigma_minus");
  EXPECT_EQ(rows[2].images, (std::vector<std::string>{"sigma"}));
  EXPECT_THROW(special_dynamics(2), DomainError);
}

}  // namespace
