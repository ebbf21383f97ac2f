#include <gtest/gtest.h>

#include <array>

#include "triso/polynomial.hpp"

namespace triso {
namespace {

using P2 = Polynomial<2>;

TEST(Polynomial, ConstantsAndVariables) {
  const P2 x = P2::variable(0);
  const std::array<double, 2> pt{3.0, -2.0};
  EXPECT_EQ(P2(5.0).evaluate(pt), 5.0);
  EXPECT_EQ(x.evaluate(pt), 3.0);
  EXPECT_EQ(P2::variable(1).evaluate(pt), -2.0);
  EXPECT_TRUE(P2(0.0).is_zero());
  EXPECT_EQ(P2(0.0).degree(), -1);
  EXPECT_EQ(P2(2.0).degree(), 0);
}

TEST(Polynomial, ArithmeticMatchesPointwise) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 p = 3.0 * x * x * y - 2.0 * y + 1.0;
  const P2 q = x - y * y;
  const std::array<double, 2> pt{1.5, 0.25};
  const double pv = p.evaluate(pt), qv = q.evaluate(pt);
  EXPECT_DOUBLE_EQ((p + q).evaluate(pt), pv + qv);
  EXPECT_DOUBLE_EQ((p - q).evaluate(pt), pv - qv);
  EXPECT_DOUBLE_EQ((p * q).evaluate(pt), pv * qv);
  EXPECT_DOUBLE_EQ((-p).evaluate(pt), -pv);
  EXPECT_DOUBLE_EQ(q.pow(3).evaluate(pt), qv * qv * qv);
  EXPECT_EQ(q.pow(0), P2(1.0));
}

TEST(Polynomial, CancellationRemovesTerms) {
  const P2 x = P2::variable(0);
  EXPECT_TRUE((x * x - x * x).is_zero());
  EXPECT_EQ(((x + 1.0) * (x - 1.0)).size(), 2u);
}

TEST(Polynomial, Derivative) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 p = 4.0 * x.pow(3) * y * y + 7.0 * y + 2.0;
  EXPECT_EQ(p.derivative(0), 12.0 * x * x * y * y);
  EXPECT_EQ(p.derivative(1), 8.0 * x.pow(3) * y + 7.0);
  EXPECT_TRUE(P2(3.0).derivative(0).is_zero());
}

TEST(Polynomial, FromMonomialsRoundTrip) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 p = 2.0 * x * y - 5.0 * y.pow(4) + 0.5;
  const auto table = p.monomials();
  EXPECT_EQ(P2::from_monomials(table), p);
  EXPECT_EQ(p.degree(), 4);
}

TEST(Polynomial, ExtendedEvaluationAgrees) {
  const P2 x = P2::variable(0), y = P2::variable(1);
  const P2 p = (x - y).pow(5);
  const std::array<double, 2> pt{0.7, -1.3};
  EXPECT_NEAR(static_cast<double>(p.evaluate_as<long double>(pt)), p.evaluate(pt), 1e-12);
}

}  // namespace
}  // namespace triso
