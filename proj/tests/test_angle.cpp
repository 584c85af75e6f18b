#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hermann/exact_value.hpp"

using namespace hermann;

TEST(Angle, ParsesExactAndNumeric) {
  EXPECT_TRUE(Angle::parse("pi/3").is_exact());
  EXPECT_EQ(Angle::parse("-pi/6").pi_multiple(), Rational(-1, 6));
  EXPECT_EQ(Angle::parse("5*pi/12").pi_multiple(), Rational(5, 12));
  EXPECT_FALSE(Angle::parse("0.1").is_exact());
  EXPECT_NEAR(Angle::parse("atan(sqrt(5))").to_radians(), std::atan(std::sqrt(5.0)), 1e-15);
  EXPECT_NEAR(Angle::parse("pi/2-2*atan(sqrt(7/3))").to_radians(), kPi / 2 - 2 * std::atan(std::sqrt(7.0 / 3)), 1e-14);
  EXPECT_THROW(Angle::parse("pi/"), ParseError);
  EXPECT_THROW(Angle::parse("banana"), ParseError);
}

TEST(Angle, ReduceModPi) {
  EXPECT_EQ(reduce_mod_pi(Angle::pi_times(7, 6)).pi_multiple(), Rational(1, 6));
  EXPECT_EQ(reduce_mod_pi(Angle::pi_times(-1, 2)).pi_multiple(), Rational(1, 2));
  EXPECT_EQ(reduce_mod_pi(Angle::pi_times(1)).pi_multiple(), Rational(0));
}

TEST(Angle, TwelfthClass) {
  EXPECT_EQ(twelfth_class(Angle::pi_times(-1, 6)), 10);
  EXPECT_EQ(twelfth_class(Angle::pi_times(1, 4)), 3);
  EXPECT_FALSE(twelfth_class(Angle::pi_times(1, 5)).has_value());
  bool snapped = false;
  EXPECT_EQ(twelfth_class(Angle::radians(kPi / 3 + 1e-12), 1e-9, &snapped), 4);
  EXPECT_TRUE(snapped);
}

TEST(ExactValue, KnownTangents) {
  ExactValue t = tan_exact(Angle::pi_times(5, 12));  // 2 + sqrt3
  EXPECT_EQ(t.rational_part(), Rational(2));
  EXPECT_EQ(t.sqrt3_part(), Rational(1));
  EXPECT_NEAR(t.to_double(), 3.7320508075688772, 1e-12);
  EXPECT_EQ(tan_exact(Angle::pi_times(1, 6)), ExactValue(Rational(0), Rational(1, 3)));
  EXPECT_TRUE(tan_exact(Angle::pi_times(1, 2)).is_infinite());
  EXPECT_TRUE(cot_exact(Angle::pi_times(0)).is_infinite());
  EXPECT_TRUE(cot_exact(Angle::pi_times(1, 2)).is_zero());
  EXPECT_TRUE(tan_exact(Angle::pi_times(1, 5)).is_numeric());
}

TEST(ExactValue, FieldArithmetic) {
  ExactValue a(Rational(1), Rational(1));   // 1 + sqrt3
  ExactValue b(Rational(-1), Rational(1));  // -1 + sqrt3
  EXPECT_EQ(a * b, ExactValue(Rational(2)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a - a, ExactValue());
  EXPECT_EQ(ExactValue(Rational(0), Rational(-1)).sign(), -1);
  EXPECT_EQ(ExactValue(Rational(2), Rational(-1)).sign(), 1);  // 2 - sqrt3 > 0
}

// Every exact tangent and cotangent on the pi/12 grid agrees with libm.
TEST(ExactValue, GridAgreesWithLibm) {
  for (int k = -24; k <= 24; ++k) {
    Angle a = Angle::pi_times(k, 12);
    ExactValue t = tan_exact(a), c = cot_exact(a);
    const double x = a.to_radians();
    if (!t.is_infinite()) EXPECT_NEAR(t.to_double(), std::tan(x), 1e-12 * std::max(1.0, std::fabs(std::tan(x)))) << k;
    if (!c.is_infinite()) EXPECT_NEAR(c.to_double(), 1 / std::tan(x), 1e-12 * std::max(1.0, std::fabs(1 / std::tan(x)))) << k;
    if (!t.is_infinite() && !c.is_infinite() && !t.is_zero()) EXPECT_EQ(t * c, ExactValue(Rational(1))) << k;
  }
}

TEST(ExactValue, RandomNumericAgreesWithLibm) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng);
    if (std::fabs(std::cos(x)) < 1e-6 || std::fabs(std::sin(x)) < 1e-6) continue;
    Angle a = Angle::radians(x);
    const double t = tan_exact(a).to_double(), c = cot_exact(a).to_double();
    ASSERT_NEAR(t, std::tan(x), 1e-12 * std::max(1.0, std::fabs(t)));
    ASSERT_NEAR(t * c, 1.0, 1e-12);
  }
}
