// Copyright 2026 The ordlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ordlab/exact_scalar.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "ordlab/errors.h"

namespace ordlab {
namespace {

RadicandList B23() { return RadicandList({2, 3}); }

ExactScalar Q23(long r, long s, long t) {
  return ExactScalar(B23(), {Rational(r), Rational(s), Rational(t)});
}

TEST(RadicandListTest, RejectsBadLists) {
  EXPECT_THROW(RadicandList({4}), DomainError);
  EXPECT_THROW(RadicandList({3, 2}), DomainError);
  EXPECT_THROW(RadicandList({1}), DomainError);
  EXPECT_THROW(RadicandList({2, 2}), DomainError);
  EXPECT_NO_THROW(RadicandList({2, 3, 5, 6}));
}

TEST(ExactScalarTest, HandPickedSigns) {
  // sqrt2 + sqrt3 = 3.146...
  EXPECT_EQ(scalar_sign(Q23(-3, 1, 1)), 1);
  // 7 sqrt2 = 9.899...
  EXPECT_EQ(scalar_sign(Q23(-10, 7, 0)), -1);
  EXPECT_EQ(scalar_sign(Q23(0, 0, 0)), 0);
  EXPECT_EQ(scalar_sign(Q23(5, 0, 0)), 1);
}

TEST(ExactScalarTest, AgreesWithSquaringOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-60, 60);
  for (int trial = 0; trial < 3000; ++trial) {
    const long r = d(rng), s = d(rng), t = d(rng);
    ASSERT_EQ(scalar_sign(Q23(r, s, t)), oracle::sign_23(r, s, t)) << r << " " << s << " " << t;
  }
}

TEST(ExactScalarTest, NearZeroNeedsRefinement) {
  // 140^2 < 2 * 99^2, so 99 sqrt2 - 140 = 0.0071... is positive.
  const SignReport near = sign_with_report(Q23(-140, 99, 0));
  EXPECT_EQ(near.sign, oracle::sign_23(-140, 99, 0));
  EXPECT_EQ(near.sign, 1);
  // 161564^2 - 2 * 114243^2 = -2, so this one is about 6e-6 from zero.
  const SignReport closer = sign_with_report(Q23(-161564, 114243, 0));
  EXPECT_EQ(closer.sign, oracle::sign_23(-161564, 114243, 0));
  EXPECT_GT(closer.precision_bits, kInitialSignPrecisionBits);
  EXPECT_GE(closer.refinements, near.refinements);
  EXPECT_EQ(sign_with_report(Q23(161564, -114243, 0)).sign, -closer.sign);
  const SignReport easy = sign_with_report(Q23(3, 0, 0));
  EXPECT_EQ(easy.refinements, 0);
}

TEST(ExactScalarTest, ArithmeticAndBasisChecks) {
  const ExactScalar a = Q23(1, 2, 3);
  const ExactScalar b = Q23(-1, 1, 0);
  EXPECT_EQ(a + b, Q23(0, 3, 3));
  EXPECT_EQ(a - b, Q23(2, 1, 3));
  EXPECT_EQ(Rational(2) * a, Q23(2, 4, 6));
  EXPECT_EQ(-a, Q23(-1, -2, -3));
  const ExactScalar other = ExactScalar::rational(RadicandList({5}), 1);
  EXPECT_THROW(a + other, BasisMismatch);
  EXPECT_THROW(ExactScalar::root(B23(), 5), DomainError);
  EXPECT_THROW(ExactScalar(B23(), {Rational(1)}), DimensionMismatch);
  EXPECT_TRUE(Q23(4, 0, 0).is_rational());
  EXPECT_FALSE(Q23(4, 0, 1).is_rational());
  EXPECT_NEAR(Q23(0, 1, 1).to_double(), 3.1462643699419726, 1e-12);
}

TEST(ExactScalarTest, InnerProduct) {
  const Functional v{ExactScalar::root(B23(), 2), ExactScalar::root(B23(), 3),
                     ExactScalar::rational(B23(), 1)};
  EXPECT_EQ(inner_product(v, int_vector({1, 1, -3})), Q23(-3, 1, 1));
  EXPECT_EQ(scalar_sign(inner_product(v, int_vector({1, 1, -3}))), 1);
  EXPECT_THROW(inner_product(v, int_vector({1, 1})), DimensionMismatch);
}

TEST(RadicalNumberTest, ProductsOfRoots) {
  const RadicalNumber r2 = RadicalNumber::root(2);
  const RadicalNumber r3 = RadicalNumber::root(3);
  EXPECT_EQ(r2 * r2, RadicalNumber(Rational(2)));
  EXPECT_EQ(r2 * r3, RadicalNumber::root(6));
  EXPECT_TRUE((r2 * r3 - RadicalNumber::root(6)).is_zero());
  // (3 - 2 sqrt2)(3 + 2 sqrt2) = 1.
  const RadicalNumber x = RadicalNumber(Rational(3)) - RadicalNumber(Rational(2)) * r2;
  const RadicalNumber y = RadicalNumber(Rational(3)) + RadicalNumber(Rational(2)) * r2;
  EXPECT_EQ(x * y, RadicalNumber(Rational(1)));
  EXPECT_EQ(x.sign(), 1);
  // sqrt6 - 2.449 > 0, sqrt6 - 2.45 < 0.
  EXPECT_EQ((RadicalNumber::root(6) - RadicalNumber(Rational(2449, 1000))).sign(), 1);
  EXPECT_EQ((RadicalNumber::root(6) - RadicalNumber(Rational(245, 100))).sign(), -1);
}

TEST(RadicalNumberTest, ProductSignsMatchOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const long r1 = d(rng), s1 = d(rng), t1 = d(rng);
    const long r2 = d(rng), s2 = d(rng), t2 = d(rng);
    const RadicalNumber p =
        RadicalNumber(Q23(r1, s1, t1)) * RadicalNumber(Q23(r2, s2, t2));
    ASSERT_EQ(p.sign(), oracle::sign_23(r1, s1, t1) * oracle::sign_23(r2, s2, t2));
  }
}

TEST(NumericTest, ParsingRationals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), SchemaError);
  EXPECT_THROW(parse_rational("abc"), SchemaError);
  EXPECT_THROW(parse_integer("1.5"), SchemaError);
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

}  // namespace
}  // namespace ordlab
