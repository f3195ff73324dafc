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

#include "ordlab/probes.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

#include "oracles.h"
#include "ordlab/errors.h"

namespace ordlab {
namespace {

RadicandList B23() { return RadicandList({2, 3}); }

Functional Root23() {
  return {ExactScalar::root(B23(), 2), ExactScalar::root(B23(), 3),
          ExactScalar::rational(B23(), 1)};
}

Functional Rat(std::vector<Rational> v) { return rational_functional(RadicandList(), v); }

LatticeOrder RatOrder(int n, std::vector<std::vector<Rational>> rows) {
  std::vector<Functional> vs;
  for (auto& r : rows) vs.push_back(Rat(r));
  return make_order(n, vs);
}

// sign of <(sqrt2 - a1, sqrt3 - a2, 1), z>.
int OracleSign(long a1, long a2, const IntVector& z) {
  const long z0 = z(0).convert_to<long>(), z1 = z(1).convert_to<long>(),
             z2 = z(2).convert_to<long>();
  return oracle::sign_23(z2 - a1 * z0 - a2 * z1, z0, z1);
}

TEST(LatticeBallTest, Counts) {
  EXPECT_EQ(lattice_ball(2, 1).size(), 4u);
  EXPECT_EQ(lattice_ball(2, 2).size(), 12u);
  EXPECT_EQ(lattice_ball(3, 1).size(), 6u);
  EXPECT_TRUE(lattice_ball(3, 0).empty());
  const NeighborhoodSpec u = positive_ball(Root23(), 2);
  for (const IntVector& w : u.elements) EXPECT_EQ(OracleSign(0, 0, w), 1);
}

TEST(SeparatingWitnessTest, HandDerivedPair) {
  const Functional v = Rat({1, 1});
  EXPECT_EQ(separating_witness(v, LnMatrix(int_vector({1}))), int_vector({2, -1}));
  EXPECT_EQ(separating_witness(v, LnMatrix(int_vector({-1}))), int_vector({-2, 3}));
}

TEST(SeparatingWitnessTest, Preconditions) {
  EXPECT_THROW(separating_witness(Rat({1, 1}), LnMatrix::identity(2)), DomainError);
  EXPECT_THROW(separating_witness(Rat({1, 0}), LnMatrix(int_vector({1}))), DomainError);
  EXPECT_THROW(separating_witness(Rat({1, 1}), LnMatrix(int_vector({1, 1}))), DimensionMismatch);
}

TEST(SeparatingWitnessTest, NegativeLastCoordinate) {
  const Functional v = Rat({2, -3, -1});
  for (const LnMatrix& a : ln_box(3, 2)) {
    const IntVector z = separating_witness(v, a);
    ASSERT_EQ(scalar_sign(inner_product(v, z)), 1);
    ASSERT_EQ(scalar_sign(inner_product(transform_functional(a, v), z)), -1);
  }
}

TEST(SeparatingWitnessTest, IrrationalAgainstOracle) {
  const Functional v = Root23();
  for (const LnMatrix& a : ln_box(3, 3)) {
    const long a1 = a.row()(0).convert_to<long>(), a2 = a.row()(1).convert_to<long>();
    const IntVector z = separating_witness(v, a);
    ASSERT_EQ(OracleSign(0, 0, z), 1);
    ASSERT_EQ(OracleSign(a1, a2, z), -1);
  }
}

TEST(DiscretenessTest, WitnessSetForDiagonal) {
  const DiscretenessCertificate c = discreteness_witness_set(Rat({1, 1}), 3);
  EXPECT_EQ(c.witnesses, (std::vector<IntVector>{int_vector({-2, 3}), int_vector({2, -1})}));
  EXPECT_EQ(c.log.size(), 6u);
  for (const VerificationEntry& e : c.log) {
    EXPECT_FALSE(e.fixed);
    EXPECT_EQ(e.sign, -1);
  }
  EXPECT_EQ(c.scope, "L_2");
  const DiscretenessCertificate one = discreteness_witness_set(Rat({5}), 3);
  EXPECT_EQ(one.scope, "L_1 trivial");
  EXPECT_TRUE(one.witnesses.empty());
  EXPECT_THROW(discreteness_witness_set(Rat({1, 0}), 3), DomainError);
}

TEST(DiscretenessTest, CaseOneRecursion) {
  const LatticeOrder p = RatOrder(3, {{1, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const DiscretenessCertificate c = ln_smoothness_probe(p, 3);
  EXPECT_EQ(c.witnesses, (std::vector<IntVector>{int_vector({-2, 2, 1}), int_vector({2, -2, 1}),
                                                 int_vector({1, 0, 0}), int_vector({0, 1, 0})}));
  EXPECT_EQ(c.log.size(), 48u);
  EXPECT_EQ(c.trace.size(), 2u);
  for (const IntVector& z : c.witnesses) EXPECT_EQ(classify(p, z), Verdict::kPositive);
}

TEST(DiscretenessTest, StandardOrderIsFixed) {
  const DiscretenessCertificate c = ln_smoothness_probe(standard_order(2), 3);
  EXPECT_EQ(c.log.size(), 6u);
  for (const VerificationEntry& e : c.log) EXPECT_TRUE(e.fixed);
}

TEST(DiscretenessTest, MissingWitnessesAreReported) {
  const LatticeOrder p = RatOrder(2, {{1, 1}, {1, 0}});
  EXPECT_THROW(verify_discreteness(p, {}, 2), VerificationError);
  EXPECT_THROW(verify_discreteness(p, {int_vector({-1, 0})}, 2), VerificationError);
}

TEST(EpsilonTest, Examples) {
  const Functional v = Root23();
  EXPECT_EQ(epsilon_bound(v, {{int_vector({1, 1, -3})}}), Rational(1, 32));
  EXPECT_EQ(epsilon_bound(v, {{int_vector({1, 0, 0})}}), std::nullopt);
  EXPECT_THROW(epsilon_bound(v, {{int_vector({-1, 0, 0})}}), DomainError);
  const NeighborhoodSpec u = positive_ball(v, 3);
  const Rational eps = *epsilon_bound(v, u);
  for (const IntVector& w : u.elements) {
    // <v + eps e3, w> > 0, scaled by the denominator of eps.
    const long den = boost::multiprecision::denominator(eps).convert_to<long>();
    const long num = boost::multiprecision::numerator(eps).convert_to<long>();
    const long w0 = w(0).convert_to<long>(), w1 = w(1).convert_to<long>(),
               w2 = w(2).convert_to<long>();
    ASSERT_EQ(oracle::sign_23(den * w2 + num * w2, den * w0, den * w1), 1);
  }
}

using Key = std::tuple<long, long, long, long>;

// Smallest key among (k0, t0) in the box with 0 < -(k0 sqrt2 + t0 sqrt3) < 1/den.
std::optional<std::pair<long, long>> BrutePair(long box, long den) {
  std::optional<Key> best;
  for (long k0 = -box; k0 <= box; ++k0) {
    for (long t0 = -box; t0 <= box; ++t0) {
      if (k0 == 0 || t0 == 0) continue;
      if (oracle::sign_23(0, -k0, -t0) != 1) continue;
      if (den > 0 && oracle::sign_23(1, den * k0, den * t0) != 1) continue;
      const Key key{std::max(std::abs(k0), std::abs(t0)), std::abs(k0) + std::abs(t0), k0, t0};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return std::nullopt;
  return std::make_pair(std::get<2>(*best), std::get<3>(*best));
}

TEST(CondensationPairTest, FifthBound) {
  const Functional v = Root23();
  const CondensationPair p =
      condensation_pair(v, 1, 1, ExactScalar::rational(B23(), Rational(1, 5)));
  EXPECT_EQ(p.k0, -5);
  EXPECT_EQ(p.t0, 4);
  // 50 > 48 and 2401 < 4800 are the squaring steps behind these two signs.
  EXPECT_EQ(oracle::sign_23(0, 5, -4), 1);
  EXPECT_EQ(oracle::sign_23(1, -25, 20), 1);
  EXPECT_EQ(BrutePair(8, 5), std::make_pair(-5L, 4L));
  EXPECT_EQ(p.shift, ExactScalar(B23(), {Rational(0), Rational(5), Rational(-4)}));
}

TEST(CondensationPairTest, MatchesBruteForce) {
  const Functional v = Root23();
  for (long den : {1L, 2L, 3L, 7L, 10L, 20L, 50L}) {
    const CondensationPair p =
        condensation_pair(v, 1, 1, ExactScalar::rational(B23(), Rational(1, den)));
    const long reach = std::max(std::abs(p.k0.convert_to<long>()), std::abs(p.t0.convert_to<long>()));
    const auto brute = BrutePair(reach + 2, den);
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(p.k0, brute->first) << den;
    EXPECT_EQ(p.t0, brute->second) << den;
  }
  const CondensationPair inf = condensation_pair(v, 1, 1, std::nullopt);
  EXPECT_EQ(std::make_pair(inf.k0.convert_to<long>(), inf.t0.convert_to<long>()),
            *BrutePair(4, 0));
}

TEST(CondensationPairTest, Preconditions) {
  try {
    condensation_pair(Rat({1, 2, 3}), 1, 1, std::nullopt);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("rationally dependent"), std::string::npos);
  }
  EXPECT_THROW(condensation_pair(Root23(), 0, 1, std::nullopt), DomainError);
  EXPECT_THROW(condensation_pair(Rat({1, 2}), 1, 1, std::nullopt), DimensionMismatch);
}

TEST(CondensationTest, SequenceShrinksAndStaysInside) {
  const LexGroupOrder order = default_n_order();
  const std::vector<CondensationSample> samples = condensation_sequence(order, 5);
  ASSERT_EQ(samples.size(), 5u);
  for (size_t j = 0; j < samples.size(); ++j) {
    const CondensationSample& s = samples[j];
    EXPECT_EQ(s.g_name, "b1");
    EXPECT_EQ(s.h_name, "b2");
    for (const IntVector& w : s.neighborhood.elements) {
      ASSERT_EQ(lex_classify(s.transported, NElement{IntVector::Zero(2), w}), Verdict::kPositive);
    }
    EXPECT_FALSE(lex_orders_equal(s.transported, order));
    if (j > 0) EXPECT_EQ(scalar_sign(samples[j - 1].pair.shift - s.pair.shift), 1);
    // x is positive for g^-1 P g iff g x g^-1 is positive for P.
    const GroupElement x = NElement::from({0, 0}, {1, 1, -3});
    EXPECT_EQ(lex_classify(s.transported, x),
              lex_classify(order, multiply(multiply(s.conjugator, x), inverse(s.conjugator))));
  }
  EXPECT_TRUE(condensation_sequence(order, 0).empty());
  EXPECT_THROW(condensation_sequence(order, -1), DomainError);
}

TEST(CondensationTest, RejectsBadGenerators) {
  const LexGroupOrder order = default_n_order();
  const auto gens = generators(order.series.group);
  const NeighborhoodSpec u = positive_ball(Root23(), 1);
  // a1 acts trivially on the kernel.
  EXPECT_THROW(condensation_certificate(order, gens[2], gens[1], u), DomainError);
  EXPECT_THROW(condensation_certificate(order, gens[1], gens[0], u), DomainError);
}

TEST(LiftTest, TriangularSizes) {
  for (int k = 4; k <= 6; ++k) {
    const CondensationSample s = lift_and_condense(k, 2);
    EXPECT_EQ(s.base.series.group, GroupDescriptor::triangular(k, TriangularChain::kThroughN));
    EXPECT_FALSE(orders_equal(s.transported.factors[0], s.base.factors[0]));
  }
  try {
    lift_and_condense(3);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("k = 1, 2, 3"), std::string::npos);
  }
}

TEST(OrbitTest, Examples) {
  const LexGroupOrder h = default_heisenberg_order(1);
  EXPECT_EQ(orbit_enumerate(h, 5, {"y1"}).orders.size(), 11u);
  EXPECT_EQ(orbit_enumerate(h, 0).orders.size(), 1u);
  const OrbitListing l = orbit_enumerate(h, 20, {"y1"});
  EXPECT_EQ(l.orders.size(), 41u);
  EXPECT_TRUE(l.pairwise_distinct);
  // Kernel order deciding by a first: conjugation only shears c, which the
  // second functional sees only on the c axis.
  const LexGroupOrder fixed =
      make_lex_order(GroupDescriptor::heisenberg(1),
                     {RatOrder(2, {{1, 0}, {0, 1}}), standard_order(1)});
  EXPECT_EQ(orbit_enumerate(fixed, 4).orders.size(), 1u);
  EXPECT_THROW(orbit_enumerate(h, 2, {"w"}), DomainError);
}

TEST(AxiomTest, PassAndNegativeControl) {
  const LatticeOrder p = RatOrder(3, {{1, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const AxiomReport ok = axiom_check(p, 4);
  EXPECT_TRUE(ok.passed());
  EXPECT_GT(ok.pairs, 0);
  const AxiomReport bad = axiom_check(3, corrupted_classifier(p, int_vector({1, 0, 0})), 4);
  ASSERT_FALSE(bad.passed());
  EXPECT_EQ(bad.violations.front().kind, "trichotomy");
  const AxiomReport vacuous = axiom_check(p, 0);
  EXPECT_TRUE(vacuous.passed());
  EXPECT_EQ(vacuous.elements, 0);
  EXPECT_TRUE(axiom_check(default_n_order(), 2).passed());
}

TEST(AxiomTest, ClosureViolationDetected) {
  // Not a cone: positive iff the first nonzero coordinate is odd and positive,
  // or even and negative.
  auto weird = [](const IntVector& w) {
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w(i) == 0) continue;
      const bool odd = w(i) % 2 != 0;
      return (w(i) > 0) == odd ? Verdict::kPositive : Verdict::kNegative;
    }
    return Verdict::kZero;
  };
  const AxiomReport r = axiom_check(2, weird, 3);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const AxiomViolation& v) { return v.kind == "closure"; }));
}

}  // namespace
}  // namespace ordlab
