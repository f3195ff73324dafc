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

#include "ordlab/groups.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "ordlab/errors.h"
#include "ordlab/probes.h"

namespace ordlab {
namespace {

using oracle::LMat;

std::vector<long> Longs(const IntVector& v) { return to_longs(v); }

LMat HMat(const HeisenbergElement& g) {
  return oracle::heisenberg_matrix(Longs(g.b), Longs(g.a), g.c.convert_to<long>());
}

LMat NMat(const NElement& g) { return oracle::n_matrix(Longs(g.m), Longs(g.k)); }

LMat TMat(const TriangularElement& g) {
  LMat m(g.k(), g.k());
  for (int i = 0; i < g.k(); ++i) {
    for (int j = 0; j < g.k(); ++j) m(i, j) = g.entries(i, j).convert_to<long>();
  }
  return m;
}

IntVector RandVec(int n, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVector v(n);
  for (int i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

HeisenbergElement RandH(int n, std::mt19937_64& rng) {
  return {RandVec(n, rng, 9), RandVec(n, rng, 9), RandVec(1, rng, 9)(0)};
}

NElement RandN(std::mt19937_64& rng) { return {RandVec(2, rng, 6), RandVec(3, rng, 6)}; }

TriangularElement RandT(int k, std::mt19937_64& rng) {
  const LMat m = oracle::random_unitriangular(k, rng, 5);
  IntMatrix z(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) z(i, j) = m(i, j);
  }
  return TriangularElement::from_matrix(z);
}

TEST(HeisenbergTest, ProductMatchesMatrices) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const HeisenbergElement g = RandH(n, rng), h = RandH(n, rng);
      ASSERT_EQ(HMat(h_multiply(g, h)), HMat(g) * HMat(h));
      ASSERT_EQ(h_multiply(g, h_inverse(g)), HeisenbergElement::identity(n));
    }
  }
}

TEST(HeisenbergTest, CommutatorIsCentral) {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      const GroupElement x = h_generator_x(n, i);
      const GroupElement y = h_generator_y(n, i);
      EXPECT_EQ(commutator(x, y), GroupElement(h_generator_z(n)));
      const LMat xm = HMat(std::get<HeisenbergElement>(x));
      const LMat ym = HMat(std::get<HeisenbergElement>(y));
      const LMat xi = HMat(h_inverse(std::get<HeisenbergElement>(x)));
      const LMat yi = HMat(h_inverse(std::get<HeisenbergElement>(y)));
      EXPECT_EQ(xi * yi * xm * ym, HMat(h_generator_z(n)));
    }
  }
}

TEST(HeisenbergTest, ConjugationRepresentation) {
  std::mt19937_64 rng(37);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const HeisenbergElement g = RandH(n, rng);
      HeisenbergElement k = RandH(n, rng);
      k.b.setZero();
      const HeisenbergElement conj = h_multiply(h_multiply(h_inverse(g), k), g);
      ASSERT_TRUE(conj.b.isZero());
      IntVector kc(n + 1), cc(n + 1);
      kc << k.a, k.c;
      cc << conj.a, conj.c;
      ASSERT_EQ(h_conj_representation(g).to_unimodular().apply(kc), cc);
      const HeisenbergElement h = RandH(n, rng);
      ASSERT_EQ(h_conj_representation(h_multiply(g, h)),
                h_conj_representation(g) * h_conj_representation(h));
    }
  }
}

TEST(NGroupTest, ProductMatchesMatrices) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const NElement g = RandN(rng), h = RandN(rng);
    ASSERT_EQ(NMat(n_multiply(g, h)), NMat(g) * NMat(h));
    ASSERT_EQ(TMat(n_to_triangular(g)), NMat(g));
    ASSERT_EQ(n_multiply(g, n_inverse(g)), NElement::identity());
  }
}

TEST(NGroupTest, DefiningRelations) {
  const auto gens = generators(GroupDescriptor::n_group());
  ASSERT_EQ(gens.size(), 5u);
  const GroupElement b1 = gens[0].element, b2 = gens[1].element;
  const GroupElement a1 = gens[2].element, a2 = gens[3].element, a3 = gens[4].element;
  EXPECT_EQ(commutator(a3, b1), a1);
  EXPECT_EQ(commutator(a3, b2), a2);
  EXPECT_EQ(commutator(b1, b2), group_identity(GroupDescriptor::n_group()));
  EXPECT_EQ(commutator(a1, a3), group_identity(GroupDescriptor::n_group()));
}

TEST(NGroupTest, ConjugationRepresentation) {
  std::mt19937_64 rng(43);
  const ConvexSeries series = convex_series(GroupDescriptor::n_group());
  for (int trial = 0; trial < 100; ++trial) {
    const NElement g = RandN(rng), h = RandN(rng);
    NElement k = RandN(rng);
    k.m.setZero();
    const NElement conj = n_multiply(n_multiply(n_inverse(g), k), g);
    ASSERT_TRUE(conj.m.isZero());
    ASSERT_EQ(n_conj_representation(g).apply(k.k), conj.k);
    ASSERT_EQ(kernel_representation(series, g), n_conj_representation(g));
    ASSERT_EQ(n_conj_representation(n_multiply(g, h)),
              n_conj_representation(g) * n_conj_representation(h));
  }
  EXPECT_EQ(n_conj_representation(NElement::from({1, 0}, {0, 0, 0})).matrix(),
            int_matrix({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(TriangularTest, ProductMatchesMatrices) {
  std::mt19937_64 rng(47);
  for (int k = 2; k <= 5; ++k) {
    for (int trial = 0; trial < 100; ++trial) {
      const TriangularElement g = RandT(k, rng), h = RandT(k, rng);
      ASSERT_EQ(TMat(t_multiply(g, h)), TMat(g) * TMat(h));
      ASSERT_EQ(t_multiply(g, t_inverse(g)), TriangularElement::identity(k));
    }
  }
  const TriangularElement g = RandT(4, rng);
  LMat cube = TMat(g) * TMat(g) * TMat(g);
  EXPECT_EQ(TMat(t_power(g, 3)), cube);
  EXPECT_EQ(t_multiply(t_power(g, -3), t_power(g, 3)), TriangularElement::identity(4));
  EXPECT_THROW(TriangularElement::from_matrix(int_matrix({{1, 1}, {0, 1}})), DomainError);
  EXPECT_THROW(t_generator(4, 2, 3), DomainError);
}

TEST(TriangularTest, N4CommutatorTable) {
  const GroupElement f = t_generator(4, 3, 2), a = t_generator(4, 3, 1),
                     b = t_generator(4, 4, 2), c = t_generator(4, 4, 1),
                     d = t_generator(4, 4, 3), e = t_generator(4, 2, 1);
  EXPECT_EQ(commutator(d, f), b);
  EXPECT_EQ(commutator(d, a), c);
  EXPECT_EQ(commutator(f, e), a);
  EXPECT_EQ(commutator(b, e), c);
}

TEST(TriangularTest, EmbeddingAndLowerCentral) {
  std::mt19937_64 rng(53);
  const TriangularElement g = RandT(3, rng);
  const TriangularElement big = t_embed(g);
  EXPECT_EQ(big.k(), 4);
  EXPECT_EQ(big.entries.topLeftCorner(3, 3), g.entries);
  EXPECT_EQ(big.entries(3, 0), 0);
  EXPECT_EQ(t_lower_central(4, 1),
            (std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}));
  EXPECT_EQ(t_lower_central(4, 2), (std::vector<std::pair<int, int>>{{4, 1}}));
}

TEST(SeriesTest, RanksAndLabels) {
  EXPECT_EQ(convex_series(GroupDescriptor::heisenberg(2)).ranks(), (std::vector<int>{3, 2}));
  EXPECT_EQ(convex_series(GroupDescriptor::n_group()).ranks(), (std::vector<int>{3, 2}));
  const ConvexSeries through = convex_series(GroupDescriptor::triangular(5, TriangularChain::kThroughN));
  EXPECT_EQ(through.ranks(), (std::vector<int>{3, 2, 1, 1, 1, 1, 1}));
  EXPECT_EQ(through.layers[0].label, "<b,c,d>");
  const ConvexSeries a_chain = convex_series(GroupDescriptor::triangular(4));
  int total = 0;
  for (int r : a_chain.ranks()) total += r;
  EXPECT_EQ(total, 6);
  EXPECT_THROW(GroupDescriptor::triangular(3, TriangularChain::kThroughN), DomainError);
}

TEST(SeriesTest, LexClassification) {
  const LexGroupOrder order = default_n_order();
  const GroupDescriptor n = GroupDescriptor::n_group();
  EXPECT_EQ(lex_classify(order, group_identity(n)), Verdict::kZero);
  // Quotient decides first: b1 > 0 whatever the kernel part.
  EXPECT_EQ(lex_classify(order, NElement::from({1, 0}, {-100, -100, -100})), Verdict::kPositive);
  EXPECT_EQ(lex_classify(order, NElement::from({0, -1}, {100, 0, 0})), Verdict::kNegative);
  // Kernel: sqrt2 + sqrt3 - 3 > 0.
  const Classification c = lex_classify_with_layer(order, NElement::from({0, 0}, {1, 1, -3}));
  EXPECT_EQ(c.verdict, Verdict::kPositive);
  EXPECT_EQ(c.level, 0);
  EXPECT_THROW(lex_classify(order, h_generator_x(1, 1)), DomainError);
}

TEST(SeriesTest, ConjugatedOrderMatchesDefinition) {
  // x is positive for g^-1 P g exactly when g x g^-1 is positive for P.
  for (const LexGroupOrder& order : {default_n_order(), default_heisenberg_order(1)}) {
    const std::vector<GroupElement> ball = word_ball(generators(order.series.group), 2);
    for (const GroupElement& g : ball) {
      ASSERT_TRUE(fixes_series(order.series, g));
      const LexGroupOrder q = conjugate_lex_order(order, g);
      for (const GroupElement& x : ball) {
        ASSERT_EQ(lex_classify(q, x), lex_classify(order, multiply(multiply(g, x), inverse(g))));
      }
    }
  }
}

TEST(SeriesTest, FixesSeriesOnTriangular) {
  const LexGroupOrder order = default_lift_order(4);
  EXPECT_TRUE(fixes_series(order.series, t_generator(4, 3, 2)));
  EXPECT_TRUE(fixes_series(order.series, t_generator(4, 3, 1)));
  // e moves <f,a>: [f,e] = a.
  EXPECT_FALSE(fixes_series(order.series, t_generator(4, 2, 1)));
  EXPECT_THROW(conjugate_lex_order(order, t_generator(4, 2, 1)), DomainError);
}

TEST(WordBallTest, Sizes) {
  const auto gens = generators(GroupDescriptor::heisenberg(1));
  EXPECT_EQ(word_ball(gens, 0).size(), 1u);
  EXPECT_EQ(word_ball(gens, 1).size(), 7u);
  const std::vector<NamedGenerator> y{gens[1]};
  EXPECT_EQ(word_ball(y, 5).size(), 11u);
  EXPECT_THROW(word_ball({}, 1), DomainError);
}

TEST(FlatCoordinatesTest, Layout) {
  EXPECT_EQ(flat_coordinates(GroupElement(NElement::from({1, 2}, {3, 4, 5}))),
            int_vector({1, 2, 3, 4, 5}));
  const HeisenbergElement h{int_vector({1}), int_vector({2}), Integer(3)};
  EXPECT_EQ(flat_coordinates(GroupElement(h)), int_vector({1, 2, 3}));
  const TriangularElement t = t_generator(3, 3, 2);
  EXPECT_EQ(flat_coordinates(GroupElement(t)), int_vector({0, 0, 1}));
}

}  // namespace
}  // namespace ordlab
