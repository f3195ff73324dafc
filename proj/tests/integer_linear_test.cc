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

#include "ordlab/integer_linear.h"

#include <gtest/gtest.h>

#include <random>

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

long Det3(const oracle::LMat& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

UnimodularMatrix RandomUnimodular(int n, int factors, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<long> val(-3, 3);
  UnimodularMatrix a = UnimodularMatrix::identity(n);
  for (int f = 0; f < factors; ++f) {
    int i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    a = a * UnimodularMatrix::elementary(n, i, j, val(rng));
  }
  return a;
}

TEST(DeterminantTest, MatchesCofactorExpansion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::LMat m(3, 3);
    IntMatrix z(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m(i, j) = d(rng);
        z(i, j) = m(i, j);
      }
    }
    ASSERT_EQ(determinant(z), Det3(m));
  }
}

TEST(UnimodularMatrixTest, Validation) {
  EXPECT_THROW(UnimodularMatrix(int_matrix({{2, 0}, {0, 1}})), DomainError);
  EXPECT_THROW(UnimodularMatrix(int_matrix({{1, 0, 0}, {0, 1, 0}})), DomainError);
  EXPECT_NO_THROW(UnimodularMatrix(int_matrix({{0, 1}, {1, 0}})));
  EXPECT_THROW(UnimodularMatrix::elementary(3, 1, 1, 2), DomainError);
  const UnimodularMatrix e = UnimodularMatrix::elementary(3, 2, 0, 5);
  EXPECT_EQ(e(2, 0), 5);
  EXPECT_FALSE(e.is_identity());
}

TEST(UnimodularMatrixTest, InverseOfRandomProducts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const UnimodularMatrix a = RandomUnimodular(4, 6, rng);
    ASSERT_TRUE((a * unimodular_inverse(a)).is_identity());
    ASSERT_TRUE((unimodular_inverse(a) * a).is_identity());
  }
}

TEST(TransformFunctionalTest, PairingIsInvariant) {
  // u = (A^-1)^T v satisfies <u, A w> = <v, w>.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-10, 10);
  const Functional v = Root23();
  for (int trial = 0; trial < 200; ++trial) {
    const UnimodularMatrix a = RandomUnimodular(3, 5, rng);
    const IntVector w = int_vector({d(rng), d(rng), d(rng)});
    const Functional u = transform_functional(a, v);
    ASSERT_EQ(inner_product(u, a.apply(w)), inner_product(v, w));
  }
}

TEST(LnMatrixTest, GroupStructure) {
  const LnMatrix a(int_vector({1, -2}));
  const LnMatrix b(int_vector({3, 5}));
  EXPECT_EQ((a * b).row(), int_vector({4, 3}));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(unimodular_inverse(a), a.inverse());
  EXPECT_EQ(a.dim(), 3);
  const IntMatrix full = a.to_unimodular().matrix();
  EXPECT_EQ(full, int_matrix({{1, 0, 0}, {0, 1, 0}, {1, -2, 1}}));
  EXPECT_EQ((a * b).to_unimodular(), a.to_unimodular() * b.to_unimodular());
}

TEST(LnMatrixTest, TransformMatchesGeneralPath) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-4, 4);
  const Functional v = Root23();
  for (int trial = 0; trial < 100; ++trial) {
    const LnMatrix a(int_vector({d(rng), d(rng)}));
    const Functional fast = transform_functional(a, v);
    const Functional slow = transform_functional(a.to_unimodular(), v);
    ASSERT_EQ(fast, slow);
  }
  // u_i = v_i - a_i v_n.
  const Functional u = transform_functional(LnMatrix(int_vector({1})), Rat({1, 1}));
  EXPECT_EQ(u, Rat({0, 1}));
}

TEST(KernelTest, SmallCases) {
  EXPECT_EQ(kernel_sublattice({Rat({1, 1})}, 2), std::vector<IntVector>{int_vector({1, -1})});
  EXPECT_TRUE(kernel_sublattice({Root23()}, 3).empty());
  // (sqrt2, 2 sqrt2, 1) kills (2, -1, 0).
  const Functional dep{ExactScalar::root(B23(), 2), Rational(2) * ExactScalar::root(B23(), 2),
                       ExactScalar::rational(B23(), 1)};
  const std::vector<IntVector> k = kernel_sublattice({dep}, 3);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(scalar_sign(inner_product(dep, k[0])), 0);
  EXPECT_TRUE(same_lattice(k, {int_vector({2, -1, 0})}, 3));
}

TEST(KernelTest, SaturatedAgainstBruteForce) {
  const Functional v = Rat({2, 4, 6});
  const std::vector<IntVector> k = kernel_sublattice({v}, 3);
  ASSERT_EQ(k.size(), 2u);
  for (long x = -6; x <= 6; ++x) {
    for (long y = -6; y <= 6; ++y) {
      for (long z = -6; z <= 6; ++z) {
        const IntVector w = int_vector({x, y, z});
        const bool in_kernel = x + 2 * y + 3 * z == 0;
        ASSERT_EQ(lattice_coordinates(k, w).has_value(), in_kernel) << x << y << z;
      }
    }
  }
}

TEST(HermiteTest, KnownForm) {
  const std::vector<IntVector> h =
      hermite_normal_form({int_vector({2, 4}), int_vector({6, 8})}, 2);
  EXPECT_EQ(h, (std::vector<IntVector>{int_vector({2, 0}), int_vector({0, 4})}));
  EXPECT_TRUE(hermite_normal_form({IntVector::Zero(3)}, 3).empty());
}

TEST(HermiteTest, CanonicalUnderUnimodularRowMixing) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVector> rows{int_vector({d(rng), d(rng), d(rng), d(rng)}),
                                int_vector({d(rng), d(rng), d(rng), d(rng)})};
    const std::vector<IntVector> h = hermite_normal_form(rows, 4);
    ASSERT_EQ(hermite_normal_form(h, 4), h);
    std::vector<IntVector> mixed{rows[0] + 3 * rows[1], rows[1] - 2 * (rows[0] + 3 * rows[1])};
    ASSERT_EQ(hermite_normal_form(mixed, 4), h);
    for (size_t i = 0; i < h.size(); ++i) {
      // Upper echelon with positive pivots, reduced above each pivot.
      Eigen::Index p = 0;
      while (h[i](p) == 0) ++p;
      ASSERT_GT(h[i](p), 0);
      for (size_t r = 0; r < i; ++r) {
        ASSERT_GE(h[r](p), 0);
        ASSERT_LT(h[r](p), h[i](p));
      }
      for (size_t r = i + 1; r < h.size(); ++r) {
        for (Eigen::Index c = 0; c <= p; ++c) ASSERT_EQ(h[r](c), 0);
      }
    }
  }
}

TEST(CompleteBasisTest, PlacesPreferredLast) {
  const std::vector<IntVector> std3{int_vector({1, 0, 0}), int_vector({0, 1, 0}),
                                    int_vector({0, 0, 1})};
  const IntVector pref = int_vector({1, 2, 3});
  const std::vector<IntVector> b = complete_basis_with_last(std3, 3, pref);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.back(), pref);
  EXPECT_TRUE(same_lattice(b, std3, 3));
  EXPECT_THROW(complete_basis_with_last(std3, 3, int_vector({2, 0, 0})), DomainError);

  const std::vector<IntVector> plane{int_vector({1, -1, 0}), int_vector({0, 0, 1})};
  const std::vector<IntVector> kept = complete_basis_with_last(plane, 3, int_vector({0, 0, 1}));
  EXPECT_EQ(kept, plane);
  EXPECT_THROW(complete_basis_with_last(plane, 3, int_vector({1, 0, 0})), DomainError);
}

TEST(ConeTest, RationalCone) {
  const std::vector<Functional> gens{Rat({1, 0}), Rat({1, 1})};
  const IntVector z = cone_interior_lattice_point(gens);
  EXPECT_TRUE(in_cone_interior(gens, z));
  // Strict interior of cone((1,0),(1,1)) is 0 < y < x.
  EXPECT_GT(z(1), 0);
  EXPECT_GT(z(0), z(1));
  EXPECT_FALSE(in_cone_interior(gens, int_vector({1, 1})));
  EXPECT_EQ(cone_coordinate_signs(gens, int_vector({1, 1})), (std::vector<int>{0, 1}));
  EXPECT_THROW(cone_interior_lattice_point({Rat({1, 1}), Rat({2, 2})}), DomainError);
}

TEST(ConeTest, ThinIrrationalCone) {
  // Between the rays of slope sqrt2 and 99/70.
  const RadicandList b({2});
  const std::vector<Functional> gens{
      {ExactScalar::rational(b, 1), ExactScalar::root(b, 2)},
      {ExactScalar::rational(b, 70), ExactScalar::rational(b, 99)}};
  ConeSearchStats stats;
  const IntVector z = cone_interior_lattice_point(gens, &stats);
  EXPECT_TRUE(in_cone_interior(gens, z));
  EXPECT_GT(stats.doublings, 0);
  // Independent check: sqrt2 < z1 / z0 < 99/70.
  const oracle::i128 z0 = z(0).convert_to<long>();
  const oracle::i128 z1 = z(1).convert_to<long>();
  EXPECT_GT(z0, 0);
  EXPECT_EQ(oracle::sign_sqrt(z1, -z0, 2), 1);
  EXPECT_LT(70 * z1, 99 * z0);
}

}  // namespace
}  // namespace ordlab
