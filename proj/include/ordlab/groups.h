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

// Three families of finitely generated nilpotent groups in normal form:
//
//   Heisenberg(n)  y^b x^a z^c with [x_i, y_i] = z
//   N              b1^m1 b2^m2 a1^k1 a2^k2 a3^k3 with [a3, b1] = a1,
//                  [a3, b2] = a2
//   Triangular(k)  lower unitriangular k x k integer matrices
//
// plus convex series, lexicographic orders built from them, and word balls.
// Commutators are [x, y] = x^-1 y^-1 x y throughout.

#ifndef ORDLAB_GROUPS_H_
#define ORDLAB_GROUPS_H_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordlab/integer_linear.h"
#include "ordlab/lattice_order.h"
#include "ordlab/numeric.h"

namespace ordlab {

struct HeisenbergElement {
  IntVector b;  // y exponents
  IntVector a;  // x exponents
  Integer c;    // z exponent

  int n() const { return static_cast<int>(b.size()); }
  static HeisenbergElement identity(int n);
  friend bool operator==(const HeisenbergElement& g, const HeisenbergElement& h) {
    return g.b == h.b && g.a == h.a && g.c == h.c;
  }
};

struct NElement {
  IntVector m;  // b1, b2 exponents
  IntVector k;  // a1, a2, a3 exponents

  static NElement identity();
  static NElement from(std::initializer_list<long> m, std::initializer_list<long> k);
  friend bool operator==(const NElement& g, const NElement& h) {
    return g.m == h.m && g.k == h.k;
  }
};

struct TriangularElement {
  IntMatrix entries;  // lower unitriangular

  int k() const { return static_cast<int>(entries.rows()); }
  static TriangularElement identity(int k);
  // Throws DomainError unless lower unitriangular.
  static TriangularElement from_matrix(IntMatrix m);
  friend bool operator==(const TriangularElement& g, const TriangularElement& h) {
    return g.entries == h.entries;
  }
};

using GroupElement = std::variant<HeisenbergElement, NElement, TriangularElement>;

HeisenbergElement h_multiply(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement h_inverse(const HeisenbergElement& g);
// Conjugation action on <x_1..x_n, z> in coordinates (a, c):
// g^-1 h g = phi(g) h.
LnMatrix h_conj_representation(const HeisenbergElement& g);
HeisenbergElement h_generator_x(int n, int i);
HeisenbergElement h_generator_y(int n, int i);
HeisenbergElement h_generator_z(int n);

NElement n_multiply(const NElement& g, const NElement& h);
NElement n_inverse(const NElement& g);
// Conjugation action on <a1, a2, a3>: g^-1 h g = phi(g) h.
UnimodularMatrix n_conj_representation(const NElement& g);
// The isomorphic copy <a,b,c,d,f> of N inside Triangular(4):
// b1 -> f, b2 -> a, a1 -> b, a2 -> c, a3 -> d.
TriangularElement n_to_triangular(const NElement& g);

// E_{i,j} = I + e_{i,j}, one-based, 1 <= j < i <= k.
TriangularElement t_generator(int k, int i, int j);
TriangularElement t_multiply(const TriangularElement& g, const TriangularElement& h);
TriangularElement t_inverse(const TriangularElement& g);
TriangularElement t_power(const TriangularElement& g, long e);
// Generators E_{i,j} with i - j > l, as (i, j) pairs in row-major order.
std::vector<std::pair<int, int>> t_lower_central(int k, int l);
// [[B, 0], [0, 1]].
TriangularElement t_embed(const TriangularElement& g);

enum class GroupKind { kHeisenberg, kN, kTriangular };

// How Triangular(k) is filtered. kAChain follows N_{k-1} < A_1 < ... <
// A_{k-1} = N_k with A_i = <E_{k,1}, ..., E_{k,i}, N_{k-1}>. kThroughN
// (k >= 4) uses {1} < <b,c,d> < N < N_4 at the bottom instead.
enum class TriangularChain { kAChain, kThroughN };

struct GroupDescriptor {
  GroupKind kind = GroupKind::kN;
  int param = 0;  // n for Heisenberg, k for Triangular
  TriangularChain chain = TriangularChain::kAChain;

  static GroupDescriptor heisenberg(int n);
  static GroupDescriptor n_group();
  static GroupDescriptor triangular(int k, TriangularChain chain = TriangularChain::kAChain);

  std::string name() const;
  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.kind == b.kind && a.param == b.param && a.chain == b.chain;
  }
};

bool belongs_to(const GroupDescriptor& group, const GroupElement& g);
GroupElement group_identity(const GroupDescriptor& group);
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long e);
GroupElement commutator(const GroupElement& x, const GroupElement& y);
// Exponents (b, a, c), (m, k), or entries below the diagonal row by row.
IntVector flat_coordinates(const GroupElement& g);
std::string describe(const GroupElement& g);

struct NamedGenerator {
  std::string name;
  GroupElement element;
};
std::vector<NamedGenerator> generators(const GroupDescriptor& group);

struct SeriesLayer {
  std::string label;                        // e.g. "<x1,z>" or "E4,2"
  std::string block;                        // enclosing subgroup, if any
  std::vector<int> slots;                   // flat coordinate indices
  std::vector<NamedGenerator> generators;   // one per slot
  int rank() const { return static_cast<int>(slots.size()); }
};

// Layers bottom-up: layer 0 is the kernel factor C_1, the last layer is
// G / C_{top-1}. C_j is the subgroup where every coordinate of layers >= j
// vanishes.
struct ConvexSeries {
  GroupDescriptor group;
  std::vector<SeriesLayer> layers;
  std::vector<int> ranks() const;
};

ConvexSeries convex_series(const GroupDescriptor& group);

// Coordinates of g in the factor of `layer`, valid once all higher layers
// vanish on g.
IntVector layer_coordinates(const SeriesLayer& layer, const GroupElement& g);
// Index of the lowest layer containing g, or -1 for the identity.
int top_layer(const ConvexSeries& series, const GroupElement& g);

struct LexGroupOrder {
  ConvexSeries series;
  std::vector<LatticeOrder> factors;  // bottom-up, one per layer
};

// Throws DomainError on a rank mismatch.
LexGroupOrder make_lex_order(const GroupDescriptor& group,
                             std::vector<LatticeOrder> factors);

Verdict lex_classify(const LexGroupOrder& order, const GroupElement& g);
// Also reports the deciding layer (-1 for the identity).
Classification lex_classify_with_layer(const LexGroupOrder& order,
                                       const GroupElement& g);

// g normalizes every C_j and acts trivially on every factor above the
// kernel, and the kernel layer is normal with g^-1 C_1 g = C_1.
bool fixes_series(const ConvexSeries& series, const GroupElement& g);
// Column j holds the kernel coordinates of g^-1 t_j g.
UnimodularMatrix kernel_representation(const ConvexSeries& series,
                                       const GroupElement& g);
// Same group and every factor order equal.
bool lex_orders_equal(const LexGroupOrder& a, const LexGroupOrder& b);

// The order g^-1 P g. Throws DomainError when g does not fix the series.
LexGroupOrder conjugate_lex_order(const LexGroupOrder& order, const GroupElement& g);

// All elements of word length <= radius in the given generators and their
// inverses, breadth first, without repeats.
std::vector<GroupElement> word_ball(const std::vector<NamedGenerator>& gens, int radius);

}  // namespace ordlab

#endif  // ORDLAB_GROUPS_H_
