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

// Orders on Z^n given by a sequence of exact functionals v_0, ..., v_t:
// w > 0 iff the first nonzero <v_i, w> is positive.

#ifndef ORDLAB_LATTICE_ORDER_H_
#define ORDLAB_LATTICE_ORDER_H_

#include <string>
#include <vector>

#include "ordlab/exact_scalar.h"
#include "ordlab/integer_linear.h"
#include "ordlab/numeric.h"

namespace ordlab {

enum class Verdict { kNegative = -1, kZero = 0, kPositive = 1 };

std::string to_string(Verdict v);
inline Verdict verdict_from_sign(int s) {
  return s > 0 ? Verdict::kPositive : (s < 0 ? Verdict::kNegative : Verdict::kZero);
}
inline Verdict opposite(Verdict v) { return verdict_from_sign(-static_cast<int>(v)); }

struct Classification {
  Verdict verdict = Verdict::kZero;
  int level = -1;  // index of the deciding functional, -1 for w = 0
};

class LatticeOrder {
 public:
  int rank() const { return rank_; }
  int depth() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Functional>& vectors() const { return vectors_; }
  const RadicandList& radicands() const { return radicands_; }

  // Hermite basis of the i-th convex sublattice: level 0 is Z^n, level i+1
  // is the part of level i annihilated by v_i. level(depth()) is trivial.
  const std::vector<IntVector>& level(int i) const { return chain_.at(i); }

 private:
  friend LatticeOrder make_order(int n, std::vector<Functional> vectors);
  int rank_ = 0;
  RadicandList radicands_;
  std::vector<Functional> vectors_;
  std::vector<std::vector<IntVector>> chain_;
};

// Throws NontotalOrder, RedundantVector, DimensionMismatch or BasisMismatch.
LatticeOrder make_order(int n, std::vector<Functional> vectors);

Verdict classify(const LatticeOrder& p, const IntVector& w);
Classification classify_with_level(const LatticeOrder& p, const IntVector& w);

// A(P), defined by (A^-1)^T v_i.
LatticeOrder act(const LatticeOrder& p, const UnimodularMatrix& a);
LatticeOrder act(const LatticeOrder& p, const LnMatrix& a);

// Same positive cone. Orders over different radicand lists may be equal.
bool orders_equal(const LatticeOrder& p, const LatticeOrder& q);

// The order induced on the sublattice spanned by `basis`, in basis
// coordinates. The sublattice must be one of the convex levels of P;
// otherwise DomainError.
LatticeOrder restrict(const LatticeOrder& p, const std::vector<IntVector>& basis);

// (<v, b_1>, ..., <v, b_k>).
Functional compose_with_basis(const Functional& v, const std::vector<IntVector>& basis);

// The standard lexicographic order e_1 >> e_2 >> ... on Z^n.
LatticeOrder standard_order(int n, const RadicandList& basis = RadicandList());

}  // namespace ordlab

#endif  // ORDLAB_LATTICE_ORDER_H_
