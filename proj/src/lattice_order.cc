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

#include "ordlab/lattice_order.h"

#include <string>
#include <utility>

#include "ordlab/errors.h"

namespace ordlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPositive:
      return "positive";
    case Verdict::kNegative:
      return "negative";
    case Verdict::kZero:
      break;
  }
  return "zero";
}

Functional compose_with_basis(const Functional& v, const std::vector<IntVector>& basis) {
  Functional out;
  out.reserve(basis.size());
  for (const IntVector& b : basis) out.push_back(inner_product(v, b));
  return out;
}

LatticeOrder make_order(int n, std::vector<Functional> vectors) {
  if (n < 1) throw DomainError("order rank must be at least 1");
  if (vectors.empty()) throw NontotalOrder();
  const RadicandList radicands = vectors[0].empty() ? RadicandList()
                                                    : vectors[0][0].basis();
  for (const Functional& v : vectors) {
    if (static_cast<int>(v.size()) != n) {
      throw DimensionMismatch("defining vector of length " + std::to_string(v.size()) +
                              " for rank " + std::to_string(n));
    }
    for (const ExactScalar& e : v) {
      if (!(e.basis() == radicands)) throw BasisMismatch();
    }
  }

  std::vector<std::vector<IntVector>> chain;
  std::vector<IntVector> current;
  for (int i = 0; i < n; ++i) current.push_back(unit_vector(n, i));
  chain.push_back(current);
  for (size_t i = 0; i < vectors.size(); ++i) {
    const Functional restricted = compose_with_basis(vectors[i], current);
    bool vanishes = true;
    for (const ExactScalar& e : restricted) vanishes = vanishes && e.is_zero();
    if (vanishes) throw RedundantVector(static_cast<int>(i));
    const int k = static_cast<int>(current.size());
    const std::vector<IntVector> local = kernel_sublattice({restricted}, k);
    std::vector<IntVector> next;
    next.reserve(local.size());
    for (const IntVector& c : local) {
      IntVector w = IntVector::Zero(n);
      for (int j = 0; j < k; ++j) {
        if (c(j) != 0) w += c(j) * current[j];
      }
      next.push_back(std::move(w));
    }
    current = hermite_normal_form(next, n);
    chain.push_back(current);
  }
  if (!current.empty()) throw NontotalOrder();

  LatticeOrder p;
  p.rank_ = n;
  p.radicands_ = radicands;
  p.vectors_ = std::move(vectors);
  p.chain_ = std::move(chain);
  return p;
}

Classification classify_with_level(const LatticeOrder& p, const IntVector& w) {
  if (w.size() != p.rank()) {
    throw DimensionMismatch("vector of length " + std::to_string(w.size()) +
                            " for an order of rank " + std::to_string(p.rank()));
  }
  if (is_zero(w)) return {};
  for (int i = 0; i < p.depth(); ++i) {
    const int s = scalar_sign(inner_product(p.vectors()[i], w));
    if (s != 0) return {verdict_from_sign(s), i};
  }
  throw VerificationError("nonzero vector annihilated by a total order");
}

Verdict classify(const LatticeOrder& p, const IntVector& w) {
  return classify_with_level(p, w).verdict;
}

LatticeOrder act(const LatticeOrder& p, const UnimodularMatrix& a) {
  if (a.dim() != p.rank()) {
    throw DimensionMismatch(std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                            " matrix acting on rank " + std::to_string(p.rank()));
  }
  std::vector<Functional> u;
  u.reserve(p.depth());
  for (const Functional& v : p.vectors()) u.push_back(transform_functional(a, v));
  return make_order(p.rank(), std::move(u));
}

LatticeOrder act(const LatticeOrder& p, const LnMatrix& a) {
  if (a.dim() != p.rank()) {
    throw DimensionMismatch("L_" + std::to_string(a.dim()) + " acting on rank " +
                            std::to_string(p.rank()));
  }
  std::vector<Functional> u;
  u.reserve(p.depth());
  for (const Functional& v : p.vectors()) u.push_back(transform_functional(a, v));
  return make_order(p.rank(), std::move(u));
}

bool orders_equal(const LatticeOrder& p, const LatticeOrder& q) {
  if (p.rank() != q.rank() || p.depth() != q.depth()) return false;
  for (int i = 0; i < p.depth(); ++i) {
    // Levels are stored in Hermite form, so lattice equality is equality.
    if (p.level(i) != q.level(i)) return false;
    const Functional f = compose_with_basis(p.vectors()[i], p.level(i));
    const Functional g = compose_with_basis(q.vectors()[i], p.level(i));
    size_t pivot = 0;
    while (f[pivot].is_zero()) ++pivot;
    if (scalar_sign(f[pivot]) != scalar_sign(g[pivot])) return false;
    const RadicalNumber fp(f[pivot]);
    const RadicalNumber gp(g[pivot]);
    for (size_t j = 0; j < f.size(); ++j) {
      if (j == pivot) continue;
      if (!(RadicalNumber(f[j]) * gp == fp * RadicalNumber(g[j]))) return false;
    }
  }
  return true;
}

LatticeOrder restrict(const LatticeOrder& p, const std::vector<IntVector>& basis) {
  const int n = p.rank();
  const std::vector<IntVector> hnf = hermite_normal_form(basis, n);
  if (hnf.empty() || hnf.size() != basis.size()) {
    throw DomainError("sublattice basis must be nonempty and independent");
  }
  for (int i = 0; i < p.depth(); ++i) {
    if (p.level(i) != hnf) continue;
    std::vector<Functional> surviving;
    for (int j = i; j < p.depth(); ++j) {
      surviving.push_back(compose_with_basis(p.vectors()[j], basis));
    }
    return make_order(static_cast<int>(basis.size()), std::move(surviving));
  }
  throw DomainError("sublattice is not convex for the order");
}

LatticeOrder standard_order(int n, const RadicandList& basis) {
  std::vector<Functional> vectors;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> entries(n, Rational(0));
    entries[i] = 1;
    vectors.push_back(rational_functional(basis, entries));
  }
  return make_order(n, std::move(vectors));
}

}  // namespace ordlab
