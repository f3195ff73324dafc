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

// Unimodular matrices, integer kernels of exact functionals, and lattice
// points inside simplicial cones.

#ifndef ORDLAB_INTEGER_LINEAR_H_
#define ORDLAB_INTEGER_LINEAR_H_

#include <optional>
#include <utility>
#include <vector>

#include "ordlab/errors.h"
#include "ordlab/exact_scalar.h"
#include "ordlab/numeric.h"

namespace ordlab {

// Square integer matrix with determinant +1 or -1.
class UnimodularMatrix {
 public:
  // Throws DomainError if `entries` is not square or det is not +-1.
  explicit UnimodularMatrix(IntMatrix entries);

  static UnimodularMatrix identity(int n);
  // I + value * e_{row,col}, zero-based, row != col.
  static UnimodularMatrix elementary(int n, int row, int col, const Integer& value);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const IntMatrix& matrix() const { return entries_; }
  const Integer& operator()(int i, int j) const { return entries_(i, j); }
  bool is_identity() const;

  IntVector apply(const IntVector& w) const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& a,
                                    const UnimodularMatrix& b);
  friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  struct Trusted {};
  UnimodularMatrix(IntMatrix entries, Trusted) : entries_(std::move(entries)) {}
  IntMatrix entries_;
};

// Identity block of size n-1 over the row (a, 1):
//
//   [ I_{n-1}  0 ]
//   [   a      1 ]
//
// These matrices form an abelian group; the product adds the rows.
class LnMatrix {
 public:
  explicit LnMatrix(IntVector a);
  static LnMatrix identity(int n);

  int dim() const { return static_cast<int>(a_.size()) + 1; }
  const IntVector& row() const { return a_; }
  bool is_identity() const { return is_zero(a_); }

  UnimodularMatrix to_unimodular() const;
  LnMatrix inverse() const { return LnMatrix(IntVector(-a_)); }

  friend LnMatrix operator*(const LnMatrix& x, const LnMatrix& y);
  friend bool operator==(const LnMatrix& x, const LnMatrix& y) {
    return x.a_ == y.a_;
  }

 private:
  IntVector a_;
};

// Exact determinant (fraction-free elimination).
Integer determinant(const IntMatrix& m);

UnimodularMatrix unimodular_inverse(const UnimodularMatrix& a);
LnMatrix unimodular_inverse(const LnMatrix& a);

// u = (A^-1)^T v. If v defines an order P, u defines A(P).
Functional transform_functional(const UnimodularMatrix& a, const Functional& v);
Functional transform_functional(const LnMatrix& a, const Functional& v);

// Each exact equation <v, w> = 0 split into one rational equation per
// radical, with denominators cleared. Rows of the result; n columns.
IntMatrix split_rational_rows(const std::vector<Functional>& vectors, int n);

// Rank over Q.
int rational_rank(const IntMatrix& m);

// Basis of {w in Z^n : <v, w> = 0 for all v}, in Hermite normal form.
// Empty when the kernel is trivial. The basis is saturated, so it extends to
// a basis of Z^n.
std::vector<IntVector> kernel_sublattice(const std::vector<Functional>& vectors,
                                         int n);

// Row-style Hermite normal form of the lattice spanned by `rows`: upper
// echelon, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped.
std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows,
                                           int n);

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                  int n);

// Integer coordinates of `v` in the (independent) `basis`, if any.
std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v);

// A basis of the same lattice whose last vector is `preferred`. When
// `preferred` already is the last basis vector the input order is kept.
// Throws DomainError if `preferred` is not a primitive lattice vector.
std::vector<IntVector> complete_basis_with_last(const std::vector<IntVector>& basis,
                                                int n, const IntVector& preferred);

// Signs of the coordinates of z in the basis `generators` (columns), exact.
// Throws DomainError if the generators are dependent.
std::vector<int> cone_coordinate_signs(const std::vector<Functional>& generators,
                                       const IntVector& z);

bool in_cone_interior(const std::vector<Functional>& generators, const IntVector& z);

// Search statistics from the last call are optional output.
struct ConeSearchStats {
  int doublings = 0;
  long candidates_checked = 0;
  Rational inradius_bound;
};

// An integer vector strictly inside the cone spanned by n independent
// generators of length n. Every returned point has been verified exactly.
IntVector cone_interior_lattice_point(const std::vector<Functional>& generators,
                                      ConeSearchStats* stats = nullptr);

// Exact elimination over an ordered field. Works for any Eigen-compatible
// scalar with exact division (Rational in practice).
template <typename Field>
int row_echelon(Matrix<Field>& m) {
  int rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    const Field inv = Field(1) / m(rank, col);
    m.row(rank) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != rank && m(r, col) != 0) {
        const Field factor = m(r, col);
        m.row(r) -= factor * m.row(rank);
      }
    }
    ++rank;
  }
  return rank;
}

// Unique solution of a x = b for full-column-rank a, or nullopt when the
// system is inconsistent.
template <typename Field>
std::optional<Vector<Field>> solve_exact(const Matrix<Field>& a,
                                         const Vector<Field>& b) {
  Matrix<Field> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const int rank = row_echelon(aug);
  if (rank > a.cols()) return std::nullopt;
  for (Eigen::Index r = rank; r < aug.rows(); ++r) {
    if (aug(r, a.cols()) != 0) return std::nullopt;
  }
  if (rank < a.cols()) {
    throw DomainError("solve_exact: matrix does not have full column rank");
  }
  // Reduced echelon with full column rank: pivots sit on the diagonal.
  if (aug.topLeftCorner(rank, rank) != Matrix<Field>::Identity(rank, rank)) {
    return std::nullopt;
  }
  return Vector<Field>(aug.col(a.cols()).head(a.cols()));
}

}  // namespace ordlab

#endif  // ORDLAB_INTEGER_LINEAR_H_
