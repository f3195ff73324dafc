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

// Exact arithmetic in the rational span of {1, sqrt(d_1), ..., sqrt(d_r)}
// for distinct squarefree radicands d_i.
//
// ExactScalar is closed under addition and rational scaling only; products
// of two scalars generally leave the span. Code that needs products
// (determinants, proportionality tests) converts to RadicalNumber, which
// lives in the full multiquadratic field.

#ifndef ORDLAB_EXACT_SCALAR_H_
#define ORDLAB_EXACT_SCALAR_H_

#include <map>
#include <memory>
#include <vector>

#include "ordlab/numeric.h"

namespace ordlab {

bool is_squarefree(long d);

// Ordered list of distinct squarefree radicands >= 2. Cheap to copy.
class RadicandList {
 public:
  RadicandList();
  // Throws DomainError unless entries are strictly increasing, squarefree
  // and >= 2.
  explicit RadicandList(std::vector<long> radicands);

  int size() const { return static_cast<int>(data_->radicands.size()); }
  long operator[](int i) const { return data_->radicands[i]; }
  const std::vector<long>& radicands() const { return data_->radicands; }

  // floor(sqrt(d_i) * 2^bits) when precomputed for this precision, else null.
  const Integer* cached_root(int i, int bits) const;

  friend bool operator==(const RadicandList& a, const RadicandList& b) {
    return a.data_ == b.data_ || a.data_->radicands == b.data_->radicands;
  }

 private:
  struct Data {
    std::vector<long> radicands;
    std::vector<std::vector<Integer>> roots;  // [level][i], bits 16 << level
  };
  std::shared_ptr<const Data> data_;
};

// Outcome of an exact sign determination together with how much interval
// refinement it took.
struct SignReport {
  int sign = 0;
  int refinements = 0;     // number of precision doublings after the first
  int precision_bits = 0;  // precision at which the enclosure excluded zero
};

inline constexpr int kInitialSignPrecisionBits = 16;

class ExactScalar {
 public:
  // Zero over `basis`.
  explicit ExactScalar(RadicandList basis = RadicandList());
  // coeffs[0] multiplies 1, coeffs[i] multiplies sqrt(basis[i-1]).
  ExactScalar(RadicandList basis, std::vector<Rational> coeffs);

  static ExactScalar rational(RadicandList basis, const Rational& q);
  // sqrt(d); d must appear in `basis`.
  static ExactScalar root(RadicandList basis, long d);

  const RadicandList& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& rational_part() const { return coeffs_[0]; }

  bool is_zero() const;
  bool is_rational() const;
  double to_double() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const Rational& q);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) {
    return a += b;
  }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) {
    return a -= b;
  }
  friend ExactScalar operator*(const Rational& q, ExactScalar a) {
    return a *= q;
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RadicandList basis_;
  std::vector<Rational> coeffs_;
};

ExactScalar scalar_add(const ExactScalar& a, const ExactScalar& b);
ExactScalar scalar_scale(const Rational& q, const ExactScalar& a);
int scalar_sign(const ExactScalar& a);
SignReport sign_with_report(const ExactScalar& a);

// A row of scalars paired against integer vectors.
using Functional = std::vector<ExactScalar>;

// sum_i w_i v_i, exactly. Throws DimensionMismatch on unequal lengths.
ExactScalar inner_product(const Functional& v, const IntVector& w);

Functional negate(const Functional& v);
Functional scale(const Rational& q, const Functional& v);
// All entries rational, as a functional over `basis`.
Functional rational_functional(const RadicandList& basis,
                               const std::vector<Rational>& entries);
std::vector<double> to_doubles(const Functional& v);

// Element of Q(sqrt(d_1), ..., sqrt(d_r)) stored as sum q_m sqrt(m) over
// squarefree m (m = 1 for the rational part). Zero iff no terms.
class RadicalNumber {
 public:
  RadicalNumber() = default;
  RadicalNumber(const Rational& q);  // NOLINT(runtime/explicit)
  explicit RadicalNumber(const ExactScalar& s);

  static RadicalNumber root(const Integer& squarefree);

  bool is_zero() const { return terms_.empty(); }
  int sign() const { return sign_with_report().sign; }
  SignReport sign_with_report() const;
  double to_double() const;
  const std::map<Integer, Rational>& terms() const { return terms_; }

  RadicalNumber operator-() const;
  RadicalNumber& operator+=(const RadicalNumber& other);
  RadicalNumber& operator-=(const RadicalNumber& other);
  RadicalNumber& operator*=(const RadicalNumber& other);

  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) {
    return a += b;
  }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) {
    return a -= b;
  }
  friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) {
    return a *= b;
  }
  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(const Integer& key, const Rational& coeff);
  std::map<Integer, Rational> terms_;
};

}  // namespace ordlab

#endif  // ORDLAB_EXACT_SCALAR_H_
