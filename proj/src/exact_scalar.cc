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

#include <cmath>
#include <utility>

#include "ordlab/errors.h"

namespace ordlab {

namespace {

constexpr int kCachedLevels = 5;  // 16, 32, 64, 128, 256 bits

// floor(sqrt(m) * 2^bits). This is the limit point of bisection on
// x^2 - m * 4^bits over the integers, computed directly.
Integer floor_scaled_root(const Integer& m, int bits) {
  Integer scaled = m << (2 * bits);
  return boost::multiprecision::sqrt(scaled);
}

Integer lcm_of_denominators(const std::vector<const Rational*>& coeffs) {
  Integer l = 1;
  for (const Rational* q : coeffs) {
    const Integer& d = denominator(*q);
    if (d != 1) l = boost::multiprecision::lcm(l, d);
  }
  return l;
}

// Sign of q_0 + sum_j q_j sqrt(m_j) for non-square m_j. `root_at(j, bits)`
// returns floor(sqrt(m_j) * 2^bits). The enclosure of each radical is the
// open interval (s, s + 1) / 2^bits, so the enclosure of the whole sum
// shrinks geometrically as bits doubles and eventually excludes zero for any
// nonzero value.
template <typename RootAt>
SignReport enclosure_sign(const Rational& rational_part,
                          const std::vector<const Rational*>& radical_coeffs,
                          RootAt root_at) {
  SignReport report;
  if (radical_coeffs.empty()) {
    report.sign = rational_part.sign();
    return report;
  }
  std::vector<const Rational*> all = radical_coeffs;
  all.push_back(&rational_part);
  const Integer common = lcm_of_denominators(all);
  std::vector<Integer> scaled(radical_coeffs.size());
  for (size_t j = 0; j < radical_coeffs.size(); ++j) {
    scaled[j] = numerator(*radical_coeffs[j]) * (common / denominator(*radical_coeffs[j]));
  }
  const Integer base = numerator(rational_part) * (common / denominator(rational_part));

  for (int bits = kInitialSignPrecisionBits;; bits *= 2, ++report.refinements) {
    Integer lo = base << bits;
    Integer hi = lo;
    for (size_t j = 0; j < scaled.size(); ++j) {
      const Integer s = root_at(j, bits);
      if (scaled[j] > 0) {
        lo += scaled[j] * s;
        hi += scaled[j] * (s + 1);
      } else {
        lo += scaled[j] * (s + 1);
        hi += scaled[j] * s;
      }
    }
    if (lo > 0) {
      report.sign = 1;
    } else if (hi < 0) {
      report.sign = -1;
    } else {
      continue;
    }
    report.precision_bits = bits;
    return report;
  }
}

}  // namespace

bool is_squarefree(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

RadicandList::RadicandList() : data_(std::make_shared<const Data>()) {}

RadicandList::RadicandList(std::vector<long> radicands) {
  for (size_t i = 0; i < radicands.size(); ++i) {
    if (!is_squarefree(radicands[i])) {
      throw DomainError("radicand " + std::to_string(radicands[i]) +
                        " is not a squarefree integer >= 2");
    }
    if (i > 0 && radicands[i] <= radicands[i - 1]) {
      throw DomainError("radicands must be strictly increasing");
    }
  }
  auto data = std::make_shared<Data>();
  data->radicands = std::move(radicands);
  data->roots.resize(kCachedLevels);
  for (int level = 0; level < kCachedLevels; ++level) {
    for (long d : data->radicands) {
      data->roots[level].push_back(
          floor_scaled_root(Integer(d), kInitialSignPrecisionBits << level));
    }
  }
  data_ = std::move(data);
}

const Integer* RadicandList::cached_root(int i, int bits) const {
  for (int level = 0; level < kCachedLevels; ++level) {
    if ((kInitialSignPrecisionBits << level) == bits) {
      return &data_->roots[level][i];
    }
  }
  return nullptr;
}

ExactScalar::ExactScalar(RadicandList basis)
    : basis_(std::move(basis)), coeffs_(basis_.size() + 1) {}

ExactScalar::ExactScalar(RadicandList basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != basis_.size() + 1) {
    throw DimensionMismatch("scalar needs " + std::to_string(basis_.size() + 1) +
                            " coefficients, got " +
                            std::to_string(coeffs_.size()));
  }
}

ExactScalar ExactScalar::rational(RadicandList basis, const Rational& q) {
  ExactScalar s(std::move(basis));
  s.coeffs_[0] = q;
  return s;
}

ExactScalar ExactScalar::root(RadicandList basis, long d) {
  ExactScalar s(std::move(basis));
  for (int i = 0; i < s.basis_.size(); ++i) {
    if (s.basis_[i] == d) {
      s.coeffs_[i + 1] = 1;
      return s;
    }
  }
  throw DomainError("sqrt(" + std::to_string(d) + ") is not in the basis");
}

bool ExactScalar::is_zero() const {
  for (const Rational& q : coeffs_) {
    if (q != 0) return false;
  }
  return true;
}

bool ExactScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

double ExactScalar::to_double() const {
  double value = coeffs_[0].convert_to<double>();
  for (int i = 0; i < basis_.size(); ++i) {
    value += coeffs_[i + 1].convert_to<double>() *
             std::sqrt(static_cast<double>(basis_[i]));
  }
  return value;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  for (Rational& q : out.coeffs_) q = -q;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  if (!(basis_ == other.basis_)) throw BasisMismatch();
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  if (!(basis_ == other.basis_)) throw BasisMismatch();
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ExactScalar& ExactScalar::operator*=(const Rational& q) {
  for (Rational& c : coeffs_) c *= q;
  return *this;
}

ExactScalar scalar_add(const ExactScalar& a, const ExactScalar& b) {
  return a + b;
}

ExactScalar scalar_scale(const Rational& q, const ExactScalar& a) {
  return q * a;
}

SignReport sign_with_report(const ExactScalar& a) {
  std::vector<const Rational*> radical;
  std::vector<int> index;
  for (int i = 0; i < a.basis().size(); ++i) {
    if (a.coeffs()[i + 1] != 0) {
      radical.push_back(&a.coeffs()[i + 1]);
      index.push_back(i);
    }
  }
  const RadicandList& basis = a.basis();
  return enclosure_sign(a.rational_part(), radical, [&](size_t j, int bits) {
    if (const Integer* cached = basis.cached_root(index[j], bits)) return *cached;
    return floor_scaled_root(Integer(basis[index[j]]), bits);
  });
}

int scalar_sign(const ExactScalar& a) { return sign_with_report(a).sign; }

ExactScalar inner_product(const Functional& v, const IntVector& w) {
  if (static_cast<Eigen::Index>(v.size()) != w.size()) {
    throw DimensionMismatch("inner product of length " + std::to_string(v.size()) +
                            " and " + std::to_string(w.size()));
  }
  if (v.empty()) return ExactScalar();
  const RadicandList& basis = v.front().basis();
  std::vector<Rational> acc(basis.size() + 1);
  for (size_t i = 0; i < v.size(); ++i) {
    if (!(v[i].basis() == basis)) throw BasisMismatch();
    const Integer& wi = w(static_cast<Eigen::Index>(i));
    if (wi == 0) continue;
    for (size_t k = 0; k < acc.size(); ++k) {
      if (v[i].coeffs()[k] != 0) acc[k] += v[i].coeffs()[k] * wi;
    }
  }
  return ExactScalar(basis, std::move(acc));
}

Functional negate(const Functional& v) {
  Functional out;
  out.reserve(v.size());
  for (const ExactScalar& s : v) out.push_back(-s);
  return out;
}

Functional scale(const Rational& q, const Functional& v) {
  Functional out;
  out.reserve(v.size());
  for (const ExactScalar& s : v) out.push_back(q * s);
  return out;
}

Functional rational_functional(const RadicandList& basis,
                               const std::vector<Rational>& entries) {
  Functional out;
  out.reserve(entries.size());
  for (const Rational& q : entries) out.push_back(ExactScalar::rational(basis, q));
  return out;
}

std::vector<double> to_doubles(const Functional& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const ExactScalar& s : v) out.push_back(s.to_double());
  return out;
}

RadicalNumber::RadicalNumber(const Rational& q) {
  if (q != 0) terms_.emplace(Integer(1), q);
}

RadicalNumber::RadicalNumber(const ExactScalar& s) {
  if (s.rational_part() != 0) terms_.emplace(Integer(1), s.rational_part());
  for (int i = 0; i < s.basis().size(); ++i) {
    if (s.coeffs()[i + 1] != 0) terms_.emplace(Integer(s.basis()[i]), s.coeffs()[i + 1]);
  }
}

RadicalNumber RadicalNumber::root(const Integer& squarefree) {
  RadicalNumber out;
  out.terms_.emplace(squarefree, Rational(1));
  return out;
}

void RadicalNumber::add_term(const Integer& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalNumber RadicalNumber::operator-() const {
  RadicalNumber out = *this;
  for (auto& [key, coeff] : out.terms_) coeff = -coeff;
  return out;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
  return *this;
}

// sqrt(m) sqrt(m') = g sqrt((m/g)(m'/g)) with g = gcd(m, m'); the radicand
// on the right is again squarefree.
RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& other) {
  RadicalNumber product;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      const Integer g = boost::multiprecision::gcd(m1, m2);
      product.add_term((m1 / g) * (m2 / g), c1 * c2 * Rational(g));
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

SignReport RadicalNumber::sign_with_report() const {
  static const Rational kZero;
  const Rational* rational_part = &kZero;
  std::vector<const Rational*> radical;
  std::vector<const Integer*> keys;
  for (const auto& [key, coeff] : terms_) {
    if (key == 1) {
      rational_part = &coeff;
    } else {
      radical.push_back(&coeff);
      keys.push_back(&key);
    }
  }
  return enclosure_sign(*rational_part, radical, [&](size_t j, int bits) {
    return floor_scaled_root(*keys[j], bits);
  });
}

double RadicalNumber::to_double() const {
  double value = 0;
  for (const auto& [key, coeff] : terms_) {
    value += coeff.convert_to<double>() * std::sqrt(key.convert_to<double>());
  }
  return value;
}

}  // namespace ordlab
