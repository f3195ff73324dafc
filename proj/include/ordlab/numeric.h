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

// Arbitrary-precision scalars and the dense Eigen types built on them.

#ifndef ORDLAB_NUMERIC_H_
#define ORDLAB_NUMERIC_H_

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ordlab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

// "p/q" or "n"; denominators are always positive.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "n", "-n", "p/q". Throws SchemaError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

IntVector int_vector(std::initializer_list<long> entries);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntVector unit_vector(int n, int i);

bool is_zero(const IntVector& v);

inline int sign(const Integer& z) { return z.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

// Lexicographic comparison, used wherever a deterministic order is needed.
bool lex_less(const IntVector& a, const IntVector& b);

std::vector<long> to_longs(const IntVector& v);

}  // namespace ordlab

#endif  // ORDLAB_NUMERIC_H_
