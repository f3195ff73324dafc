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

#include "ordlab/numeric.h"

#include <cctype>

#include "ordlab/errors.h"

namespace ordlab {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw SchemaError("not an integer: \"" + std::string(text) + "\"");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw SchemaError("denominator must be unsigned: \"" + std::string(text) +
                      "\"");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw SchemaError("zero denominator: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

IntVector int_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

IntVector unit_vector(int n, int i) {
  IntVector v = IntVector::Zero(n);
  v(i) = 1;
  return v;
}

bool is_zero(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i).convert_to<long>();
  return out;
}

}  // namespace ordlab
