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

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ordlab {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

IntMatrix from_rows(const std::vector<IntVector>& rows, int n) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw DimensionMismatch("lattice vector of length " +
                              std::to_string(rows[i].size()) + ", expected " +
                              std::to_string(n));
    }
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

// Determinant of the square matrix whose column j is cols[j], expanded row
// by row over column subsets. Exponential in n, which stays small here.
RadicalNumber radical_determinant(
    const std::vector<std::vector<RadicalNumber>>& cols) {
  const int n = static_cast<int>(cols.size());
  if (n == 0) return RadicalNumber(Rational(1));
  std::vector<RadicalNumber> f(size_t{1} << n);
  f[0] = RadicalNumber(Rational(1));
  for (unsigned s = 1; s < f.size(); ++s) {
    const int row = __builtin_popcount(s) - 1;
    RadicalNumber acc;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const unsigned rest = s & ~(1u << j);
      if (f[rest].is_zero() || cols[j][row].is_zero()) continue;
      RadicalNumber term = cols[j][row] * f[rest];
      if (__builtin_popcount(rest >> (j + 1)) % 2) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    f[s] = std::move(acc);
  }
  return f.back();
}

std::vector<std::vector<RadicalNumber>> radical_columns(
    const std::vector<Functional>& generators) {
  const size_t n = generators.size();
  std::vector<std::vector<RadicalNumber>> cols(n);
  for (size_t j = 0; j < n; ++j) {
    if (generators[j].size() != n) {
      throw DimensionMismatch("cone generator " + std::to_string(j) +
                              " has length " +
                              std::to_string(generators[j].size()) +
                              ", expected " + std::to_string(n));
    }
    cols[j].reserve(n);
    for (const ExactScalar& e : generators[j]) cols[j].emplace_back(e);
  }
  return cols;
}

std::vector<RadicalNumber> radical_column(const IntVector& z) {
  std::vector<RadicalNumber> col;
  col.reserve(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) col.emplace_back(Rational(z(i)));
  return col;
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DomainError("unimodular matrix must be square, got " +
                      std::to_string(entries_.rows()) + "x" +
                      std::to_string(entries_.cols()));
  }
  const Integer det = determinant(entries_);
  if (det != 1 && det != -1) {
    throw DomainError("matrix is not unimodular (determinant " + det.str() + ")");
  }
}

UnimodularMatrix UnimodularMatrix::identity(int n) {
  return UnimodularMatrix(IntMatrix::Identity(n, n), Trusted{});
}

UnimodularMatrix UnimodularMatrix::elementary(int n, int row, int col,
                                              const Integer& value) {
  if (row == col || row < 0 || col < 0 || row >= n || col >= n) {
    throw DomainError("elementary matrix needs distinct in-range indices");
  }
  IntMatrix m = IntMatrix::Identity(n, n);
  m(row, col) = value;
  return UnimodularMatrix(std::move(m), Trusted{});
}

bool UnimodularMatrix::is_identity() const {
  return entries_ == IntMatrix::Identity(dim(), dim());
}

IntVector UnimodularMatrix::apply(const IntVector& w) const {
  if (w.size() != dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(w.size()) +
                            " for a " + std::to_string(dim()) + "x" +
                            std::to_string(dim()) + " matrix");
  }
  return entries_ * w;
}

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("product of unimodular matrices of sizes " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
  return UnimodularMatrix(IntMatrix(a.entries_ * b.entries_),
                          UnimodularMatrix::Trusted{});
}

LnMatrix::LnMatrix(IntVector a) : a_(std::move(a)) {}

LnMatrix LnMatrix::identity(int n) {
  if (n < 1) throw DomainError("L_n needs n >= 1");
  return LnMatrix(IntVector::Zero(n - 1));
}

UnimodularMatrix LnMatrix::to_unimodular() const {
  const int n = dim();
  IntMatrix m = IntMatrix::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) m(n - 1, i) = a_(i);
  return UnimodularMatrix(std::move(m));
}

LnMatrix operator*(const LnMatrix& x, const LnMatrix& y) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("product in L_" + std::to_string(x.dim()) +
                            " and L_" + std::to_string(y.dim()));
  }
  return LnMatrix(IntVector(x.a_ + y.a_));
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw DimensionMismatch("determinant of a non-square matrix");
  }
  const Eigen::Index n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = input;
  Integer prev = 1;
  int sign_flip = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign_flip = -sign_flip;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign_flip * m(n - 1, n - 1);
}

UnimodularMatrix unimodular_inverse(const UnimodularMatrix& a) {
  const int n = a.dim();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = to_rational(a.matrix());
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  row_echelon(aug);
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& q = aug(i, n + j);
      if (denominator(q) != 1) {
        throw VerificationError("inverse of a unimodular matrix is not integral");
      }
      inv(i, j) = numerator(q);
    }
  }
  return UnimodularMatrix(std::move(inv));
}

LnMatrix unimodular_inverse(const LnMatrix& a) { return a.inverse(); }

Functional transform_functional(const UnimodularMatrix& a, const Functional& v) {
  if (static_cast<int>(v.size()) != a.dim()) {
    throw DimensionMismatch("functional of length " + std::to_string(v.size()) +
                            " under a " + std::to_string(a.dim()) + "x" +
                            std::to_string(a.dim()) + " matrix");
  }
  const UnimodularMatrix inv = unimodular_inverse(a);
  Functional u;
  u.reserve(v.size());
  for (int j = 0; j < a.dim(); ++j) {
    u.push_back(inner_product(v, IntVector(inv.matrix().col(j))));
  }
  return u;
}

Functional transform_functional(const LnMatrix& a, const Functional& v) {
  // (A^-1)^T has -a in the last column: u_i = v_i - a_i v_n, u_n = v_n.
  const int n = a.dim();
  if (static_cast<int>(v.size()) != n) {
    throw DimensionMismatch("functional of length " + std::to_string(v.size()) +
                            " under an L_" + std::to_string(n) + " matrix");
  }
  Functional u = v;
  for (int i = 0; i + 1 < n; ++i) {
    if (a.row()(i) != 0) u[i] -= Rational(a.row()(i)) * v[n - 1];
  }
  return u;
}

IntMatrix split_rational_rows(const std::vector<Functional>& vectors, int n) {
  std::vector<IntVector> rows;
  for (const Functional& v : vectors) {
    if (static_cast<int>(v.size()) != n) {
      throw DimensionMismatch("functional of length " + std::to_string(v.size()) +
                              " in dimension " + std::to_string(n));
    }
    if (v.empty()) continue;
    const RadicandList& basis = v[0].basis();
    for (const ExactScalar& e : v) {
      if (!(e.basis() == basis)) throw BasisMismatch();
    }
    for (int k = 0; k <= basis.size(); ++k) {
      Integer lcm = 1;
      bool nonzero = false;
      for (const ExactScalar& e : v) {
        const Rational& q = e.coeffs()[k];
        if (q != 0) {
          nonzero = true;
          lcm = boost::multiprecision::lcm(lcm, denominator(q));
        }
      }
      if (!nonzero) continue;
      IntVector row(n);
      for (int i = 0; i < n; ++i) {
        const Rational scaled = v[i].coeffs()[k] * lcm;
        row(i) = numerator(scaled);
      }
      rows.push_back(std::move(row));
    }
  }
  return from_rows(rows, n);
}

int rational_rank(const IntMatrix& m) {
  RatMatrix q = to_rational(m);
  return row_echelon(q);
}

std::vector<IntVector> kernel_sublattice(const std::vector<Functional>& vectors,
                                         int n) {
  IntMatrix m = split_rational_rows(vectors, n);
  IntMatrix u = IntMatrix::Identity(n, n);
  int pivot = 0;
  // Column operations bring m to lower echelon form; the columns of u past
  // the last pivot then span the integer kernel.
  for (Eigen::Index i = 0; i < m.rows() && pivot < n; ++i) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = pivot; j < n; ++j) {
        if (m(i, j) != 0 && (best < 0 || abs_int(m(i, j)) < abs_int(m(i, best)))) {
          best = j;
        }
      }
      if (best < 0) break;
      if (best != pivot) {
        m.col(best).swap(m.col(pivot));
        u.col(best).swap(u.col(pivot));
      }
      bool done = true;
      for (Eigen::Index j = pivot + 1; j < n; ++j) {
        if (m(i, j) == 0) continue;
        const Integer q = m(i, j) / m(i, pivot);
        m.col(j) -= q * m.col(pivot);
        u.col(j) -= q * u.col(pivot);
        if (m(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (m(i, pivot) != 0) ++pivot;
  }
  std::vector<IntVector> kernel;
  for (int j = pivot; j < n; ++j) kernel.emplace_back(u.col(j));
  return hermite_normal_form(kernel, n);
}

std::vector<IntVector> hermite_normal_form(const std::vector<IntVector>& rows,
                                           int n) {
  IntMatrix m = from_rows(rows, n);
  const Eigen::Index k = m.rows();
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < n && r < k; ++col) {
    bool have_pivot = false;
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < k; ++i) {
        if (m(i, col) != 0 && (best < 0 || abs_int(m(i, col)) < abs_int(m(best, col)))) {
          best = i;
        }
      }
      if (best < 0) break;
      have_pivot = true;
      if (best != r) m.row(best).swap(m.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < k; ++i) {
        if (m(i, col) == 0) continue;
        const Integer q = m(i, col) / m(r, col);
        m.row(i) -= q * m.row(r);
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (!have_pivot) continue;
    if (m(r, col) < 0) m.row(r) = -m.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Integer q = floor_div(m(i, col), m(r, col));
      if (q != 0) m.row(i) -= q * m.row(r);
    }
    ++r;
  }
  std::vector<IntVector> out;
  out.reserve(r);
  for (Eigen::Index i = 0; i < r; ++i) out.emplace_back(m.row(i).transpose());
  return out;
}

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                  int n) {
  return hermite_normal_form(a, n) == hermite_normal_form(b, n);
}

std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return IntVector(0);
    return std::nullopt;
  }
  const Eigen::Index n = v.size();
  RatMatrix b(n, static_cast<Eigen::Index>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != n) {
      throw DimensionMismatch("basis vector of length " +
                              std::to_string(basis[j].size()) + ", expected " +
                              std::to_string(n));
    }
    for (Eigen::Index i = 0; i < n; ++i) b(i, j) = Rational(basis[j](i));
  }
  RatVector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = Rational(v(i));
  const auto sol = solve_exact(b, rhs);
  if (!sol) return std::nullopt;
  IntVector coords(sol->size());
  for (Eigen::Index i = 0; i < sol->size(); ++i) {
    if (denominator((*sol)(i)) != 1) return std::nullopt;
    coords(i) = numerator((*sol)(i));
  }
  return coords;
}

std::vector<IntVector> complete_basis_with_last(const std::vector<IntVector>& basis,
                                                int n, const IntVector& preferred) {
  if (basis.empty()) throw DomainError("cannot complete an empty basis");
  const auto coords = lattice_coordinates(basis, preferred);
  if (!coords) throw DomainError("preferred vector is not in the lattice");
  const Eigen::Index k = coords->size();
  Integer g = 0;
  for (Eigen::Index i = 0; i < k; ++i) g = boost::multiprecision::gcd(g, (*coords)(i));
  if (g != 1) throw DomainError("preferred vector is not primitive in the lattice");

  // Row operations V with V c = e_k; then B V^-1 has last column B c.
  IntVector x = *coords;
  IntMatrix v = IntMatrix::Identity(k, k);
  Eigen::Index p = -1;
  while (true) {
    p = -1;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (x(i) != 0 && (p < 0 || abs_int(x(i)) < abs_int(x(p)))) p = i;
    }
    bool single = true;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (j == p || x(j) == 0) continue;
      const Integer q = x(j) / x(p);
      x(j) -= q * x(p);
      v.row(j) -= q * v.row(p);
      if (x(j) != 0) single = false;
    }
    if (single) break;
  }
  if (p != k - 1) {
    std::swap(x(p), x(k - 1));
    v.row(p).swap(v.row(k - 1));
  }
  if (x(k - 1) < 0) v.row(k - 1) = -v.row(k - 1);

  const IntMatrix vinv = unimodular_inverse(UnimodularMatrix(v)).matrix();
  IntMatrix b(n, k);
  for (Eigen::Index j = 0; j < k; ++j) b.col(j) = basis[j];
  const IntMatrix completed = b * vinv;
  std::vector<IntVector> out;
  out.reserve(k);
  for (Eigen::Index j = 0; j < k; ++j) out.emplace_back(completed.col(j));
  if (out.back() != preferred) {
    throw VerificationError("basis completion did not place the preferred vector last");
  }
  return out;
}

std::vector<int> cone_coordinate_signs(const std::vector<Functional>& generators,
                                       const IntVector& z) {
  auto cols = radical_columns(generators);
  if (z.size() != static_cast<Eigen::Index>(cols.size())) {
    throw DimensionMismatch("point of length " + std::to_string(z.size()) +
                            " for a cone in dimension " +
                            std::to_string(cols.size()));
  }
  const int det_sign = radical_determinant(cols).sign();
  if (det_sign == 0) throw DomainError("cone generators are linearly dependent");
  std::vector<int> signs;
  signs.reserve(cols.size());
  const std::vector<RadicalNumber> zc = radical_column(z);
  for (size_t i = 0; i < cols.size(); ++i) {
    std::vector<RadicalNumber> saved = std::move(cols[i]);
    cols[i] = zc;
    signs.push_back(det_sign * radical_determinant(cols).sign());
    cols[i] = std::move(saved);
  }
  return signs;
}

bool in_cone_interior(const std::vector<Functional>& generators, const IntVector& z) {
  const std::vector<int> signs = cone_coordinate_signs(generators, z);
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

IntVector cone_interior_lattice_point(const std::vector<Functional>& generators,
                                      ConeSearchStats* stats) {
  const int n = static_cast<int>(generators.size());
  if (n == 0) throw DomainError("cone needs at least one generator");
  const auto cols = radical_columns(generators);
  if (radical_determinant(cols).is_zero()) {
    throw DomainError("cone generators are linearly dependent");
  }

  Eigen::MatrixXd md(n, n);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      md(i, j) = generators[j][i].to_double();
      sum(i) += md(i, j);
    }
  }
  const Eigen::MatrixXd minv = md.inverse();
  // Distance from the generator sum to the cone boundary is at least rho.
  double rho = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) rho = std::min(rho, 1.0 / minv.row(i).norm());
  const long scale = 1L << 20;
  Integer rho_num = 1;
  if (std::isfinite(rho) && rho * 0.99 * scale > 1.0) {
    rho_num = Integer(static_cast<long>(std::floor(rho * 0.99 * scale)));
  }
  const Rational rho_q(rho_num, Integer(scale));
  if (stats) *stats = ConeSearchStats{0, 0, rho_q};

  // Any ball of radius sqrt(n)/2 contains a lattice point, so scanning
  // further out never helps.
  const long scan_cap = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  Rational lambda = 1;
  for (int doubling = 0; doubling < 64; ++doubling, lambda *= 2) {
    const Rational radius_q = lambda * rho_q;
    Integer radius = numerator(radius_q) / denominator(radius_q);
    if (radius * denominator(radius_q) != numerator(radius_q)) ++radius;
    const long scan = radius > scan_cap ? scan_cap : radius.convert_to<long>();

    const double lam = lambda.convert_to<double>();
    const Eigen::VectorXd center = lam * sum;
    IntVector base(n);
    for (int i = 0; i < n; ++i) {
      base(i) = Integer(static_cast<long long>(std::llround(center(i))));
    }
    struct Candidate {
      double dist2;
      IntVector z;
    };
    std::vector<Candidate> candidates;
    std::vector<long> offset(n, -scan);
    while (true) {
      IntVector z = base;
      double d2 = 0;
      for (int i = 0; i < n; ++i) {
        z(i) += offset[i];
        const double diff = z(i).convert_to<double>() - center(i);
        d2 += diff * diff;
      }
      if (d2 <= static_cast<double>(scan * scan) + 1e-9) {
        // Cheap floating prefilter; the exact test below decides.
        Eigen::VectorXd zd(n);
        for (int i = 0; i < n; ++i) zd(i) = z(i).convert_to<double>();
        const Eigen::VectorXd coords = minv * zd;
        if (coords.minCoeff() > -1e-9) candidates.push_back({d2, std::move(z)});
      }
      int pos = 0;
      while (pos < n && offset[pos] == scan) offset[pos++] = -scan;
      if (pos == n) break;
      ++offset[pos];
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
                return lex_less(a.z, b.z);
              });
    for (const Candidate& c : candidates) {
      if (stats) ++stats->candidates_checked;
      if (in_cone_interior(generators, c.z)) {
        if (stats) stats->doublings = doubling;
        return c.z;
      }
    }
  }
  throw VerificationError("no interior lattice point found for the cone");
}

}  // namespace ordlab
