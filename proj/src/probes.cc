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

#include "ordlab/probes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

#include "ordlab/errors.h"

namespace ordlab {

namespace {

constexpr size_t kMaxRecordedViolations = 100;

std::string vector_text(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).str();
  }
  return s + ")";
}

std::string vector_text(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

IntVector from_longs(const std::vector<long>& v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// Odometer over [-box, box]^len, last coordinate fastest.
bool next_in_box(std::vector<long>& v, long box) {
  for (size_t i = v.size(); i-- > 0;) {
    if (v[i] < box) {
      ++v[i];
      return true;
    }
    v[i] = -box;
  }
  return false;
}

bool positively_proportional(const Functional& f, const Functional& g) {
  if (f.size() != g.size()) return false;
  size_t pivot = 0;
  while (pivot < f.size() && f[pivot].is_zero()) ++pivot;
  if (pivot == f.size()) {
    return std::all_of(g.begin(), g.end(), [](const ExactScalar& e) { return e.is_zero(); });
  }
  if (scalar_sign(f[pivot]) != scalar_sign(g[pivot])) return false;
  const RadicalNumber fp(f[pivot]);
  const RadicalNumber gp(g[pivot]);
  for (size_t j = 0; j < f.size(); ++j) {
    if (!(RadicalNumber(f[j]) * gp == fp * RadicalNumber(g[j]))) return false;
  }
  return true;
}

ExactScalar constant(const RadicandList& basis, const Rational& q) {
  return ExactScalar::rational(basis, q);
}

std::vector<IntVector> case_ii_witnesses(const Functional& v,
                                         std::vector<std::string>* notes) {
  const int n = static_cast<int>(v.size());
  std::vector<IntVector> out;
  std::vector<long> b(n - 1, -1);
  do {
    if (std::all_of(b.begin(), b.end(), [](long x) { return x == 0; })) continue;
    const IntVector bv = from_longs(b);
    out.push_back(separating_witness(v, LnMatrix(bv)));
    if (notes) notes->push_back("z_b for b=" + vector_text(b));
  } while (next_in_box(b, 1));
  return out;
}

DiscretenessCertificate probe_recursive(const LatticeOrder& p) {
  DiscretenessCertificate cert;
  const int n = p.rank();
  cert.rank = n;
  cert.base = p.vectors();
  if (n == 1) {
    cert.scope = "L_1 trivial";
    cert.trace.push_back("rank 1: L_1 is trivial, no witnesses needed");
    return cert;
  }
  cert.scope = "L_" + std::to_string(n);
  const Functional& v0 = p.vectors()[0];
  if (scalar_sign(v0[n - 1]) != 0) {
    cert.trace.push_back("rank " + std::to_string(n) +
                         ": last coordinate of v_0 nonzero, sign-pattern witnesses");
    cert.witnesses = case_ii_witnesses(v0, &cert.witness_notes);
    return cert;
  }

  // Every L_n matrix fixes v_0 here, so only the order on C_1 can move. A
  // basis of C_1 ending in e_n turns the action on C_1 into an L_k action.
  const std::vector<IntVector> basis =
      complete_basis_with_last(p.level(1), n, unit_vector(n, n - 1));
  const LatticeOrder sub = restrict(p, basis);
  std::string basis_text;
  for (const IntVector& b : basis) basis_text += vector_text(b);
  cert.trace.push_back("rank " + std::to_string(n) +
                       ": last coordinate of v_0 is zero, recursing into C_1 of rank " +
                       std::to_string(sub.rank()) + " with basis " + basis_text);
  const DiscretenessCertificate inner = probe_recursive(sub);
  for (const std::string& t : inner.trace) cert.trace.push_back(t);
  for (size_t i = 0; i < inner.witnesses.size(); ++i) {
    IntVector lifted = IntVector::Zero(n);
    for (size_t j = 0; j < basis.size(); ++j) lifted += inner.witnesses[i](j) * basis[j];
    cert.witnesses.push_back(std::move(lifted));
    cert.witness_notes.push_back("lifted from rank " + std::to_string(sub.rank()) + ": " +
                                 inner.witness_notes[i]);
  }
  // Pin the top level: unit vectors on which v_0 is nonzero, signed.
  for (int i = 0; i < n; ++i) {
    const int s = scalar_sign(v0[i]);
    if (s == 0) continue;
    cert.witnesses.push_back(s * unit_vector(n, i));
    cert.witness_notes.push_back("pin " + std::string(s > 0 ? "" : "-") + "e_" +
                                 std::to_string(i + 1));
  }
  return cert;
}

ExactScalar scalar_min(const ExactScalar& a, const ExactScalar& b) {
  return scalar_sign(a - b) <= 0 ? a : b;
}

bool is_elementary_13(const UnimodularMatrix& phi, int row, Integer* value) {
  IntMatrix rest = phi.matrix();
  *value = rest(row, 2);
  rest(row, 2) = 0;
  return *value != 0 && rest == IntMatrix::Identity(3, 3);
}

struct BallIndexer {
  int n;
  long reach;  // coordinates lie in [-reach, reach]
  long side;
  size_t index(const std::vector<long>& w) const {
    size_t idx = 0;
    for (int i = n - 1; i >= 0; --i) idx = idx * side + static_cast<size_t>(w[i] + reach);
    return idx;
  }
};

}  // namespace

std::vector<IntVector> lattice_ball(int n, int radius) {
  std::vector<IntVector> out;
  if (n < 1 || radius < 1) return out;
  std::vector<long> w(n, -radius);
  do {
    long norm2 = 0;
    bool zero = true;
    for (long x : w) {
      norm2 += x * x;
      zero = zero && x == 0;
    }
    if (!zero && norm2 <= static_cast<long>(radius) * radius) out.push_back(from_longs(w));
  } while (next_in_box(w, radius));
  return out;
}

NeighborhoodSpec positive_ball(const Functional& v, int radius) {
  NeighborhoodSpec u;
  for (IntVector& w : lattice_ball(static_cast<int>(v.size()), radius)) {
    if (scalar_sign(inner_product(v, w)) > 0) u.elements.push_back(std::move(w));
  }
  return u;
}

std::vector<LnMatrix> ln_box(int n, int box) {
  std::vector<LnMatrix> out;
  if (n < 2) return out;
  std::vector<long> a(n - 1, -box);
  do {
    if (std::all_of(a.begin(), a.end(), [](long x) { return x == 0; })) continue;
    out.emplace_back(from_longs(a));
  } while (next_in_box(a, box));
  return out;
}

IntVector separating_witness(const Functional& v, const LnMatrix& a) {
  const int n = static_cast<int>(v.size());
  if (a.dim() != n) {
    throw DimensionMismatch("L_" + std::to_string(a.dim()) + " matrix against a vector of length " +
                            std::to_string(n));
  }
  if (n < 2 || a.is_identity()) {
    throw DomainError("separating_witness needs a non-identity L_n matrix");
  }
  const int last_sign = scalar_sign(v[n - 1]);
  if (last_sign == 0) {
    throw DomainError("separating_witness needs a nonzero last coordinate");
  }
  if (last_sign < 0) return -separating_witness(negate(v), a);

  const RadicandList& basis = v[0].basis();
  const ExactScalar& xn = v[n - 1];
  const bool rational_last = xn.is_rational();
  // w_i = sgn(a_i)(e_i - (x_i/x_n) e_n), sgn(0) = 1. With an irrational x_n
  // the generators are scaled by x_n > 0, which leaves the cone unchanged.
  std::vector<Functional> w;
  for (int i = 0; i + 1 < n; ++i) {
    const Rational s = a.row()(i) < 0 ? Rational(-1) : Rational(1);
    Functional g(n, ExactScalar(basis));
    if (rational_last) {
      g[i] = constant(basis, s);
      g[n - 1] = (-s / xn.rational_part()) * v[i];
    } else {
      g[i] = s * xn;
      g[n - 1] = -s * v[i];
    }
    w.push_back(std::move(g));
  }
  int i0 = 0;
  while (a.row()(i0) == 0) ++i0;
  const Rational abs_a = Rational(a.row()(i0) < 0 ? Integer(-a.row()(i0)) : a.row()(i0));
  Functional moved = w[i0];
  moved[n - 1] += rational_last ? constant(basis, abs_a) : abs_a * xn;

  std::vector<Functional> generators;
  for (int i = 0; i + 1 < n; ++i) {
    generators.push_back(w[i]);
    if (i == i0) generators.push_back(moved);
  }
  const IntVector z = cone_interior_lattice_point(generators);
  if (scalar_sign(inner_product(v, z)) != 1 ||
      scalar_sign(inner_product(transform_functional(a, v), z)) != -1) {
    throw VerificationError("separating witness " + vector_text(z) +
                            " failed its sign conditions");
  }
  return z;
}

std::vector<VerificationEntry> verify_functional_discreteness(
    const Functional& v, const std::vector<IntVector>& witnesses, int box) {
  for (const IntVector& z : witnesses) {
    if (scalar_sign(inner_product(v, z)) != 1) {
      throw VerificationError("witness " + vector_text(z) + " is not positive for v");
    }
  }
  std::vector<VerificationEntry> log;
  for (const LnMatrix& a : ln_box(static_cast<int>(v.size()), box)) {
    const Functional u = transform_functional(a, v);
    VerificationEntry entry{a};
    for (size_t j = 0; j < witnesses.size(); ++j) {
      const int s = scalar_sign(inner_product(u, witnesses[j]));
      if (s < 0) {
        entry.witness = static_cast<int>(j);
        entry.sign = s;
        break;
      }
    }
    if (entry.witness < 0) {
      if (!positively_proportional(v, u)) {
        throw VerificationError("L_n matrix with row " + vector_text(a.row()) +
                                " neither fixes v nor excludes a witness");
      }
      entry.fixed = true;
    }
    log.push_back(std::move(entry));
  }
  return log;
}

std::vector<VerificationEntry> verify_discreteness(const LatticeOrder& p,
                                                   const std::vector<IntVector>& witnesses,
                                                   int box) {
  for (const IntVector& z : witnesses) {
    if (classify(p, z) != Verdict::kPositive) {
      throw VerificationError("witness " + vector_text(z) + " is not positive in the base order");
    }
  }
  std::vector<VerificationEntry> log;
  for (const LnMatrix& a : ln_box(p.rank(), box)) {
    const LatticeOrder q = act(p, a);
    VerificationEntry entry{a};
    for (size_t j = 0; j < witnesses.size(); ++j) {
      const Verdict verdict = classify(q, witnesses[j]);
      if (verdict != Verdict::kPositive) {
        entry.witness = static_cast<int>(j);
        entry.sign = static_cast<int>(verdict);
        break;
      }
    }
    if (entry.witness < 0) {
      if (!orders_equal(p, q)) {
        throw VerificationError("L_n matrix with row " + vector_text(a.row()) +
                                " neither fixes the order nor excludes a witness");
      }
      entry.fixed = true;
    }
    log.push_back(std::move(entry));
  }
  return log;
}

DiscretenessCertificate discreteness_witness_set(const Functional& v, int verify_box) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw DomainError("discreteness_witness_set needs a nonempty vector");
  DiscretenessCertificate cert;
  cert.rank = n;
  cert.base = {v};
  cert.verify_box = verify_box;
  if (n == 1) {
    cert.scope = "L_1 trivial";
    return cert;
  }
  if (scalar_sign(v[n - 1]) == 0) {
    throw DomainError("discreteness_witness_set needs a nonzero last coordinate");
  }
  cert.scope = "L_" + std::to_string(n);
  cert.trace.push_back("sign-pattern witnesses for rank " + std::to_string(n));
  cert.witnesses = case_ii_witnesses(v, &cert.witness_notes);
  cert.log = verify_functional_discreteness(v, cert.witnesses, verify_box);
  return cert;
}

DiscretenessCertificate ln_smoothness_probe(const LatticeOrder& p, int verify_box) {
  DiscretenessCertificate cert = probe_recursive(p);
  cert.verify_box = verify_box;
  cert.log = verify_discreteness(p, cert.witnesses, verify_box);
  return cert;
}

std::optional<Rational> epsilon_bound(const Functional& v, const NeighborhoodSpec& u) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw DomainError("epsilon_bound needs a nonempty vector");
  const RadicandList& basis = v[0].basis();
  std::vector<std::pair<ExactScalar, Integer>> negative;
  for (const IntVector& w : u.elements) {
    const ExactScalar value = inner_product(v, w);
    if (scalar_sign(value) != 1) {
      throw DomainError("neighborhood element " + vector_text(w) +
                        " is not positive for the base vector");
    }
    if (w(n - 1) < 0) negative.emplace_back(value, w(n - 1));
  }
  if (negative.empty()) return std::nullopt;
  Rational eps = 1;
  // Halving terminates: each constraint has a positive margin.
  for (int step = 0; step < 4096; ++step, eps /= 2) {
    bool ok = true;
    for (const auto& [value, last] : negative) {
      if (scalar_sign(value + constant(basis, eps * Rational(last))) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return eps;
  }
  throw VerificationError("epsilon search did not terminate");
}

void require_rationally_independent(const Functional& v) {
  const std::vector<IntVector> kernel = kernel_sublattice({v}, static_cast<int>(v.size()));
  if (!kernel.empty()) {
    throw DomainError("entries of the kernel vector are rationally dependent: " +
                      vector_text(kernel.front()) + " is orthogonal to it");
  }
}

CondensationPair condensation_pair(const Functional& v, const Integer& n,
                                   const Integer& m,
                                   const std::optional<ExactScalar>& bound) {
  if (v.size() != 3) {
    throw DimensionMismatch("condensation needs a vector of length 3, got " +
                            std::to_string(v.size()));
  }
  if (n == 0 || m == 0) throw DomainError("condensation needs nonzero n and m");
  require_rationally_independent(v);
  if (bound && scalar_sign(*bound) <= 0) throw DomainError("condensation bound must be positive");

  const ExactScalar& alpha = v[0];
  const ExactScalar& beta = v[1];
  const Integer nm = n * m;
  const double alpha_d = alpha.to_double();
  const double beta_d = beta.to_double();
  const double nm_d = nm.convert_to<double>();
  const double scaled_bound =
      bound ? bound->to_double() / std::abs(nm_d) : std::numeric_limits<double>::infinity();
  const bool wide = !bound || scaled_bound >= std::abs(alpha_d);
  const double scale = std::abs(nm_d) * std::max(std::abs(alpha_d), std::abs(beta_d));

  using Key = std::tuple<long, long, long, long>;
  CondensationPair result{Integer(0), Integer(0), ExactScalar(alpha.basis())};
  for (int j = 0; j < 40; ++j) {
    const long r = 1L << j;
    std::optional<Key> best;
    auto consider = [&](long k0, long t0) {
      if (k0 == 0 || std::abs(k0) > r) return;
      const Key key{std::max(std::abs(k0), std::abs(t0)), std::abs(k0) + std::abs(t0), k0, t0};
      if (best && !(key < *best)) return;
      const double value = -nm_d * (k0 * alpha_d + t0 * beta_d);
      const double tol = 1e-9 * scale * static_cast<double>(std::abs(k0) + std::abs(t0) + 1);
      if (value <= -tol || value >= std::abs(nm_d) * scaled_bound + tol) return;
      ++result.candidates;
      ExactScalar shift = Rational(-nm * k0) * alpha + Rational(-nm * t0) * beta;
      if (scalar_sign(shift) != 1) return;
      if (bound && scalar_sign(*bound - shift) != 1) return;
      best = key;
      result.k0 = k0;
      result.t0 = t0;
      result.shift = std::move(shift);
    };
    for (long t0 = -r; t0 <= r; ++t0) {
      if (t0 == 0) continue;
      if (wide) {
        for (long k0 = -r; k0 <= r; ++k0) consider(k0, t0);
      } else {
        // Solutions satisfy |k0 alpha + t0 beta| < |alpha|: k0 sits next to
        // -t0 beta / alpha.
        const long x = static_cast<long>(std::floor(-t0 * beta_d / alpha_d));
        for (long k0 = x - 2; k0 <= x + 2; ++k0) consider(k0, t0);
      }
    }
    if (best) {
      result.box_exponent = j;
      return result;
    }
  }
  throw VerificationError("no condensation pair found within the search limit");
}

std::pair<NamedGenerator, NamedGenerator> condensation_representatives(
    const LexGroupOrder& order) {
  if (order.series.layers.front().rank() != 3) {
    throw DomainError("condensation needs a kernel factor of rank 3");
  }
  std::optional<NamedGenerator> g;
  std::optional<NamedGenerator> h;
  for (const NamedGenerator& t : generators(order.series.group)) {
    if (!fixes_series(order.series, t.element)) continue;
    const UnimodularMatrix phi = kernel_representation(order.series, t.element);
    Integer value;
    if (!g && is_elementary_13(phi, 0, &value)) g = t;
    if (!h && is_elementary_13(phi, 1, &value)) h = t;
  }
  if (!g || !h) {
    throw DomainError("no generators of " + order.series.group.name() +
                      " act on the kernel as E13(n) and E23(m)");
  }
  return {*g, *h};
}

CondensationSample condensation_certificate(const LexGroupOrder& order,
                                            const NamedGenerator& g,
                                            const NamedGenerator& h,
                                            const NeighborhoodSpec& u,
                                            const std::optional<ExactScalar>& cap) {
  const LatticeOrder& kernel = order.factors.front();
  const Functional& v = kernel.vectors()[0];
  require_rationally_independent(v);
  if (kernel.rank() != 3 || kernel.depth() != 1) {
    throw DomainError("condensation needs a kernel order on Z^3 defined by one vector");
  }
  for (const NamedGenerator* t : {&g, &h}) {
    if (!fixes_series(order.series, t->element)) {
      throw DomainError("generator " + t->name + " does not fix the series");
    }
  }
  CondensationSample sample;
  sample.base = order;
  sample.neighborhood = u;
  if (!is_elementary_13(kernel_representation(order.series, g.element), 0, &sample.n)) {
    throw DomainError("generator " + g.name + " does not act on the kernel as E13(n)");
  }
  if (!is_elementary_13(kernel_representation(order.series, h.element), 1, &sample.m)) {
    throw DomainError("generator " + h.name + " does not act on the kernel as E23(m)");
  }
  sample.g_name = g.name;
  sample.h_name = h.name;
  sample.epsilon = epsilon_bound(v, u);
  if (sample.epsilon) sample.bound = ExactScalar::rational(v[0].basis(), *sample.epsilon);
  if (cap) sample.bound = sample.bound ? scalar_min(*sample.bound, *cap) : *cap;

  sample.pair = condensation_pair(v, sample.n, sample.m, sample.bound);
  const Integer ge = sample.pair.k0 * sample.m;
  const Integer he = sample.pair.t0 * sample.n;
  sample.conjugator = multiply(power(g.element, ge.convert_to<long>()),
                               power(h.element, he.convert_to<long>()));
  sample.transported = conjugate_lex_order(order, sample.conjugator);
  sample.phi = kernel_representation(order.series, sample.conjugator);

  const Integer nm = sample.n * sample.m;
  IntMatrix expected = IntMatrix::Identity(3, 3);
  expected(0, 2) = sample.pair.k0 * nm;
  expected(1, 2) = sample.pair.t0 * nm;
  if (sample.phi.matrix() != expected) {
    throw VerificationError("conjugator acts on the kernel with an unexpected matrix");
  }
  const LatticeOrder& moved = sample.transported.factors.front();
  for (const IntVector& w : u.elements) {
    if (classify(moved, w) != Verdict::kPositive) {
      throw VerificationError("transported order drops neighborhood element " + vector_text(w));
    }
  }
  if (orders_equal(moved, kernel)) {
    throw VerificationError("transported kernel order equals the base order");
  }
  for (size_t i = 1; i < order.factors.size(); ++i) {
    if (!orders_equal(order.factors[i], sample.transported.factors[i])) {
      throw VerificationError("conjugation changed a factor above the kernel");
    }
  }
  return sample;
}

std::vector<CondensationSample> condensation_sequence(const LexGroupOrder& order,
                                                      int count) {
  if (count < 0) throw DomainError("sample count must be nonnegative");
  std::vector<CondensationSample> samples;
  if (count == 0) return samples;
  const auto [g, h] = condensation_representatives(order);
  const Functional& v = order.factors.front().vectors().front();
  std::optional<ExactScalar> previous;
  for (int j = 1; j <= count; ++j) {
    samples.push_back(condensation_certificate(order, g, h, positive_ball(v, j), previous));
    previous = samples.back().pair.shift;
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i + 1; j < samples.size(); ++j) {
      if (orders_equal(samples[i].transported.factors.front(),
                       samples[j].transported.factors.front())) {
        throw VerificationError("condensation samples " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " coincide");
      }
    }
  }
  return samples;
}

LexGroupOrder default_n_order() {
  const RadicandList basis({2, 3});
  const Functional v{ExactScalar::root(basis, 2), ExactScalar::root(basis, 3),
                     ExactScalar::rational(basis, 1)};
  return make_lex_order(GroupDescriptor::n_group(),
                        {make_order(3, {v}), standard_order(2)});
}

LexGroupOrder default_heisenberg_order(int n) {
  if (n < 1) throw DomainError("Heisenberg group needs n >= 1");
  const RadicandList basis;
  std::vector<Functional> kernel{rational_functional(basis, std::vector<Rational>(n + 1, 1))};
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(n + 1, 0);
    e[i] = 1;
    kernel.push_back(rational_functional(basis, e));
  }
  return make_lex_order(GroupDescriptor::heisenberg(n),
                        {make_order(n + 1, std::move(kernel)), standard_order(n)});
}

LexGroupOrder default_lift_order(int k) {
  const GroupDescriptor group = GroupDescriptor::triangular(k, TriangularChain::kThroughN);
  const ConvexSeries series = convex_series(group);
  const LexGroupOrder n_order = default_n_order();
  std::vector<LatticeOrder> factors{n_order.factors[0], n_order.factors[1]};
  for (size_t i = 2; i < series.layers.size(); ++i) factors.push_back(standard_order(1));
  return make_lex_order(group, std::move(factors));
}

CondensationSample lift_and_condense(int k, int radius) {
  if (k < 4) {
    throw DomainError("N_" + std::to_string(k) +
                      " has smooth conjugacy orbits on its orders (k = 1, 2, 3); "
                      "condensation needs k >= 4");
  }
  const LexGroupOrder order = default_lift_order(k);
  const NamedGenerator f{"f", t_generator(k, 3, 2)};
  const NamedGenerator a{"a", t_generator(k, 3, 1)};
  const Functional& v = order.factors.front().vectors().front();
  CondensationSample sample = condensation_certificate(order, f, a, positive_ball(v, radius));

  // The same conjugator read in the copy of N and pushed up the chain.
  NElement in_n = NElement::identity();
  in_n.m(0) = sample.pair.k0 * sample.m;
  in_n.m(1) = sample.pair.t0 * sample.n;
  TriangularElement lifted = n_to_triangular(in_n);
  while (lifted.k() < k) lifted = t_embed(lifted);
  if (!(GroupElement(lifted) == sample.conjugator)) {
    throw VerificationError("embedded conjugator differs from the one in N_" + std::to_string(k));
  }
  return sample;
}

OrbitListing orbit_enumerate(const LexGroupOrder& order, int radius,
                             const std::vector<std::string>& generator_names) {
  if (radius < 0) throw DomainError("orbit radius must be nonnegative");
  std::vector<NamedGenerator> gens = generators(order.series.group);
  if (!generator_names.empty()) {
    std::vector<NamedGenerator> chosen;
    for (const std::string& name : generator_names) {
      auto it = std::find_if(gens.begin(), gens.end(),
                             [&](const NamedGenerator& t) { return t.name == name; });
      if (it == gens.end()) {
        throw DomainError("unknown generator \"" + name + "\" for " + order.series.group.name());
      }
      chosen.push_back(*it);
    }
    gens = std::move(chosen);
  }
  OrbitListing listing;
  for (const GroupElement& g : word_ball(gens, radius)) {
    ++listing.conjugators_tried;
    if (!fixes_series(order.series, g)) {
      ++listing.conjugators_skipped;
      continue;
    }
    LexGroupOrder q = conjugate_lex_order(order, g);
    const bool known = std::any_of(listing.orders.begin(), listing.orders.end(),
                                   [&](const OrbitEntry& e) { return lex_orders_equal(e.order, q); });
    if (!known) listing.orders.push_back({g, std::move(q)});
  }
  listing.pairwise_distinct = true;
  for (size_t i = 0; i < listing.orders.size(); ++i) {
    for (size_t j = i + 1; j < listing.orders.size(); ++j) {
      if (lex_orders_equal(listing.orders[i].order, listing.orders[j].order)) {
        listing.pairwise_distinct = false;
      }
    }
  }
  return listing;
}

AxiomReport axiom_check(int n, const LatticeClassifier& classify_fn, int radius) {
  AxiomReport report;
  auto record = [&](AxiomViolation v) {
    if (report.violations.size() < kMaxRecordedViolations) report.violations.push_back(std::move(v));
  };
  if (classify_fn(IntVector::Zero(n)) != Verdict::kZero) {
    record({"identity", vector_text(IntVector(IntVector::Zero(n))), ""});
  }
  if (radius < 1) return report;

  const BallIndexer indexer{n, 2L * radius, 4L * radius + 1};
  size_t cells = 1;
  for (int i = 0; i < n; ++i) cells *= static_cast<size_t>(indexer.side);
  std::vector<signed char> cache(cells, 2);  // 2 = not yet classified
  auto verdict = [&](const std::vector<long>& w) {
    signed char& slot = cache[indexer.index(w)];
    if (slot == 2) slot = static_cast<signed char>(classify_fn(from_longs(w)));
    return static_cast<Verdict>(slot);
  };

  std::vector<std::vector<long>> positives;
  std::vector<long> w(n, -radius);
  do {
    long norm2 = 0;
    bool zero = true;
    for (long x : w) {
      norm2 += x * x;
      zero = zero && x == 0;
    }
    if (zero || norm2 > static_cast<long>(radius) * radius) continue;
    ++report.elements;
    std::vector<long> neg(w);
    for (long& x : neg) x = -x;
    const Verdict a = verdict(w);
    const Verdict b = verdict(neg);
    const bool ok = a != Verdict::kZero && b != Verdict::kZero &&
                    ((a == Verdict::kPositive) != (b == Verdict::kPositive));
    if (!ok) record({"trichotomy", vector_text(w), vector_text(neg)});
    if (a == Verdict::kPositive) positives.push_back(w);
  } while (next_in_box(w, radius));

  std::vector<long> sum(n);
  for (size_t i = 0; i < positives.size(); ++i) {
    for (size_t j = i; j < positives.size(); ++j) {
      for (int c = 0; c < n; ++c) sum[c] = positives[i][c] + positives[j][c];
      ++report.pairs;
      if (verdict(sum) != Verdict::kPositive) {
        record({"closure", vector_text(positives[i]), vector_text(positives[j])});
      }
    }
  }
  return report;
}

AxiomReport axiom_check(const LatticeOrder& p, int radius) {
  return axiom_check(p.rank(), [&p](const IntVector& w) { return classify(p, w); }, radius);
}

AxiomReport axiom_check(const std::vector<GroupElement>& ball,
                        const GroupClassifier& classify_fn) {
  AxiomReport report;
  auto record = [&](AxiomViolation v) {
    if (report.violations.size() < kMaxRecordedViolations) report.violations.push_back(std::move(v));
  };
  std::vector<const GroupElement*> positives;
  for (const GroupElement& g : ball) {
    ++report.elements;
    const Verdict a = classify_fn(g);
    if (is_zero(flat_coordinates(g))) {
      if (a != Verdict::kZero) record({"identity", describe(g), ""});
      continue;
    }
    const GroupElement ginv = inverse(g);
    const Verdict b = classify_fn(ginv);
    const bool ok = a != Verdict::kZero && b != Verdict::kZero &&
                    ((a == Verdict::kPositive) != (b == Verdict::kPositive));
    if (!ok) record({"trichotomy", describe(g), describe(ginv)});
    if (a == Verdict::kPositive) positives.push_back(&g);
  }
  for (const GroupElement* g : positives) {
    for (const GroupElement* h : positives) {
      ++report.pairs;
      if (classify_fn(multiply(*g, *h)) != Verdict::kPositive) {
        record({"closure", describe(*g), describe(*h)});
      }
    }
  }
  return report;
}

AxiomReport axiom_check(const LexGroupOrder& order, int radius) {
  const std::vector<GroupElement> ball = word_ball(generators(order.series.group), radius);
  return axiom_check(ball, [&order](const GroupElement& g) { return lex_classify(order, g); });
}

LatticeClassifier corrupted_classifier(const LatticeOrder& p, const IntVector& flip) {
  return [p, flip](const IntVector& w) {
    const Verdict v = classify(p, w);
    return w == flip ? opposite(v) : v;
  };
}

}  // namespace ordlab
