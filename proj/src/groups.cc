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

#include "ordlab/groups.h"

#include <deque>
#include <set>
#include <sstream>
#include <string>

#include "ordlab/errors.h"

namespace ordlab {

namespace {

struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

int flat_index(int i, int j) { return (i - 1) * (i - 2) / 2 + (j - 1); }

std::string entry_name(int i, int j) {
  return "E" + std::to_string(i) + "," + std::to_string(j);
}

void require_same_n(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.n() != h.n() || g.a.size() != g.b.size() || h.a.size() != h.b.size()) {
    throw DomainError("Heisenberg elements with different parameters: n=" +
                      std::to_string(g.n()) + " and n=" + std::to_string(h.n()));
  }
}

void require_n_shape(const NElement& g) {
  if (g.m.size() != 2 || g.k.size() != 3) {
    throw DomainError("N element needs m of length 2 and k of length 3");
  }
}

std::string join(const IntVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).str();
  }
  return s + "]";
}

SeriesLayer cyclic_layer(int i, int j, const std::string& block) {
  SeriesLayer layer;
  layer.label = entry_name(i, j);
  layer.block = block;
  layer.slots = {flat_index(i, j)};
  return layer;
}

void attach_triangular_generators(int k, SeriesLayer& layer,
                                  const std::vector<std::pair<int, int>>& entries) {
  for (const auto& [i, j] : entries) {
    layer.generators.push_back({entry_name(i, j), t_generator(k, i, j)});
  }
}

std::vector<SeriesLayer> a_chain_layers(int size, int k) {
  std::vector<SeriesLayer> layers;
  if (size <= 1) return layers;
  layers = a_chain_layers(size - 1, k);
  for (int j = 1; j < size; ++j) {
    SeriesLayer layer = cyclic_layer(size, j, "");
    attach_triangular_generators(k, layer, {{size, j}});
    layers.push_back(std::move(layer));
  }
  return layers;
}

std::vector<SeriesLayer> through_n_layers(int size, int k) {
  std::vector<SeriesLayer> layers;
  if (size == 4) {
    SeriesLayer bcd;
    bcd.label = "<b,c,d>";
    bcd.slots = {flat_index(4, 2), flat_index(4, 1), flat_index(4, 3)};
    attach_triangular_generators(k, bcd, {{4, 2}, {4, 1}, {4, 3}});
    SeriesLayer fa;
    fa.label = "<f,a>";
    fa.slots = {flat_index(3, 2), flat_index(3, 1)};
    attach_triangular_generators(k, fa, {{3, 2}, {3, 1}});
    SeriesLayer e;
    e.label = "<e>";
    e.slots = {flat_index(2, 1)};
    attach_triangular_generators(k, e, {{2, 1}});
    layers = {bcd, fa, e};
    return layers;
  }
  layers = through_n_layers(size - 1, k);
  for (int j = 1; j < size; ++j) {
    SeriesLayer layer = cyclic_layer(size, j, "");
    attach_triangular_generators(k, layer, {{size, j}});
    layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace

HeisenbergElement HeisenbergElement::identity(int n) {
  if (n < 1) throw DomainError("Heisenberg group needs n >= 1");
  return {IntVector::Zero(n), IntVector::Zero(n), Integer(0)};
}

NElement NElement::identity() { return {IntVector::Zero(2), IntVector::Zero(3)}; }

NElement NElement::from(std::initializer_list<long> m, std::initializer_list<long> k) {
  NElement g{int_vector(m), int_vector(k)};
  require_n_shape(g);
  return g;
}

TriangularElement TriangularElement::identity(int k) {
  if (k < 1) throw DomainError("triangular group needs k >= 1");
  return {IntMatrix::Identity(k, k)};
}

TriangularElement TriangularElement::from_matrix(IntMatrix m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DomainError("triangular element must be a nonempty square matrix");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 1) throw DomainError("triangular element needs a unit diagonal");
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        throw DomainError("triangular element must be lower triangular");
      }
    }
  }
  return {std::move(m)};
}

HeisenbergElement h_multiply(const HeisenbergElement& g, const HeisenbergElement& h) {
  require_same_n(g, h);
  return {g.b + h.b, g.a + h.a, g.c + h.c + g.a.dot(h.b)};
}

HeisenbergElement h_inverse(const HeisenbergElement& g) {
  return {-g.b, -g.a, g.a.dot(g.b) - g.c};
}

LnMatrix h_conj_representation(const HeisenbergElement& g) { return LnMatrix(g.b); }

HeisenbergElement h_generator_x(int n, int i) {
  HeisenbergElement g = HeisenbergElement::identity(n);
  g.a(i - 1) = 1;
  return g;
}

HeisenbergElement h_generator_y(int n, int i) {
  HeisenbergElement g = HeisenbergElement::identity(n);
  g.b(i - 1) = 1;
  return g;
}

HeisenbergElement h_generator_z(int n) {
  HeisenbergElement g = HeisenbergElement::identity(n);
  g.c = 1;
  return g;
}

NElement n_multiply(const NElement& g, const NElement& h) {
  require_n_shape(g);
  require_n_shape(h);
  NElement out;
  out.m = g.m + h.m;
  out.k = IntVector(3);
  out.k(0) = g.k(0) + h.m(0) * g.k(2) + h.k(0);
  out.k(1) = g.k(1) + h.m(1) * g.k(2) + h.k(1);
  out.k(2) = g.k(2) + h.k(2);
  return out;
}

NElement n_inverse(const NElement& g) {
  require_n_shape(g);
  NElement out;
  out.m = -g.m;
  out.k = IntVector(3);
  out.k(0) = g.m(0) * g.k(2) - g.k(0);
  out.k(1) = g.m(1) * g.k(2) - g.k(1);
  out.k(2) = -g.k(2);
  return out;
}

UnimodularMatrix n_conj_representation(const NElement& g) {
  require_n_shape(g);
  IntMatrix phi = IntMatrix::Identity(3, 3);
  phi(0, 2) = g.m(0);
  phi(1, 2) = g.m(1);
  return UnimodularMatrix(std::move(phi));
}

TriangularElement n_to_triangular(const NElement& g) {
  require_n_shape(g);
  auto pw = [](int i, int j, const Integer& e) {
    return t_power(t_generator(4, i, j), e.convert_to<long>());
  };
  TriangularElement out = pw(3, 2, g.m(0));    // f
  out = t_multiply(out, pw(3, 1, g.m(1)));     // a
  out = t_multiply(out, pw(4, 2, g.k(0)));     // b
  out = t_multiply(out, pw(4, 1, g.k(1)));     // c
  return t_multiply(out, pw(4, 3, g.k(2)));    // d
}

TriangularElement t_generator(int k, int i, int j) {
  if (!(1 <= j && j < i && i <= k)) {
    throw DomainError("E_{" + std::to_string(i) + "," + std::to_string(j) +
                      "} is not a generator of N_" + std::to_string(k));
  }
  TriangularElement g = TriangularElement::identity(k);
  g.entries(i - 1, j - 1) = 1;
  return g;
}

TriangularElement t_multiply(const TriangularElement& g, const TriangularElement& h) {
  if (g.k() != h.k()) {
    throw DomainError("triangular elements of sizes " + std::to_string(g.k()) +
                      " and " + std::to_string(h.k()));
  }
  return {g.entries * h.entries};
}

TriangularElement t_inverse(const TriangularElement& g) {
  // (I + N)^-1 = I - N + N^2 - ..., finite since N is nilpotent.
  const int k = g.k();
  const IntMatrix nil = g.entries - IntMatrix::Identity(k, k);
  IntMatrix term = IntMatrix::Identity(k, k);
  IntMatrix sum = IntMatrix::Identity(k, k);
  for (int p = 1; p < k; ++p) {
    term = IntMatrix(-(term * nil));
    sum += term;
  }
  return {sum};
}

TriangularElement t_power(const TriangularElement& g, long e) {
  TriangularElement base = e < 0 ? t_inverse(g) : g;
  unsigned long exp = e < 0 ? -static_cast<unsigned long>(e) : e;
  TriangularElement out = TriangularElement::identity(g.k());
  while (exp) {
    if (exp & 1) out = t_multiply(out, base);
    exp >>= 1;
    if (exp) base = t_multiply(base, base);
  }
  return out;
}

std::vector<std::pair<int, int>> t_lower_central(int k, int l) {
  if (k < 1 || l < 0 || l > k - 1) {
    throw DomainError("lower central level " + std::to_string(l) +
                      " out of range for N_" + std::to_string(k));
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j < i; ++j) {
      if (i - j > l) out.emplace_back(i, j);
    }
  }
  return out;
}

TriangularElement t_embed(const TriangularElement& g) {
  const int k = g.k();
  IntMatrix m = IntMatrix::Identity(k + 1, k + 1);
  m.topLeftCorner(k, k) = g.entries;
  return {std::move(m)};
}

GroupDescriptor GroupDescriptor::heisenberg(int n) {
  if (n < 1) throw DomainError("Heisenberg group needs n >= 1");
  return {GroupKind::kHeisenberg, n, TriangularChain::kAChain};
}

GroupDescriptor GroupDescriptor::n_group() {
  return {GroupKind::kN, 0, TriangularChain::kAChain};
}

GroupDescriptor GroupDescriptor::triangular(int k, TriangularChain chain) {
  if (k < 2) throw DomainError("triangular group needs k >= 2");
  if (chain == TriangularChain::kThroughN && k < 4) {
    throw DomainError("the series through N needs k >= 4");
  }
  return {GroupKind::kTriangular, k, chain};
}

std::string GroupDescriptor::name() const {
  switch (kind) {
    case GroupKind::kHeisenberg:
      return "heisenberg(" + std::to_string(param) + ")";
    case GroupKind::kN:
      return "N";
    case GroupKind::kTriangular:
      break;
  }
  return "triangular(" + std::to_string(param) + ")";
}

bool belongs_to(const GroupDescriptor& group, const GroupElement& g) {
  switch (group.kind) {
    case GroupKind::kHeisenberg: {
      const auto* h = std::get_if<HeisenbergElement>(&g);
      return h && h->n() == group.param && h->a.size() == group.param;
    }
    case GroupKind::kN: {
      const auto* h = std::get_if<NElement>(&g);
      return h && h->m.size() == 2 && h->k.size() == 3;
    }
    case GroupKind::kTriangular:
      break;
  }
  const auto* h = std::get_if<TriangularElement>(&g);
  return h && h->k() == group.param;
}

GroupElement group_identity(const GroupDescriptor& group) {
  switch (group.kind) {
    case GroupKind::kHeisenberg:
      return HeisenbergElement::identity(group.param);
    case GroupKind::kN:
      return NElement::identity();
    case GroupKind::kTriangular:
      break;
  }
  return TriangularElement::identity(group.param);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.index() != h.index()) throw DomainError("elements of different groups");
  if (const auto* x = std::get_if<HeisenbergElement>(&g)) {
    return h_multiply(*x, std::get<HeisenbergElement>(h));
  }
  if (const auto* x = std::get_if<NElement>(&g)) {
    return n_multiply(*x, std::get<NElement>(h));
  }
  return t_multiply(std::get<TriangularElement>(g), std::get<TriangularElement>(h));
}

GroupElement inverse(const GroupElement& g) {
  if (const auto* x = std::get_if<HeisenbergElement>(&g)) return h_inverse(*x);
  if (const auto* x = std::get_if<NElement>(&g)) return n_inverse(*x);
  return t_inverse(std::get<TriangularElement>(g));
}

GroupElement power(const GroupElement& g, long e) {
  GroupElement base = e < 0 ? inverse(g) : g;
  unsigned long exp = e < 0 ? -static_cast<unsigned long>(e) : e;
  GroupElement out = std::visit(
      [](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HeisenbergElement>) {
          return HeisenbergElement::identity(x.n());
        } else if constexpr (std::is_same_v<T, NElement>) {
          return NElement::identity();
        } else {
          return TriangularElement::identity(x.k());
        }
      },
      g);
  while (exp) {
    if (exp & 1) out = multiply(out, base);
    exp >>= 1;
    if (exp) base = multiply(base, base);
  }
  return out;
}

GroupElement commutator(const GroupElement& x, const GroupElement& y) {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

IntVector flat_coordinates(const GroupElement& g) {
  if (const auto* x = std::get_if<HeisenbergElement>(&g)) {
    const int n = x->n();
    IntVector v(2 * n + 1);
    v << x->b, x->a, x->c;
    return v;
  }
  if (const auto* x = std::get_if<NElement>(&g)) {
    IntVector v(5);
    v << x->m, x->k;
    return v;
  }
  const auto& t = std::get<TriangularElement>(g);
  const int k = t.k();
  IntVector v(k * (k - 1) / 2);
  for (int i = 2; i <= k; ++i) {
    for (int j = 1; j < i; ++j) v(flat_index(i, j)) = t.entries(i - 1, j - 1);
  }
  return v;
}

std::string describe(const GroupElement& g) {
  if (const auto* x = std::get_if<HeisenbergElement>(&g)) {
    return "heisenberg(b=" + join(x->b) + ",a=" + join(x->a) + ",c=" + x->c.str() + ")";
  }
  if (const auto* x = std::get_if<NElement>(&g)) {
    return "N(m=" + join(x->m) + ",k=" + join(x->k) + ")";
  }
  const auto& t = std::get<TriangularElement>(g);
  return "triangular(k=" + std::to_string(t.k()) + ",below=" +
         join(flat_coordinates(g)) + ")";
}

std::vector<NamedGenerator> generators(const GroupDescriptor& group) {
  std::vector<NamedGenerator> out;
  switch (group.kind) {
    case GroupKind::kHeisenberg: {
      const int n = group.param;
      for (int i = 1; i <= n; ++i) {
        out.push_back({"x" + std::to_string(i), h_generator_x(n, i)});
      }
      for (int i = 1; i <= n; ++i) {
        out.push_back({"y" + std::to_string(i), h_generator_y(n, i)});
      }
      out.push_back({"z", h_generator_z(n)});
      return out;
    }
    case GroupKind::kN:
      out.push_back({"b1", NElement::from({1, 0}, {0, 0, 0})});
      out.push_back({"b2", NElement::from({0, 1}, {0, 0, 0})});
      out.push_back({"a1", NElement::from({0, 0}, {1, 0, 0})});
      out.push_back({"a2", NElement::from({0, 0}, {0, 1, 0})});
      out.push_back({"a3", NElement::from({0, 0}, {0, 0, 1})});
      return out;
    case GroupKind::kTriangular:
      break;
  }
  const int k = group.param;
  for (int i = 2; i <= k; ++i) {
    for (int j = 1; j < i; ++j) out.push_back({entry_name(i, j), t_generator(k, i, j)});
  }
  return out;
}

std::vector<int> ConvexSeries::ranks() const {
  std::vector<int> out;
  for (const SeriesLayer& l : layers) out.push_back(l.rank());
  return out;
}

ConvexSeries convex_series(const GroupDescriptor& group) {
  ConvexSeries series;
  series.group = group;
  const std::vector<NamedGenerator> gens = generators(group);
  switch (group.kind) {
    case GroupKind::kHeisenberg: {
      const int n = group.param;
      SeriesLayer kernel;
      SeriesLayer quotient;
      kernel.label = "<x,z>";
      quotient.label = "<y>";
      for (int i = 0; i < n; ++i) {
        kernel.slots.push_back(n + i);
        kernel.generators.push_back(gens[i]);
        quotient.slots.push_back(i);
        quotient.generators.push_back(gens[n + i]);
      }
      kernel.slots.push_back(2 * n);
      kernel.generators.push_back(gens[2 * n]);
      series.layers = {kernel, quotient};
      return series;
    }
    case GroupKind::kN: {
      SeriesLayer kernel;
      kernel.label = "<a1,a2,a3>";
      kernel.slots = {2, 3, 4};
      kernel.generators = {gens[2], gens[3], gens[4]};
      SeriesLayer quotient;
      quotient.label = "<b1,b2>";
      quotient.slots = {0, 1};
      quotient.generators = {gens[0], gens[1]};
      series.layers = {kernel, quotient};
      return series;
    }
    case GroupKind::kTriangular:
      break;
  }
  const int k = group.param;
  series.layers = group.chain == TriangularChain::kThroughN ? through_n_layers(k, k)
                                                            : a_chain_layers(k, k);
  // Everything below the top k-1 cyclic factors sits in the copy of N_{k-1}.
  const std::string block = "N~" + std::to_string(k - 1);
  const size_t inner = series.layers.size() - static_cast<size_t>(k - 1);
  for (size_t i = 0; i < inner; ++i) series.layers[i].block = block;
  return series;
}

IntVector layer_coordinates(const SeriesLayer& layer, const GroupElement& g) {
  const IntVector flat = flat_coordinates(g);
  IntVector out(layer.rank());
  for (int i = 0; i < layer.rank(); ++i) out(i) = flat(layer.slots[i]);
  return out;
}

int top_layer(const ConvexSeries& series, const GroupElement& g) {
  const IntVector flat = flat_coordinates(g);
  for (int l = static_cast<int>(series.layers.size()) - 1; l >= 0; --l) {
    for (int s : series.layers[l].slots) {
      if (flat(s) != 0) return l;
    }
  }
  return -1;
}

LexGroupOrder make_lex_order(const GroupDescriptor& group,
                             std::vector<LatticeOrder> factors) {
  ConvexSeries series = convex_series(group);
  if (factors.size() != series.layers.size()) {
    throw DomainError("series of " + group.name() + " has " +
                      std::to_string(series.layers.size()) + " factors, got " +
                      std::to_string(factors.size()) + " orders");
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].rank() != series.layers[i].rank()) {
      throw DomainError("factor " + std::to_string(i) + " of " + group.name() +
                        " has rank " + std::to_string(series.layers[i].rank()) +
                        ", order has rank " + std::to_string(factors[i].rank()));
    }
  }
  return {std::move(series), std::move(factors)};
}

Classification lex_classify_with_layer(const LexGroupOrder& order,
                                       const GroupElement& g) {
  if (!belongs_to(order.series.group, g)) {
    throw DomainError("element " + describe(g) + " is not in " +
                      order.series.group.name());
  }
  const int l = top_layer(order.series, g);
  if (l < 0) return {};
  const Verdict v = classify(order.factors[l], layer_coordinates(order.series.layers[l], g));
  return {v, l};
}

Verdict lex_classify(const LexGroupOrder& order, const GroupElement& g) {
  return lex_classify_with_layer(order, g).verdict;
}

bool fixes_series(const ConvexSeries& series, const GroupElement& g) {
  if (!belongs_to(series.group, g)) return false;
  for (const GroupElement& x : {g, inverse(g)}) {
    const GroupElement xinv = inverse(x);
    for (size_t l = 0; l < series.layers.size(); ++l) {
      for (const NamedGenerator& t : series.layers[l].generators) {
        const GroupElement conj = multiply(multiply(xinv, t.element), x);
        if (l == 0) {
          if (top_layer(series, conj) > 0) return false;
        } else if (top_layer(series, multiply(conj, inverse(t.element))) >=
                   static_cast<int>(l)) {
          return false;
        }
      }
    }
  }
  return true;
}

UnimodularMatrix kernel_representation(const ConvexSeries& series,
                                       const GroupElement& g) {
  const SeriesLayer& kernel = series.layers.front();
  const GroupElement ginv = inverse(g);
  IntMatrix phi(kernel.rank(), kernel.rank());
  for (int j = 0; j < kernel.rank(); ++j) {
    const GroupElement conj = multiply(multiply(ginv, kernel.generators[j].element), g);
    if (top_layer(series, conj) > 0) {
      throw DomainError("conjugation by " + describe(g) +
                        " does not preserve the kernel factor");
    }
    phi.col(j) = layer_coordinates(kernel, conj);
  }
  return UnimodularMatrix(std::move(phi));
}

bool lex_orders_equal(const LexGroupOrder& a, const LexGroupOrder& b) {
  if (!(a.series.group == b.series.group) || a.factors.size() != b.factors.size()) {
    return false;
  }
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (!orders_equal(a.factors[i], b.factors[i])) return false;
  }
  return true;
}

LexGroupOrder conjugate_lex_order(const LexGroupOrder& order, const GroupElement& g) {
  if (!belongs_to(order.series.group, g)) {
    throw DomainError("conjugator " + describe(g) + " is not in " +
                      order.series.group.name());
  }
  if (!fixes_series(order.series, g)) {
    throw DomainError("conjugator " + describe(g) + " does not fix the series of " +
                      order.series.group.name());
  }
  LexGroupOrder out = order;
  out.factors[0] = act(order.factors[0], kernel_representation(order.series, g));
  return out;
}

std::vector<GroupElement> word_ball(const std::vector<NamedGenerator>& gens, int radius) {
  if (gens.empty()) throw DomainError("word ball needs at least one generator");
  std::vector<GroupElement> letters;
  for (const NamedGenerator& t : gens) {
    letters.push_back(t.element);
    letters.push_back(inverse(t.element));
  }
  GroupElement id = multiply(letters[0], letters[1]);
  std::vector<GroupElement> out{id};
  std::set<IntVector, LexLess> seen{flat_coordinates(id)};
  size_t frontier_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const size_t frontier_end = out.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const GroupElement& s : letters) {
        GroupElement next = multiply(out[i], s);
        if (seen.insert(flat_coordinates(next)).second) out.push_back(std::move(next));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace ordlab
