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

#include "ordlab/json_io.h"

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "ordlab/errors.h"

namespace ordlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::string string_field(const Json& j, const char* key) {
  const Json& s = field(j, key);
  if (!s.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
  return s.get<std::string>();
}

const char* chain_name(TriangularChain c) {
  return c == TriangularChain::kThroughN ? "through-N" : "A-chain";
}

Json integer_list(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(integer_to_json(v(i)));
  return out;
}

IntVector integer_list_from_json(const Json& j, Eigen::Index expected, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  if (expected >= 0 && static_cast<Eigen::Index>(j.size()) != expected) {
    throw SchemaError(std::string(what) + " must have " + std::to_string(expected) + " entries");
  }
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = integer_from_json(j[i]);
  return v;
}

Json ln_entry_to_json(const VerificationEntry& e) {
  Json j = {{"matrix", matrix_to_json(e.matrix.to_unimodular().matrix())}, {"fixed", e.fixed}};
  if (e.fixed) {
    j["witness"] = nullptr;
    j["sign"] = nullptr;
  } else {
    j["witness"] = e.witness;
    j["sign"] = e.sign;
  }
  return j;
}

Json optional_scalar(const std::optional<ExactScalar>& s) {
  return s ? scalar_to_json(*s) : Json(nullptr);
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_document(const std::string& source) {
  const size_t start = source.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && (source[start] == '{' || source[start] == '[')) {
    return parse_document(source);
  }
  std::ifstream in(source);
  if (!in) throw SchemaError("cannot read input document \"" + source + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

void check_schema_tag(const Json& doc) {
  if (!doc.is_object()) return;
  auto it = doc.find("schema");
  if (it == doc.end()) return;
  if (!it->is_string() || it->get<std::string>() != kSchemaTag) {
    throw SchemaError("unsupported schema tag " + it->dump() + ", expected \"" + kSchemaTag + "\"");
  }
}

Json tagged(Json doc) {
  check_schema_tag(doc);
  doc["schema"] = kSchemaTag;
  return doc;
}

Json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<long>::min() && z <= std::numeric_limits<long>::max()) {
    return z.convert_to<long>();
  }
  return z.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw SchemaError("expected an integer, got " + j.dump());
}

long small_int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SchemaError("expected a rational string, got " + j.dump());
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

IntVector vector_from_json(const Json& j) { return integer_list_from_json(j, -1, "vector"); }

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty array of rows");
  const Eigen::Index cols = j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
  IntMatrix m(static_cast<Eigen::Index>(j.size()), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = integer_list_from_json(j[i], cols, "matrix row").transpose();
  }
  return m;
}

Json radicands_to_json(const RadicandList& basis) { return basis.radicands(); }

RadicandList radicands_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("radicands must be an array of integers");
  std::vector<long> r;
  for (const Json& e : j) r.push_back(small_int_from_json(e, "radicand"));
  try {
    return RadicandList(std::move(r));
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

Json scalar_to_json(const ExactScalar& s) {
  Json coeffs = Json::array();
  for (const Rational& q : s.coeffs()) coeffs.push_back(rational_to_json(q));
  return {{"radicands", radicands_to_json(s.basis())}, {"coeffs", coeffs}};
}

ExactScalar scalar_from_json(const Json& j, const RadicandList& basis) {
  if (j.is_object()) {
    const RadicandList own = radicands_from_json(field(j, "radicands"));
    if (!(own == basis) && basis.size() != 0) throw BasisMismatch();
    return scalar_from_json(array_field(j, "coeffs"), own);
  }
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != basis.size() + 1) {
      throw SchemaError("coefficient list " + j.dump() + " needs " +
                        std::to_string(basis.size() + 1) + " entries");
    }
    std::vector<Rational> coeffs;
    for (const Json& e : j) coeffs.push_back(rational_from_json(e));
    return ExactScalar(basis, std::move(coeffs));
  }
  return ExactScalar::rational(basis, rational_from_json(j));
}

Json functional_to_json(const Functional& v) {
  Json out = Json::array();
  for (const ExactScalar& e : v) {
    Json coeffs = Json::array();
    for (const Rational& q : e.coeffs()) coeffs.push_back(rational_to_json(q));
    out.push_back(coeffs);
  }
  return out;
}

std::vector<Functional> functionals_from_json(const Json& j, const RadicandList& fallback,
                                              int* rank) {
  check_schema_tag(j);
  const RadicandList basis =
      j.is_object() && j.contains("radicands") ? radicands_from_json(j["radicands"]) : fallback;
  const Json& rows = array_field(j, "vectors");
  std::vector<Functional> vectors;
  for (const Json& row : rows) {
    if (!row.is_array()) throw SchemaError("each defining vector must be an array");
    Functional v;
    for (const Json& e : row) v.push_back(scalar_from_json(e, basis));
    vectors.push_back(std::move(v));
  }
  int n = -1;
  if (j.contains("rank")) {
    n = static_cast<int>(small_int_from_json(j["rank"], "rank"));
  } else if (!vectors.empty()) {
    n = static_cast<int>(vectors[0].size());
  }
  if (n < 1) throw SchemaError("order document needs a positive rank");
  for (const Functional& v : vectors) {
    if (static_cast<int>(v.size()) != n) {
      throw SchemaError("defining vector of length " + std::to_string(v.size()) +
                        " in an order of rank " + std::to_string(n));
    }
  }
  if (rank) *rank = n;
  return vectors;
}

Json order_to_json(const LatticeOrder& p) {
  return {{"kind", "order"},
          {"rank", p.rank()},
          {"radicands", radicands_to_json(p.radicands())},
          {"vectors", [&] {
             Json rows = Json::array();
             for (const Functional& v : p.vectors()) rows.push_back(functional_to_json(v));
             return rows;
           }()}};
}

LatticeOrder order_from_json(const Json& j, const RadicandList& fallback) {
  int n = 0;
  std::vector<Functional> vectors = functionals_from_json(j, fallback, &n);
  return make_order(n, std::move(vectors));
}

Json group_to_json(const GroupDescriptor& group) {
  switch (group.kind) {
    case GroupKind::kHeisenberg:
      return {{"group", "heisenberg"}, {"n", group.param}};
    case GroupKind::kN:
      return {{"group", "N"}};
    case GroupKind::kTriangular:
      break;
  }
  return {{"group", "triangular"}, {"k", group.param}, {"chain", chain_name(group.chain)}};
}

GroupDescriptor group_from_json(const Json& j) {
  const std::string name = string_field(j, "group");
  if (name == "heisenberg") {
    return GroupDescriptor::heisenberg(static_cast<int>(small_int_from_json(field(j, "n"), "n")));
  }
  if (name == "N") return GroupDescriptor::n_group();
  if (name == "triangular") {
    const int k = static_cast<int>(small_int_from_json(field(j, "k"), "k"));
    TriangularChain chain = TriangularChain::kAChain;
    if (j.contains("chain")) {
      const std::string c = string_field(j, "chain");
      if (c == "through-N") {
        chain = TriangularChain::kThroughN;
      } else if (c != "A-chain") {
        throw SchemaError("unknown chain \"" + c + "\", expected \"A-chain\" or \"through-N\"");
      }
    }
    return GroupDescriptor::triangular(k, chain);
  }
  throw SchemaError("unknown group \"" + name + "\"");
}

Json element_to_json(const GroupElement& g) {
  if (const auto* x = std::get_if<HeisenbergElement>(&g)) {
    return {{"group", "heisenberg"}, {"n", x->n()}, {"b", integer_list(x->b)},
            {"a", integer_list(x->a)}, {"c", integer_to_json(x->c)}};
  }
  if (const auto* x = std::get_if<NElement>(&g)) {
    return {{"group", "N"}, {"m", integer_list(x->m)}, {"k", integer_list(x->k)}};
  }
  const auto& t = std::get<TriangularElement>(g);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < t.entries.rows(); ++i) {
    rows.push_back(integer_list(t.entries.row(i).transpose()));
  }
  return {{"group", "triangular"}, {"k", t.k()}, {"entries", rows}};
}

GroupElement element_from_json(const Json& j) {
  check_schema_tag(j);
  const std::string name = string_field(j, "group");
  if (name == "heisenberg") {
    const long n = small_int_from_json(field(j, "n"), "n");
    if (n < 1) throw SchemaError("heisenberg element needs n >= 1");
    return HeisenbergElement{integer_list_from_json(field(j, "b"), n, "b"),
                             integer_list_from_json(field(j, "a"), n, "a"),
                             integer_from_json(field(j, "c"))};
  }
  if (name == "N") {
    return NElement{integer_list_from_json(field(j, "m"), 2, "m"),
                    integer_list_from_json(field(j, "k"), 3, "k")};
  }
  if (name == "triangular") {
    const long k = small_int_from_json(field(j, "k"), "k");
    const Json& rows = array_field(j, "entries");
    if (k < 1 || static_cast<long>(rows.size()) != k) {
      throw SchemaError("triangular element needs k rows of k entries");
    }
    IntMatrix m(k, k);
    for (long i = 0; i < k; ++i) m.row(i) = integer_list_from_json(rows[i], k, "entries row").transpose();
    try {
      return TriangularElement::from_matrix(std::move(m));
    } catch (const DomainError& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("unknown group \"" + name + "\"");
}

Json lex_order_to_json(const LexGroupOrder& order) {
  Json layers = Json::array();
  Json factors = Json::array();
  for (const SeriesLayer& layer : order.series.layers) layers.push_back(layer.label);
  for (const LatticeOrder& p : order.factors) factors.push_back(order_to_json(p));
  return {{"kind", "lex-order"},
          {"series", group_to_json(order.series.group)},
          {"layers", layers},
          {"factors", factors}};
}

LexGroupOrder lex_order_from_json(const Json& j, const RadicandList& fallback) {
  check_schema_tag(j);
  const GroupDescriptor group = group_from_json(field(j, "series"));
  std::vector<LatticeOrder> factors;
  for (const Json& f : array_field(j, "factors")) factors.push_back(order_from_json(f, fallback));
  return make_lex_order(group, std::move(factors));
}

Json certificate_to_json(const DiscretenessCertificate& cert) {
  Json base = Json::array();
  for (const Functional& v : cert.base) base.push_back(functional_to_json(v));
  Json witnesses = Json::array();
  for (const IntVector& z : cert.witnesses) witnesses.push_back(vector_to_json(z));
  Json log = Json::array();
  for (const VerificationEntry& e : cert.log) log.push_back(ln_entry_to_json(e));
  const RadicandList radicands =
      !cert.base.empty() && !cert.base[0].empty() ? cert.base[0][0].basis() : RadicandList();
  return {{"kind", "discreteness-certificate"},
          {"rank", cert.rank},
          {"radicands", radicands_to_json(radicands)},
          {"base", base},
          {"scope", cert.scope},
          {"witnesses", witnesses},
          {"witness_notes", cert.witness_notes},
          {"trace", cert.trace},
          {"verify_box", cert.verify_box},
          {"log", log}};
}

Json sample_to_json(const CondensationSample& s) {
  Json neighborhood = Json::array();
  for (const IntVector& u : s.neighborhood.elements) neighborhood.push_back(vector_to_json(u));
  return {{"kind", "condensation-sample"},
          {"base", lex_order_to_json(s.base)},
          {"transported", lex_order_to_json(s.transported)},
          {"neighborhood", neighborhood},
          {"epsilon", s.epsilon ? rational_to_json(*s.epsilon) : Json(nullptr)},
          {"bound", optional_scalar(s.bound)},
          {"n", integer_to_json(s.n)},
          {"m", integer_to_json(s.m)},
          {"g", s.g_name},
          {"h", s.h_name},
          {"k0", integer_to_json(s.pair.k0)},
          {"t0", integer_to_json(s.pair.t0)},
          {"shift", scalar_to_json(s.pair.shift)},
          {"search", {{"box_exponent", s.pair.box_exponent}, {"candidates", s.pair.candidates}}},
          {"conjugator", element_to_json(s.conjugator)},
          {"phi", matrix_to_json(s.phi.matrix())}};
}

Json orbit_to_json(const OrbitListing& listing) {
  Json orders = Json::array();
  for (const OrbitEntry& e : listing.orders) {
    orders.push_back({{"conjugator", element_to_json(e.conjugator)},
                      {"order", lex_order_to_json(e.order)}});
  }
  return {{"kind", "orbit-listing"},
          {"count", listing.orders.size()},
          {"pairwise_distinct", listing.pairwise_distinct},
          {"conjugators_tried", listing.conjugators_tried},
          {"conjugators_skipped", listing.conjugators_skipped},
          {"orders", orders}};
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json violations = Json::array();
  for (const AxiomViolation& v : report.violations) {
    violations.push_back({{"kind", v.kind}, {"first", v.first}, {"second", v.second}});
  }
  return {{"kind", "axiom-report"},
          {"passed", report.passed()},
          {"elements", report.elements},
          {"pairs", report.pairs},
          {"violations", violations}};
}

void validate_document(const Json& doc) {
  check_schema_tag(doc);
  if (doc.is_array()) {
    for (const Json& d : doc) validate_document(d);
    return;
  }
  const std::string kind = doc.contains("kind") ? string_field(doc, "kind") : "";
  try {
    if (kind == "order") {
      order_from_json(doc);
    } else if (kind == "lex-order") {
      lex_order_from_json(doc);
    } else if (kind == "discreteness-certificate") {
      const RadicandList basis = radicands_from_json(field(doc, "radicands"));
      for (const Json& v : array_field(doc, "base")) {
        for (const Json& e : v) scalar_from_json(e, basis);
      }
      for (const Json& z : array_field(doc, "witnesses")) vector_from_json(z);
      for (const Json& e : array_field(doc, "log")) {
        UnimodularMatrix(matrix_from_json(field(e, "matrix")));
      }
    } else if (kind == "condensation-sample") {
      lex_order_from_json(field(doc, "base"));
      lex_order_from_json(field(doc, "transported"));
      element_from_json(field(doc, "conjugator"));
      scalar_from_json(field(doc, "shift"), RadicandList());
      UnimodularMatrix(matrix_from_json(field(doc, "phi")));
      for (const Json& u : array_field(doc, "neighborhood")) vector_from_json(u);
    } else if (kind == "condensation-sequence") {
      for (const Json& s : array_field(doc, "samples")) validate_document(s);
    } else if (kind == "orbit-listing") {
      for (const Json& e : array_field(doc, "orders")) {
        element_from_json(field(e, "conjugator"));
        lex_order_from_json(field(e, "order"));
      }
    } else if (kind == "axiom-report") {
      array_field(doc, "violations");
    } else if (doc.contains("group") && doc["group"].is_string()) {
      element_from_json(doc);
    } else if (doc.contains("verdict") || doc.contains("equal") || doc.contains("matrix")) {
      // Small result records: nothing embedded to re-parse beyond the keys.
    } else {
      throw SchemaError("document of unknown kind \"" + kind + "\"");
    }
  } catch (const DomainError& e) {
    throw SchemaError(std::string("document does not revalidate: ") + e.what());
  }
}

}  // namespace ordlab
