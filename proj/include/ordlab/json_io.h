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

// JSON documents for every ordlab value. Rationals are strings "p/q" or
// "n"; integer matrices and lattice vectors are arrays of integer strings;
// group element exponents are JSON numbers when they fit in 64 bits. Parse
// failures of any kind raise SchemaError. Objects serialize with sorted
// keys, so equal values give byte-identical text.

#ifndef ORDLAB_JSON_IO_H_
#define ORDLAB_JSON_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ordlab/exact_scalar.h"
#include "ordlab/groups.h"
#include "ordlab/integer_linear.h"
#include "ordlab/lattice_order.h"
#include "ordlab/numeric.h"
#include "ordlab/probes.h"

namespace ordlab {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "ordlab/1";

Json parse_document(std::string_view text);
// Inline JSON when `source` starts with '{' or '[', otherwise a file path.
Json load_document(const std::string& source);
// Two-space indented text with a trailing newline.
std::string dump_canonical(const Json& doc);
// Adds "schema":"ordlab/1"; rejects a document carrying another tag.
Json tagged(Json doc);
void check_schema_tag(const Json& doc);

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);
long small_int_from_json(const Json& j, const char* what);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json radicands_to_json(const RadicandList& basis);
RadicandList radicands_from_json(const Json& j);

// {"radicands":[...],"coeffs":[...]}.
Json scalar_to_json(const ExactScalar& s);
// Accepts the object form, a bare coefficient list over `basis`, or a
// bare rational.
ExactScalar scalar_from_json(const Json& j, const RadicandList& basis);

// {"rank":n,"radicands":[...],"vectors":[[coeff lists]]}.
Json order_to_json(const LatticeOrder& p);
// `fallback` supplies the radicands when the document has none.
LatticeOrder order_from_json(const Json& j, const RadicandList& fallback = RadicandList());
// The defining vectors only, without totality checks.
std::vector<Functional> functionals_from_json(const Json& j, const RadicandList& fallback,
                                              int* rank);
Json functional_to_json(const Functional& v);

Json group_to_json(const GroupDescriptor& group);
GroupDescriptor group_from_json(const Json& j);
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);

// {"kind":"lex-order","series":group,"layers":[labels],"factors":[orders]}.
Json lex_order_to_json(const LexGroupOrder& order);
LexGroupOrder lex_order_from_json(const Json& j, const RadicandList& fallback = RadicandList());

Json certificate_to_json(const DiscretenessCertificate& cert);
Json sample_to_json(const CondensationSample& sample);
Json orbit_to_json(const OrbitListing& listing);
Json axiom_report_to_json(const AxiomReport& report);

// Re-parses every embedded value of a document produced by this module,
// dispatching on "kind". Throws SchemaError on the first problem.
void validate_document(const Json& doc);

}  // namespace ordlab

#endif  // ORDLAB_JSON_IO_H_
