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

// ordlab: JSON front end for orders on Z^n and on nilpotent groups.
//
// Exit codes: 0 success, 2 parse/schema error, 3 domain error,
// 4 verification failure. Errors are written to stderr as JSON.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordlab/errors.h"
#include "ordlab/groups.h"
#include "ordlab/json_io.h"
#include "ordlab/lattice_order.h"
#include "ordlab/probes.h"

namespace {

using namespace ordlab;

constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

struct Options {
  std::vector<long> radicands;
  std::string out;
  std::vector<std::string> inputs;
  int radius = 3;
  std::optional<int> count;
  int verify_box = kDefaultVerifyBox;
  int k = 4;
  bool functional = false;
  std::vector<std::string> generators;
  std::string corrupt;
};

RadicandList fallback_radicands(const Options& o) {
  if (o.radicands.empty()) return RadicandList();
  try {
    return RadicandList(o.radicands);
  } catch (const DomainError& e) {
    throw SchemaError(std::string("--radicands: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_count(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw SchemaError(std::string("bad ") + what + " \"" + s + "\"");
}

// "default:N", "default:heisenberg:<n>", "default:triangular:<k>[:A-chain]".
std::optional<LexGroupOrder> named_default(const std::string& source) {
  if (source.rfind("default:", 0) != 0) return std::nullopt;
  const std::vector<std::string> parts = split(source.substr(8), ':');
  if (parts[0] == "N" && parts.size() == 1) return default_n_order();
  if (parts[0] == "heisenberg" && parts.size() == 2) {
    return default_heisenberg_order(parse_count(parts[1], "Heisenberg rank"));
  }
  if (parts[0] == "triangular" && (parts.size() == 2 || parts.size() == 3)) {
    const int k = parse_count(parts[1], "triangular size");
    const bool a_chain = parts.size() == 3 && parts[2] == "A-chain";
    if (parts.size() == 3 && !a_chain && parts[2] != "through-N") {
      throw SchemaError("unknown chain \"" + parts[2] + "\"");
    }
    if (!a_chain) return default_lift_order(k);
    const GroupDescriptor group = GroupDescriptor::triangular(k);
    std::vector<LatticeOrder> factors;
    for (int r : convex_series(group).ranks()) factors.push_back(standard_order(r));
    return make_lex_order(group, std::move(factors));
  }
  throw SchemaError("unknown default order \"" + source + "\"");
}

bool is_lex_document(const Json& j) { return j.is_object() && j.contains("series"); }

struct AnyOrder {
  std::optional<LatticeOrder> lattice;
  std::optional<LexGroupOrder> lex;
};

AnyOrder load_order(const std::string& source, const Options& o) {
  if (auto d = named_default(source)) return {std::nullopt, std::move(*d)};
  const Json doc = load_document(source);
  if (is_lex_document(doc)) return {std::nullopt, lex_order_from_json(doc, fallback_radicands(o))};
  return {order_from_json(doc, fallback_radicands(o)), std::nullopt};
}

LexGroupOrder load_lex_order(const std::string& source, const Options& o) {
  AnyOrder any = load_order(source, o);
  if (!any.lex) throw DomainError("expected an order on a group, got an order on Z^n");
  return std::move(*any.lex);
}

IntMatrix load_matrix(const std::string& source) {
  const Json doc = load_document(source);
  return matrix_from_json(doc.is_object() ? doc.at("matrix") : doc);
}

IntVector load_vector(const std::string& source) {
  const Json doc = load_document(source);
  return vector_from_json(doc.is_object() ? doc.at("vector") : doc);
}

void emit(const Json& doc, const Options& o) {
  const std::string text = dump_canonical(tagged(doc));
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw SchemaError("cannot write \"" + o.out + "\"");
  f << text;
}

Json classification_json(const Classification& c, const char* level_key) {
  Json j = {{"verdict", to_string(c.verdict)}};
  j[level_key] = c.level < 0 ? Json(nullptr) : Json(c.level);
  return j;
}

int cmd_classify(const Options& o) {
  AnyOrder order = load_order(o.inputs.at(0), o);
  if (order.lex) {
    const GroupElement g = element_from_json(load_document(o.inputs.at(1)));
    emit(classification_json(lex_classify_with_layer(*order.lex, g), "layer"), o);
  } else {
    emit(classification_json(classify_with_level(*order.lattice, load_vector(o.inputs.at(1))), "level"),
         o);
  }
  return 0;
}

int cmd_act(const Options& o) {
  const AnyOrder order = load_order(o.inputs.at(0), o);
  if (!order.lattice) throw DomainError("act needs an order on Z^n");
  emit(order_to_json(act(*order.lattice, UnimodularMatrix(load_matrix(o.inputs.at(1))))), o);
  return 0;
}

int cmd_equal(const Options& o) {
  const AnyOrder a = load_order(o.inputs.at(0), o);
  const AnyOrder b = load_order(o.inputs.at(1), o);
  bool equal = false;
  if (a.lattice && b.lattice) {
    equal = orders_equal(*a.lattice, *b.lattice);
  } else if (a.lex && b.lex) {
    equal = lex_orders_equal(*a.lex, *b.lex);
  } else {
    throw DomainError("cannot compare an order on Z^n with an order on a group");
  }
  emit({{"equal", equal}}, o);
  return 0;
}

int cmd_probe_discrete(const Options& o) {
  if (o.functional) {
    int n = 0;
    const std::vector<Functional> vectors =
        functionals_from_json(load_document(o.inputs.at(0)), fallback_radicands(o), &n);
    if (vectors.size() != 1) throw DomainError("--functional needs exactly one defining vector");
    emit(certificate_to_json(discreteness_witness_set(vectors[0], o.verify_box)), o);
    return 0;
  }
  const AnyOrder order = load_order(o.inputs.at(0), o);
  if (!order.lattice) throw DomainError("probe discrete needs an order on Z^n");
  emit(certificate_to_json(ln_smoothness_probe(*order.lattice, o.verify_box)), o);
  return 0;
}

int cmd_probe_condense(const Options& o) {
  const LexGroupOrder order = load_lex_order(o.inputs.empty() ? "default:N" : o.inputs[0], o);
  if (o.count) {
    Json samples = Json::array();
    for (const CondensationSample& s : condensation_sequence(order, *o.count)) {
      samples.push_back(sample_to_json(s));
    }
    emit({{"kind", "condensation-sequence"}, {"count", samples.size()}, {"samples", samples}}, o);
    return 0;
  }
  const auto [g, h] = condensation_representatives(order);
  const NeighborhoodSpec u = positive_ball(order.factors.front().vectors().front(), o.radius);
  emit(sample_to_json(condensation_certificate(order, g, h, u)), o);
  return 0;
}

int cmd_probe_lift(const Options& o) {
  emit(sample_to_json(lift_and_condense(o.k, o.radius)), o);
  return 0;
}

int cmd_orbit(const Options& o) {
  const LexGroupOrder order = load_lex_order(o.inputs.at(0), o);
  emit(orbit_to_json(orbit_enumerate(order, o.radius, o.generators)), o);
  return 0;
}

int cmd_axioms(const Options& o) {
  const AnyOrder order = load_order(o.inputs.at(0), o);
  AxiomReport report;
  if (order.lex) {
    if (!o.corrupt.empty()) throw DomainError("--corrupt applies to orders on Z^n");
    report = axiom_check(*order.lex, o.radius);
  } else if (!o.corrupt.empty()) {
    const IntVector flip = load_vector(o.corrupt);
    if (flip.size() != order.lattice->rank()) throw DimensionMismatch("--corrupt vector");
    report = axiom_check(order.lattice->rank(), corrupted_classifier(*order.lattice, flip),
                         o.radius);
  } else {
    report = axiom_check(*order.lattice, o.radius);
  }
  emit(axiom_report_to_json(report), o);
  return report.passed() ? 0 : kExitVerification;
}

int cmd_group(const Options& o, bool conj) {
  const GroupElement g = element_from_json(load_document(o.inputs.at(0)));
  const GroupElement h = element_from_json(load_document(o.inputs.at(1)));
  if (g.index() != h.index() || flat_coordinates(g).size() != flat_coordinates(h).size()) {
    throw DomainError("elements belong to different groups");
  }
  emit(element_to_json(conj ? multiply(multiply(inverse(g), h), g) : multiply(g, h)), o);
  return 0;
}

int cmd_validate(const Options& o) {
  validate_document(load_document(o.inputs.at(0)));
  emit({{"valid", true}}, o);
  return 0;
}

void report_error(const char* kind, const std::string& message) {
  const Json err = {{"schema", kSchemaTag}, {"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordlab: exact orders on Z^n and nilpotent groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd, int inputs) {
    cmd->add_option("--radicands", o.radicands, "radicands for documents that omit them")
        ->delimiter(',');
    cmd->add_option("--out", o.out, "write the result here instead of stdout");
    // Without allow_extra_args(false) CLI11 splits "[1,2]" into a list.
    if (inputs > 0) {
      cmd->add_option("inputs", o.inputs, "documents: file path or inline JSON")
          ->expected(inputs)
          ->allow_extra_args(false);
    }
  };

  std::function<int()> run;
  auto bind = [&](CLI::App* cmd, std::function<int()> fn) {
    cmd->callback([&run, fn] { run = fn; });
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "sign of a vector or group element");
  common(classify_cmd, 2);
  bind(classify_cmd, [&] { return cmd_classify(o); });

  CLI::App* act_cmd = app.add_subcommand("act", "transport an order by a unimodular matrix");
  common(act_cmd, 2);
  bind(act_cmd, [&] { return cmd_act(o); });

  CLI::App* equal_cmd = app.add_subcommand("equal", "compare two orders");
  common(equal_cmd, 2);
  bind(equal_cmd, [&] { return cmd_equal(o); });

  CLI::App* probe = app.add_subcommand("probe", "certificates about conjugacy orbits");
  probe->require_subcommand(1);
  CLI::App* discrete = probe->add_subcommand("discrete", "discreteness certificate for L_n");
  common(discrete, 1);
  discrete->add_option("--verify-box", o.verify_box, "entry bound B for the verification log");
  discrete->add_flag("--functional", o.functional, "certify a single functional");
  bind(discrete, [&] { return cmd_probe_discrete(o); });
  CLI::App* condense = probe->add_subcommand("condense", "condensation sample(s)");
  common(condense, 0);
  condense->add_option("input", o.inputs, "order on a group (default: default:N)")
      ->expected(0, 1);
  condense->add_option("--radius", o.radius, "neighborhood radius for a single sample");
  condense->add_option("--count", o.count, "emit samples 1..count");
  bind(condense, [&] { return cmd_probe_condense(o); });
  CLI::App* lift = probe->add_subcommand("lift", "condensation on Triangular(k) via N");
  common(lift, 0);
  lift->add_option("--k", o.k, "matrix size, at least 4")->required();
  lift->add_option("--radius", o.radius, "neighborhood radius");
  bind(lift, [&] { return cmd_probe_lift(o); });

  CLI::App* orbit = app.add_subcommand("orbit", "conjugates of an order by a word ball");
  common(orbit, 1);
  orbit->add_option("--radius", o.radius, "word length bound")->required();
  orbit->add_option("--generators", o.generators, "restrict to these generators")
      ->delimiter(',');
  bind(orbit, [&] { return cmd_orbit(o); });

  CLI::App* axioms = app.add_subcommand("axioms", "brute-force positive-cone axioms");
  common(axioms, 1);
  axioms->add_option("--radius", o.radius, "ball radius")->required();
  axioms->add_option("--corrupt", o.corrupt, "flip the verdict at this vector (JSON array)");
  bind(axioms, [&] { return cmd_axioms(o); });

  CLI::App* group = app.add_subcommand("group", "group arithmetic");
  group->require_subcommand(1);
  CLI::App* mul = group->add_subcommand("mul", "product g h");
  common(mul, 2);
  bind(mul, [&] { return cmd_group(o, false); });
  CLI::App* conj = group->add_subcommand("conj", "conjugate g^-1 h g");
  common(conj, 2);
  bind(conj, [&] { return cmd_group(o, true); });

  CLI::App* validate = app.add_subcommand("validate", "re-parse an emitted document");
  common(validate, 1);
  bind(validate, [&] { return cmd_validate(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kExitSchema;
  }

  try {
    return run();
  } catch (const SchemaError& e) {
    report_error("schema", e.what());
    return kExitSchema;
  } catch (const Json::exception& e) {
    report_error("schema", e.what());
    return kExitSchema;
  } catch (const DomainError& e) {
    report_error("domain", e.what());
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    report_error("usage", e.what());
    return kExitSchema;
  } catch (const VerificationError& e) {
    report_error("verification", e.what());
    return kExitVerification;
  }
}
