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

// Finite, exactly verified evidence about conjugacy orbits of orders:
//
//  * discreteness certificates: a finite set of positive vectors that every
//    transported order L(P) != P fails to contain;
//  * condensation samples: conjugators moving an order inside a prescribed
//    neighborhood without fixing it;
//  * orbit listings and brute-force checks of the positive-cone axioms.

#ifndef ORDLAB_PROBES_H_
#define ORDLAB_PROBES_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/exact_scalar.h"
#include "ordlab/groups.h"
#include "ordlab/integer_linear.h"
#include "ordlab/lattice_order.h"

namespace ordlab {

inline constexpr int kDefaultVerifyBox = 3;

// Lattice vectors required to be positive.
struct NeighborhoodSpec {
  std::vector<IntVector> elements;
};

// Nonzero integer vectors of Euclidean norm <= radius, lexicographic.
std::vector<IntVector> lattice_ball(int n, int radius);
// The positive part of lattice_ball for the functional v.
NeighborhoodSpec positive_ball(const Functional& v, int radius);

// One row of a verification log: a conjugating matrix and how it was
// handled. `fixed` means L(P) = P; otherwise `witness` indexes a witness
// that L(P) does not classify as positive, and `sign` is its verdict there.
struct VerificationEntry {
  LnMatrix matrix;
  bool fixed = false;
  int witness = -1;
  int sign = 0;
};

struct DiscretenessCertificate {
  int rank = 0;
  std::vector<Functional> base;           // defining vectors of the base order
  std::vector<IntVector> witnesses;
  std::vector<std::string> witness_notes; // provenance of each witness
  std::string scope;                      // "L_n" or "L_1 trivial"
  std::vector<std::string> trace;         // recursion steps
  int verify_box = kDefaultVerifyBox;
  std::vector<VerificationEntry> log;
};

// z with <v, z> > 0 and <(A^-1)^T v, z> < 0, verified exactly. Requires a
// nonzero last coordinate and A != I.
IntVector separating_witness(const Functional& v, const LnMatrix& a);

// One witness per nonzero b in {-1,0,1}^{n-1}, lexicographic in b. The log
// covers every non-identity L_n matrix with entries in [-box, box], judged
// by the sign of the transported functional.
DiscretenessCertificate discreteness_witness_set(const Functional& v,
                                                 int verify_box = kDefaultVerifyBox);

// Discreteness certificate for the L_n-orbit of P, recursing into the first
// convex sublattice when v_0 has a zero last coordinate.
DiscretenessCertificate ln_smoothness_probe(const LatticeOrder& p,
                                            int verify_box = kDefaultVerifyBox);

// Every L_n matrix with entries in [-box, box] other than I either fixes P
// or makes some witness non-positive. Throws VerificationError otherwise.
std::vector<VerificationEntry> verify_discreteness(const LatticeOrder& p,
                                                   const std::vector<IntVector>& witnesses,
                                                   int box);
// The same for a single functional: exclusion means <(A^-1)^T v, z> < 0.
std::vector<VerificationEntry> verify_functional_discreteness(
    const Functional& v, const std::vector<IntVector>& witnesses, int box);

// Non-identity L_n matrices with entries in [-box, box], lexicographic.
std::vector<LnMatrix> ln_box(int n, int box);

// A positive dyadic rational eps such that <v + eps e_n, u> > 0 for every u
// in U, or nullopt (infinity) when no u has a negative last coordinate.
// Throws DomainError if some u is not positive for v.
std::optional<Rational> epsilon_bound(const Functional& v, const NeighborhoodSpec& u);

// Throws DomainError("... rationally dependent ...") when some nonzero
// integer vector is orthogonal to v.
void require_rationally_independent(const Functional& v);

struct CondensationPair {
  Integer k0;
  Integer t0;
  ExactScalar shift;     // -nm (k0 alpha + t0 beta), strictly inside (0, bound)
  int box_exponent = 0;  // solution found in the box |k0|,|t0| <= 2^box_exponent
  long candidates = 0;   // pairs checked exactly
};

// Smallest (max(|k0|,|t0|), |k0|+|t0|, k0, t0) with k0, t0 != 0 and
// 0 < -nm (k0 alpha + t0 beta) < bound, where v = (alpha, beta, gamma).
// An absent bound means no upper limit.
CondensationPair condensation_pair(const Functional& v, const Integer& n,
                                   const Integer& m,
                                   const std::optional<ExactScalar>& bound);

struct CondensationSample {
  LexGroupOrder base;
  LexGroupOrder transported;
  NeighborhoodSpec neighborhood;      // kernel coordinates
  std::optional<Rational> epsilon;    // from the neighborhood; nullopt = infinity
  std::optional<ExactScalar> bound;   // the bound actually imposed on the shift
  Integer n;                          // phi(g) = E13(n)
  Integer m;                          // phi(h) = E23(m)
  std::string g_name;
  std::string h_name;
  CondensationPair pair;
  GroupElement conjugator;            // g^{k0 m} h^{t0 n}
  UnimodularMatrix phi = UnimodularMatrix::identity(3);
};

// Condensation conjugator for a lex order whose kernel factor is defined by
// one vector (alpha, beta, gamma) with independent entries. `g` and `h` must
// fix the series with phi(g) = E13(n), phi(h) = E23(m). `cap` further
// bounds the shift. Every post-condition is verified exactly.
CondensationSample condensation_certificate(const LexGroupOrder& order,
                                            const NamedGenerator& g,
                                            const NamedGenerator& h,
                                            const NeighborhoodSpec& u,
                                            const std::optional<ExactScalar>& cap = std::nullopt);

// Generators of the order's group that fix the series and act on the kernel
// as E13(n) and E23(m).
std::pair<NamedGenerator, NamedGenerator> condensation_representatives(
    const LexGroupOrder& order);

// Samples j = 1..count, sample j inside the positive norm ball of radius j,
// with strictly decreasing shifts. Verified pairwise distinct.
std::vector<CondensationSample> condensation_sequence(const LexGroupOrder& order,
                                                      int count);

// The default order on N: kernel [(sqrt2, sqrt3, 1)], quotient [(1,0),(0,1)].
LexGroupOrder default_n_order();
// Order on Heisenberg(n): kernel [(1,...,1), e_1, ..., e_n] in the (a, c)
// coordinates, standard order on the quotient.
LexGroupOrder default_heisenberg_order(int n);
// Order on Triangular(k) through N with the condensed kernel order and
// standard orders on the other factors. k >= 4.
LexGroupOrder default_lift_order(int k);

// Condensation sample on Triangular(k), k >= 4, with the conjugator taken
// from the copy of N in Triangular(4) and embedded. `radius` sets the
// neighborhood. Throws DomainError for k < 4.
CondensationSample lift_and_condense(int k, int radius = 3);

struct OrbitEntry {
  GroupElement conjugator;  // first conjugator found for this order
  LexGroupOrder order;
};

struct OrbitListing {
  std::vector<OrbitEntry> orders;
  long conjugators_tried = 0;
  long conjugators_skipped = 0;  // elements not fixing the series
  bool pairwise_distinct = false;
};

// Conjugates of O by the word ball of the given radius, deduplicated. An
// empty `generator_names` uses all generators of the group.
OrbitListing orbit_enumerate(const LexGroupOrder& order, int radius,
                             const std::vector<std::string>& generator_names = {});

struct AxiomViolation {
  std::string kind;  // "identity", "trichotomy" or "closure"
  std::string first;
  std::string second;
};

struct AxiomReport {
  long elements = 0;
  long pairs = 0;
  std::vector<AxiomViolation> violations;
  bool passed() const { return violations.empty(); }
};

using LatticeClassifier = std::function<Verdict(const IntVector&)>;
using GroupClassifier = std::function<Verdict(const GroupElement&)>;

// Trichotomy and closure on the Euclidean lattice ball of `radius`.
AxiomReport axiom_check(int n, const LatticeClassifier& classify, int radius);
AxiomReport axiom_check(const LatticeOrder& p, int radius);
// Trichotomy and closure on a word ball.
AxiomReport axiom_check(const std::vector<GroupElement>& ball,
                        const GroupClassifier& classify);
AxiomReport axiom_check(const LexGroupOrder& order, int radius);

// Classifier of P with the verdict at `flip` reversed: a negative control.
LatticeClassifier corrupted_classifier(const LatticeOrder& p, const IntVector& flip);

}  // namespace ordlab

#endif  // ORDLAB_PROBES_H_
