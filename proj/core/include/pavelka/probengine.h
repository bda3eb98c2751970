/* Copyright 2026 The Pavelka Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Probability distributions over possible worlds, the evaluations they
// induce on fuzzy atoms, and best-possible probability bounds computed by
// exact mixed-integer programming over world weights.

#ifndef PAVELKA_PROBENGINE_H_
#define PAVELKA_PROBENGINE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pavelka/crisp.h"
#include "pavelka/fuzzy.h"
#include "pavelka/optimizer.h"
#include "pavelka/rational.h"
#include "pavelka/semantics.h"
#include "pavelka/theory.h"

namespace pavelka {

// World w assigns true to variables[i] iff bit i of w is set.
class ProbabilityModel {
 public:
  // Throws std::invalid_argument unless weights has 2^n nonnegative entries
  // summing to exactly 1 and variable names are distinct.
  ProbabilityModel(std::vector<std::string> variables,
                   std::vector<Rational> weights);
  static ProbabilityModel Uniform(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t num_worlds() const { return weights_.size(); }

  // Conjunction of literals describing world w, e.g. "p & !q".
  std::string WorldLabel(std::size_t w) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Rational> weights_;
};

// Label for world w over `variables`, as in ProbabilityModel::WorldLabel.
std::string WorldLabel(const std::vector<std::string>& variables,
                       std::size_t w);

// Total weight of the worlds satisfying c. Throws UnboundAtomError when c
// mentions a variable outside the model.
Rational ProbOf(const ProbabilityModel& model, const Crisp& c);

// e(f(phi)) = P(phi) for each body.
Evaluation InducedEval(const ProbabilityModel& model,
                       const std::set<Crisp>& bodies);

// Bodies together with true and every negation, conjunction, disjunction
// and implication of one or two bodies. ValidateFpEvaluation reads atoms
// from this set only.
std::set<Crisp> FpClosure(const std::set<Crisp>& bodies);

struct ValidationReport {
  bool ok = true;
  std::string schema;    // e.g. "FP3", when violated
  std::string instance;  // printed violated instance, when violated
  Rational value;        // its truth value under e, when violated
};

// Checks every FP1, FP1', FP2, FP2', FP3, FP4 and FP4' instance whose
// metavariables range over `bodies`. Throws UnboundAtomError when `e` lacks
// an atom of FpClosure(bodies).
ValidationReport ValidateFpEvaluation(
    const Evaluation& e, const std::set<Crisp>& bodies,
    int entailment_limit = kDefaultEntailmentLimit);

enum class BoundKind { kLower, kUpper };

struct BoundReport {
  Rational value;
  BoundKind kind = BoundKind::kLower;
  bool exact = true;
  std::optional<ProbabilityModel> witness;
};

inline constexpr int kDefaultWorldVariableLimit = 12;

struct ProbOptions {
  int max_variables = kDefaultWorldVariableLimit;
  int max_binaries = kDefaultBinaryLimit;
};

// Lower: inf of e_P(target) over probability models P of the theory.
// Upper: 1 - lower(~target). The witness attains the value exactly.
// Throws UnsupportedError (wrong mode, fuzzy variables, nonlinear product),
// LimitError, or InfeasibleError when the theory has no probability model.
BoundReport FpTruthDegree(const GradedTheory& theory, const Fuzzy& target,
                          BoundKind kind, const ProbOptions& options = {});

// True iff P(then | given) >= alpha in every model of the theory, i.e. the
// minimum of P(given & then) - alpha * P(given) over models is >= 0.
// Throws ProvisoError unless the lower bound of P(given) is positive.
bool CondCheck(const GradedTheory& theory, const Crisp& given,
               const Crisp& then, const Rational& alpha,
               const ProbOptions& options = {});

// Largest alpha on the dyadic bisection lattice of width <= tol accepted
// by CondCheck. `exact` is set when a model attains the ratio.
BoundReport CondLowerBound(const GradedTheory& theory, const Crisp& given,
                           const Crisp& then, const Rational& tol,
                           const ProbOptions& options = {});

// P(a&b&c)P(c) = P(b&c)P(a&c) and the same with ~c in place of c.
bool CheckIndependence(const ProbabilityModel& model, const Crisp& a,
                       const Crisp& b, const Crisp& c);

}  // namespace pavelka

#endif  // PAVELKA_PROBENGINE_H_
