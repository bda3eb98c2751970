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

// Possibility distributions, necessity measures, exact necessity bounds for
// possibilistic knowledge bases, and graded resolution.

#ifndef PAVELKA_NECENGINE_H_
#define PAVELKA_NECENGINE_H_

#include <set>
#include <string>
#include <vector>

#include "pavelka/crisp.h"
#include "pavelka/fuzzy.h"
#include "pavelka/probengine.h"
#include "pavelka/rational.h"
#include "pavelka/semantics.h"
#include "pavelka/theory.h"

namespace pavelka {

// A normalized possibility distribution over worlds; world w assigns true
// to variables[i] iff bit i of w is set.
class NecessityModel {
 public:
  // Throws std::invalid_argument unless pi has 2^n entries in [0,1] with
  // maximum exactly 1.
  NecessityModel(std::vector<std::string> variables, std::vector<Rational> pi);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Rational>& pi() const { return pi_; }

 private:
  std::vector<std::string> variables_;
  std::vector<Rational> pi_;
};

// 1 - max{pi(w) : w falsifies c}, with max over no worlds = 0.
Rational NecOf(const NecessityModel& model, const Crisp& c);

// e(f(phi)) = N(phi) for each body.
Evaluation InducedNecEval(const NecessityModel& model,
                          const std::set<Crisp>& bodies);

// Checks every FPS1-FPS4 instance whose metavariables range over `bodies`
// (FPS3 always). Throws UnboundAtomError when `e` lacks an atom of
// FpClosure(bodies) or f(false).
ValidationReport ValidateFpsEvaluation(const Evaluation& e,
                                       const std::set<Crisp>& bodies);

// inf of N(target) over necessity models of a theory whose axioms all have
// the form f(psi) >= alpha: the largest alpha whose level cut entails
// target. Throws UnsupportedError for other axiom shapes or modes,
// LimitError from entailment, and InfeasibleError when a positive level
// cut is classically inconsistent.
Rational FpsTruthDegree(const GradedTheory& theory, const Crisp& target,
                        int entailment_limit = kDefaultEntailmentLimit);

// From (f(a | b), r) and (f(!a | c), s) derive (f(b | c), min(r, s)).
// Disjunctions are flattened; the first complementary pair of disjuncts
// (up to one leading negation) is resolved. Throws UnsupportedError when
// no pair is complementary or an input is not a graded fuzzy atom.
GradedFormula ResolutionStep(const GradedFormula& c1, const GradedFormula& c2);

}  // namespace pavelka

#endif  // PAVELKA_NECENGINE_H_
