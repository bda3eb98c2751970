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

// Lukasiewicz / product truth functions and two-valued entailment.

#ifndef PAVELKA_SEMANTICS_H_
#define PAVELKA_SEMANTICS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pavelka/crisp.h"
#include "pavelka/fuzzy.h"
#include "pavelka/rational.h"
#include "pavelka/theory.h"

namespace pavelka {

namespace luk {

Rational Neg(const Rational& x);
Rational Impl(const Rational& x, const Rational& y);
Rational StrongConj(const Rational& x, const Rational& y);
Rational StrongDisj(const Rational& x, const Rational& y);
Rational Equiv(const Rational& x, const Rational& y);

}  // namespace luk

// Values for fuzzy variables and fuzzy atoms, all in [0,1].
struct Evaluation {
  std::map<std::string, Rational> fuzzy_vars;
  std::map<Crisp, Rational> atom_values;

  // Throws std::invalid_argument for values outside [0,1].
  void SetVar(const std::string& name, const Rational& value);
  void SetAtom(const Crisp& body, const Rational& value);
};

// Throws UnboundAtomError if an atom of `f` has no value.
Rational Eval(const Evaluation& e, const Fuzzy& f);

bool IsModel(const Evaluation& e, const GradedTheory& theory);

// Two-valued evaluation; `assignment` maps variable names to truth values.
bool EvalCrisp(const Crisp& c, const std::map<std::string, bool>& assignment);

inline constexpr int kDefaultEntailmentLimit = 20;

// True iff every assignment satisfying all premises satisfies `goal`. An
// empty premise set checks that `goal` is a tautology. Enumerates all
// assignments to the variables involved; throws LimitError above
// `variable_limit` variables.
bool Entails(std::span<const Crisp> premises, const Crisp& goal,
             int variable_limit = kDefaultEntailmentLimit);
bool IsTautology(const Crisp& c, int variable_limit = kDefaultEntailmentLimit);

// Truth table of `c` over `variables` (at most 6): bit w of the result is
// the value of `c` in world w, where bit i of w is variables[i].
// Throws LimitError for more than 6 variables or if `c` mentions a variable
// outside the list.
std::uint64_t TruthMask(const Crisp& c,
                        const std::vector<std::string>& variables);

// Evaluates `c` in every world over `variables`; world w assigns bit i of w
// to variables[i]. Throws UnboundAtomError for unknown variables.
std::vector<bool> WorldTable(const Crisp& c,
                             const std::vector<std::string>& variables);

}  // namespace pavelka

#endif  // PAVELKA_SEMANTICS_H_
