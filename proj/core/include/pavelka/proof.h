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

// Graded proofs: numbered sequences of graded formulas with justifications.

#ifndef PAVELKA_PROOF_H_
#define PAVELKA_PROOF_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pavelka/fuzzy.h"
#include "pavelka/rational.h"

namespace pavelka {

enum class Schema {
  // Lukasiewicz axioms.
  kL1,  // a -> (b -> a)
  kL2,  // (a -> b) -> ((b -> c) -> (a -> c))
  kL3,  // (~a -> ~b) -> (b -> a)
  kL4,  // ((a -> b) -> b) -> ((b -> a) -> a)
  // Truth-constant bookkeeping.
  kBookConst,  // r, in degree r
  kBookNeg,    // ~r <-> (1-r)
  kBookImpl,   // (r -> s) <-> min(1, 1-r+s)
  kBookProd,   // (r * s) <-> r*s
  // Product monotonicity.
  kMonoL,  // (a -> b) -> ((a * c) -> (b * c))
  kMonoR,  // (a -> b) -> ((c * a) -> (c * b))
  // Probability.
  kFP1,
  kFP2,
  kFP3,
  kFP4,
  kFP1Prime,
  kFP2Prime,
  kFP4Prime,
  // Necessity.
  kFPS1,
  kFPS2,
  kFPS3,
  kFPS4,
};

// Proof-file tag, e.g. "L1", "book-neg", "FP2'".
std::string_view SchemaTag(Schema schema);
std::optional<Schema> ParseSchemaTag(std::string_view tag);
const std::vector<Schema>& AllSchemas();

struct AxiomJust {
  Schema schema;
};
// The step is an axiom of the theory ("hyp").
struct TheoryAxiomJust {};
// From step `antecedent` (phi, r) and step `implication` (phi -> psi, s)
// derive (psi, r & s). Indices are 1-based.
struct ModusPonensJust {
  std::size_t antecedent;
  std::size_t implication;
};
// From step `premise` (phi, s) derive (r -> phi, r -> s).
struct TruthConstJust {
  std::size_t premise;
  Rational constant;
};
// Degree bounded by the formula's truth degree over all evaluations of its
// atoms ("taut"). Sound and complete for the Lukasiewicz layer by Pavelka
// completeness; atoms are treated as independent variables.
struct TautologyJust {};

using Justification = std::variant<AxiomJust, TheoryAxiomJust, ModusPonensJust,
                                   TruthConstJust, TautologyJust>;

struct ProofStep {
  Fuzzy formula;
  Rational degree;
  Justification just;
};

struct Proof {
  std::vector<ProofStep> steps;
};

std::string JustificationText(const Justification& just);

}  // namespace pavelka

#endif  // PAVELKA_PROOF_H_
