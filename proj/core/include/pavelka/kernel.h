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

// Axiom-schema recognition, graded proof checking and bounded forward
// chaining.

#ifndef PAVELKA_KERNEL_H_
#define PAVELKA_KERNEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pavelka/fuzzy.h"
#include "pavelka/proof.h"
#include "pavelka/semantics.h"
#include "pavelka/theory.h"

namespace pavelka {

// Whether `schema` is an axiom schema of the logic `mode`.
bool SchemaAllowed(Schema schema, LogicMode mode);

// Degree in which `f` is an instance of `schema` (1 for every schema except
// book-const), or nullopt. Side conditions needing entailment count as
// failures when they exceed `entailment_limit` variables.
std::optional<Rational> MatchSchema(
    const Fuzzy& f, Schema schema,
    int entailment_limit = kDefaultEntailmentLimit);

struct AxiomMatch {
  Schema schema;
  Rational degree;
};

// Highest-degree schema of `mode` that `f` instantiates; ties go to the
// earliest schema in declaration order.
std::optional<AxiomMatch> MatchAxiom(const Fuzzy& f, LogicMode mode);

struct CheckReport {
  bool accepted = false;
  std::optional<GradedFormula> conclusion;  // when accepted
  std::size_t failing_step = 0;             // 1-based, when rejected
  std::string reason;                       // when rejected
};

CheckReport CheckProof(const GradedTheory& theory, const Proof& proof);

struct SaturateOptions {
  // Total number of derivation steps recorded before giving up.
  std::size_t max_steps = 4000;
  // Cap on the crisp bodies used to instantiate schemas.
  std::size_t max_bodies = 48;
  int entailment_limit = kDefaultEntailmentLimit;
};

class SaturationResult {
 public:
  // Best degree found for each derived formula.
  std::map<Fuzzy, Rational> Derived() const;
  std::optional<Rational> DegreeOf(const Fuzzy& f) const;
  // A self-contained proof whose last step is (f, DegreeOf(f)).
  // Throws std::out_of_range if `f` was not derived.
  Proof ReplayProof(const Fuzzy& f) const;
  bool truncated() const { return truncated_; }
  std::size_t steps() const { return log_.size(); }

 private:
  friend class Saturator;
  std::vector<ProofStep> log_;  // references into log_ are 1-based
  std::map<Fuzzy, std::size_t> best_;
  bool truncated_ = false;
};

// Forward chaining from the theory axioms. Schemas are instantiated only
// over the crisp bodies of the theory and of `seeds`, closed under
// subformulas and extended by one-step negations, conjunctions and
// disjunctions. Deterministic; a larger budget yields a superset with
// degrees at least as high.
SaturationResult Saturate(const GradedTheory& theory,
                          const SaturateOptions& options = {},
                          std::span<const Fuzzy> seeds = {});

}  // namespace pavelka

#endif  // PAVELKA_KERNEL_H_
