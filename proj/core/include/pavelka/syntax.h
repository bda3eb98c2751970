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

// Concrete text syntax for formulas, theory files (.glt) and proof files
// (.glp).
//
// Fuzzy layer, loosest to tightest:
//   <->            non-associative
//   ->             right-associative
//   \/  |          max / strong disjunction; left-assoc, not mixable
//   /\  &  *       min / strong / product conjunction; left-assoc, not
//                  mixable
//   ~              negation
// Primaries: rational constants ("0.4", "2/5"), fuzzy variables, f(<crisp>)
// and parenthesized formulas.
//
// Crisp layer (inside f(...)): <->, ->, |, &, ! with classical meaning,
// plus the constants true and false.

#ifndef PAVELKA_SYNTAX_H_
#define PAVELKA_SYNTAX_H_

#include <string>
#include <string_view>

#include "pavelka/crisp.h"
#include "pavelka/errors.h"
#include "pavelka/fuzzy.h"
#include "pavelka/proof.h"
#include "pavelka/theory.h"

namespace pavelka {

struct ParseOptions {
  bool allow_product = true;
  // Accept identifiers starting with '$' (schema patterns only).
  bool allow_metavariables = false;
  // Reported spans are shifted by this much (for embedded formulas).
  SourceSpan origin{1, 1};
};

Fuzzy ParseFormula(std::string_view text, const ParseOptions& options = {});
Crisp ParseCrisp(std::string_view text, const ParseOptions& options = {});

std::string Print(const Fuzzy& f);
std::string Print(const Crisp& c);

GradedTheory ParseTheory(std::string_view text);
std::string PrintTheory(const GradedTheory& theory);

Proof ParseProof(std::string_view text);
std::string PrintProof(const Proof& proof);

}  // namespace pavelka

#endif  // PAVELKA_SYNTAX_H_
