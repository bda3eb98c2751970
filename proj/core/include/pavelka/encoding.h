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

// Mixed-integer encoding of Lukasiewicz formulas and the semantic truth
// degree of pure RPL formulas.

#ifndef PAVELKA_ENCODING_H_
#define PAVELKA_ENCODING_H_

#include <functional>
#include <map>
#include <utility>

#include "pavelka/fuzzy.h"
#include "pavelka/optimizer.h"
#include "pavelka/semantics.h"
#include "pavelka/theory.h"

namespace pavelka {

// Direction in which an encoded expression may deviate from the true value.
// kBelow: encoded <= true in every feasible completion (use for constraints
// of the form "value >= r"). kAbove: encoded >= true (use for minimized
// objectives). In both cases some completion makes them equal, so feasibility
// and optima are preserved. Binaries are introduced only where a min or max
// is bounded from the wrong side.
enum class Bound { kBelow, kAbove };

class LukEncoder {
 public:
  // `leaf` maps kVar and kAtom nodes to affine expressions in [0,1].
  using LeafFn = std::function<LinExpr(const Fuzzy&)>;

  LukEncoder(MixedProgram& program, LeafFn leaf)
      : program_(program), leaf_(std::move(leaf)) {}

  // Throws UnsupportedError for a product of two non-closed subformulas.
  LinExpr Encode(const Fuzzy& f, Bound bound);

  // Adds "f >= degree".
  void Require(const Fuzzy& f, const Rational& degree);

 private:
  LinExpr Fresh();
  LinExpr MinOf(const LinExpr& a, const LinExpr& b, Bound bound);
  LinExpr MaxOf(const LinExpr& a, const LinExpr& b, Bound bound);
  static Bound Flip(Bound b) {
    return b == Bound::kBelow ? Bound::kAbove : Bound::kBelow;
  }

  MixedProgram& program_;
  LeafFn leaf_;
  std::map<std::pair<Fuzzy, Bound>, LinExpr> memo_;
  int counter_ = 0;
};

struct TruthDegreeOptions {
  int max_binaries = kDefaultBinaryLimit;
};

struct TruthDegree {
  Rational value;
  Evaluation witness;  // a model of the theory attaining `value`
};

// inf { e(target) : e a model of `theory` } over evaluations of the fuzzy
// variables. Requires a theory without fuzzy atoms (mode RPL or RPL+).
// Throws UnsupportedError, LimitError, or InfeasibleError when the theory
// has no model.
TruthDegree RplTruthDegree(const GradedTheory& theory, const Fuzzy& target,
                           const TruthDegreeOptions& options = {});

// inf of e(f) over all evaluations, with fuzzy variables and fuzzy atoms
// ranging independently over [0,1].
Rational FreeTruthDegree(const Fuzzy& f,
                         const TruthDegreeOptions& options = {});

}  // namespace pavelka

#endif  // PAVELKA_ENCODING_H_
