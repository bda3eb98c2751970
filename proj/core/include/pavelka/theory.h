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

#ifndef PAVELKA_THEORY_H_
#define PAVELKA_THEORY_H_

#include <map>
#include <optional>
#include <string_view>

#include "pavelka/fuzzy.h"
#include "pavelka/rational.h"

namespace pavelka {

enum class LogicMode { kRPL, kRPLPlus, kFP, kFPPlus, kFPS };

std::string_view ModeName(LogicMode mode);
std::optional<LogicMode> ParseModeName(std::string_view name);

// Product conjunction is admissible only in the "+" modes.
bool AllowsProduct(LogicMode mode);
// FP, FP+ and FPS are theories over fuzzy atoms f(phi).
bool IsAtomMode(LogicMode mode);

// A finite fuzzy set of formulas. Degree-0 entries are dropped and repeated
// formulas keep their largest degree.
class GradedTheory {
 public:
  explicit GradedTheory(LogicMode mode) : mode_(mode) {}

  // Throws std::invalid_argument for degrees outside [0,1] and
  // UnsupportedError for product conjunction in a product-free mode.
  void Add(const Fuzzy& formula, const Rational& degree);

  LogicMode mode() const { return mode_; }
  void set_mode(LogicMode mode);
  const std::map<Fuzzy, Rational>& axioms() const { return axioms_; }
  bool empty() const { return axioms_.empty(); }
  std::size_t size() const { return axioms_.size(); }
  // 0 for formulas that are not axioms.
  Rational DegreeOf(const Fuzzy& formula) const;

 private:
  LogicMode mode_;
  std::map<Fuzzy, Rational> axioms_;
};

}  // namespace pavelka

#endif  // PAVELKA_THEORY_H_
