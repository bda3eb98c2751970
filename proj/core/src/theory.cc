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

#include "pavelka/theory.h"

#include <stdexcept>
#include <string>

#include "pavelka/errors.h"

namespace pavelka {

std::string_view ModeName(LogicMode mode) {
  switch (mode) {
    case LogicMode::kRPL:
      return "RPL";
    case LogicMode::kRPLPlus:
      return "RPL+";
    case LogicMode::kFP:
      return "FP";
    case LogicMode::kFPPlus:
      return "FP+";
    case LogicMode::kFPS:
      return "FPS";
  }
  return "?";
}

std::optional<LogicMode> ParseModeName(std::string_view name) {
  for (LogicMode m : {LogicMode::kRPL, LogicMode::kRPLPlus, LogicMode::kFP,
                      LogicMode::kFPPlus, LogicMode::kFPS}) {
    if (ModeName(m) == name) return m;
  }
  return std::nullopt;
}

bool AllowsProduct(LogicMode mode) {
  return mode == LogicMode::kRPLPlus || mode == LogicMode::kFPPlus;
}

bool IsAtomMode(LogicMode mode) {
  return mode == LogicMode::kFP || mode == LogicMode::kFPPlus ||
         mode == LogicMode::kFPS;
}

void GradedTheory::Add(const Fuzzy& formula, const Rational& degree) {
  if (!degree.is_degree()) {
    throw std::invalid_argument("axiom degree outside [0,1]: " + degree.str());
  }
  if (formula.contains_product() && !AllowsProduct(mode_)) {
    throw UnsupportedError("product conjunction is not admissible in mode " +
                           std::string(ModeName(mode_)));
  }
  if (degree.is_zero()) return;
  auto [it, inserted] = axioms_.emplace(formula, degree);
  if (!inserted && it->second < degree) it->second = degree;
}

void GradedTheory::set_mode(LogicMode mode) {
  if (!AllowsProduct(mode)) {
    for (const auto& [f, d] : axioms_) {
      if (f.contains_product()) {
        throw UnsupportedError(
            "product conjunction is not admissible in mode " +
            std::string(ModeName(mode)));
      }
    }
  }
  mode_ = mode;
}

Rational GradedTheory::DegreeOf(const Fuzzy& formula) const {
  auto it = axioms_.find(formula);
  return it == axioms_.end() ? Rational(0) : it->second;
}

}  // namespace pavelka
