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

#include "pavelka/necengine.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pavelka/errors.h"
#include "pavelka/kernel.h"
#include "pavelka/syntax.h"

namespace pavelka {

NecessityModel::NecessityModel(std::vector<std::string> variables,
                               std::vector<Rational> pi)
    : variables_(std::move(variables)), pi_(std::move(pi)) {
  if (variables_.size() > 30) {
    throw std::invalid_argument("too many world variables");
  }
  if (pi_.size() != (std::size_t{1} << variables_.size())) {
    throw std::invalid_argument("need one possibility per world");
  }
  Rational top(0);
  for (const Rational& p : pi_) {
    if (!p.is_degree()) throw std::invalid_argument("possibility outside [0,1]");
    top = max(top, p);
  }
  if (top != Rational(1)) {
    throw std::invalid_argument("possibility distribution is not normalized");
  }
}

Rational NecOf(const NecessityModel& model, const Crisp& c) {
  std::vector<bool> table = WorldTable(c, model.variables());
  Rational worst(0);
  for (std::size_t w = 0; w < table.size(); ++w) {
    if (!table[w]) worst = max(worst, model.pi()[w]);
  }
  return Rational(1) - worst;
}

Evaluation InducedNecEval(const NecessityModel& model,
                          const std::set<Crisp>& bodies) {
  Evaluation e;
  for (const Crisp& body : bodies) e.atom_values[body] = NecOf(model, body);
  return e;
}

ValidationReport ValidateFpsEvaluation(const Evaluation& e,
                                       const std::set<Crisp>& bodies) {
  ValidationReport report;
  auto check = [&](std::string_view schema, const Fuzzy& instance) {
    Rational v = Eval(e, instance);
    if (v == Rational(1)) return true;
    report.ok = false;
    report.schema = std::string(schema);
    report.instance = Print(instance);
    report.value = v;
    return false;
  };
  auto f = [](const Crisp& c) { return Fuzzy::Atom(c); };

  if (!check("FPS3", Fuzzy::Neg(f(Crisp::False())))) return report;
  for (const Crisp& a : bodies) {
    if (MatchSchema(f(a), Schema::kFPS1) && !check("FPS1", f(a))) {
      return report;
    }
  }
  for (const Crisp& a : bodies) {
    for (const Crisp& b : bodies) {
      if (!check("FPS2", Fuzzy::Impl(f(Crisp::Implies(a, b)),
                                     Fuzzy::Impl(f(a), f(b))))) {
        return report;
      }
      if (!check("FPS4", Fuzzy::Equiv(Fuzzy::MinConj(f(a), f(b)),
                                      f(Crisp::And(a, b))))) {
        return report;
      }
    }
  }
  return report;
}

Rational FpsTruthDegree(const GradedTheory& theory, const Crisp& target,
                        int entailment_limit) {
  if (theory.mode() != LogicMode::kFPS) {
    throw UnsupportedError("necessity bounds need an FPS theory, got mode " +
                           std::string(ModeName(theory.mode())));
  }
  std::vector<std::pair<Rational, Crisp>> base;
  for (const auto& [axiom, degree] : theory.axioms()) {
    if (axiom.kind() != Fuzzy::Kind::kAtom) {
      throw UnsupportedError("axiom " + Print(axiom) +
                             " is not a graded fuzzy atom f(...)");
    }
    base.emplace_back(degree, axiom.body());
  }
  std::vector<Rational> levels;
  for (const auto& [degree, body] : base) levels.push_back(degree);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Crisp> cut;
  auto cut_at = [&](const Rational& alpha) {
    cut.clear();
    for (const auto& [degree, body] : base) {
      if (degree >= alpha) cut.push_back(body);
    }
  };
  // The lowest positive cut is the largest; it must be consistent.
  if (!levels.empty()) {
    cut_at(levels.front());
    if (Entails(cut, Crisp::False(), entailment_limit)) {
      throw InfeasibleError("the knowledge base is classically inconsistent");
    }
  }
  // Tautologies have necessity 1 in every model (the empty cut at level 1).
  if (Entails({}, target, entailment_limit)) return Rational(1);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    cut_at(*it);
    if (Entails(cut, target, entailment_limit)) return *it;
  }
  return Rational(0);
}

namespace {

void Disjuncts(const Crisp& c, std::vector<Crisp>& out) {
  if (c.kind() == Crisp::Kind::kOr) {
    Disjuncts(c.lhs(), out);
    Disjuncts(c.rhs(), out);
  } else {
    out.push_back(c);
  }
}

bool Complementary(const Crisp& a, const Crisp& b) {
  return (a.kind() == Crisp::Kind::kNot && a.operand() == b) ||
         (b.kind() == Crisp::Kind::kNot && b.operand() == a);
}

Crisp Rebuild(const std::vector<Crisp>& parts) {
  if (parts.empty()) return Crisp::False();
  Crisp out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Crisp::Or(out, parts[i]);
  return out;
}

}  // namespace

GradedFormula ResolutionStep(const GradedFormula& c1, const GradedFormula& c2) {
  if (c1.formula.kind() != Fuzzy::Kind::kAtom ||
      c2.formula.kind() != Fuzzy::Kind::kAtom) {
    throw UnsupportedError("resolution needs two graded atoms f(...)");
  }
  std::vector<Crisp> left;
  std::vector<Crisp> right;
  Disjuncts(c1.formula.body(), left);
  Disjuncts(c2.formula.body(), right);
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!Complementary(left[i], right[j])) continue;
      std::vector<Crisp> rest;
      for (std::size_t k = 0; k < left.size(); ++k) {
        if (k != i) rest.push_back(left[k]);
      }
      for (std::size_t k = 0; k < right.size(); ++k) {
        if (k != j) rest.push_back(right[k]);
      }
      return {Fuzzy::Atom(Rebuild(rest)), min(c1.degree, c2.degree)};
    }
  }
  throw UnsupportedError("no complementary pair of disjuncts in " +
                         Print(c1.formula) + " and " + Print(c2.formula));
}

}  // namespace pavelka
