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

#include "pavelka/encoding.h"

#include <string>

#include "pavelka/errors.h"

namespace pavelka {

namespace {

// Every encoded expression lies in [-1, 2], so 2 dominates any gap between
// an inactive face and the value it bounds.
const Rational kBigM(2);

}  // namespace

LinExpr LukEncoder::Fresh() {
  return LinExpr::Var(program_.lp().AddVariable(
      "v" + std::to_string(counter_++), Rational(0), Rational(1)));
}

LinExpr LukEncoder::MinOf(const LinExpr& a, const LinExpr& b, Bound bound) {
  LinearProgram& lp = program_.lp();
  LinExpr v = Fresh();
  if (bound == Bound::kBelow) {
    lp.AddConstraint(v, Relation::kLessEqual, a);
    lp.AddConstraint(v, Relation::kLessEqual, b);
    return v;
  }
  LinExpr d = LinExpr::Var(program_.AddBinary("d" + std::to_string(counter_++)));
  // d = 0 selects a, d = 1 selects b.
  lp.AddConstraint(v, Relation::kGreaterEqual, a - kBigM * d);
  lp.AddConstraint(v, Relation::kGreaterEqual,
                   b - kBigM * (LinExpr(Rational(1)) - d));
  return v;
}

LinExpr LukEncoder::MaxOf(const LinExpr& a, const LinExpr& b, Bound bound) {
  LinearProgram& lp = program_.lp();
  LinExpr v = Fresh();
  if (bound == Bound::kAbove) {
    lp.AddConstraint(v, Relation::kGreaterEqual, a);
    lp.AddConstraint(v, Relation::kGreaterEqual, b);
    return v;
  }
  LinExpr d = LinExpr::Var(program_.AddBinary("d" + std::to_string(counter_++)));
  lp.AddConstraint(v, Relation::kLessEqual, a + kBigM * d);
  lp.AddConstraint(v, Relation::kLessEqual,
                   b + kBigM * (LinExpr(Rational(1)) - d));
  return v;
}

LinExpr LukEncoder::Encode(const Fuzzy& f, Bound bound) {
  using K = Fuzzy::Kind;
  if (f.is_closed()) return LinExpr(Eval(Evaluation{}, f));
  if (f.kind() == K::kVar || f.kind() == K::kAtom) return leaf_(f);
  auto key = std::make_pair(f, bound);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const LinExpr one(Rational(1));
  LinExpr out;
  switch (f.kind()) {
    case K::kNeg:
      out = one - Encode(f.operand(), Flip(bound));
      break;
    case K::kImpl:
      out = MinOf(one,
                  one - Encode(f.lhs(), Flip(bound)) + Encode(f.rhs(), bound),
                  bound);
      break;
    case K::kStrongConj:
      out = MaxOf(LinExpr(),
                  Encode(f.lhs(), bound) + Encode(f.rhs(), bound) - one,
                  bound);
      break;
    case K::kStrongDisj:
      out = MinOf(one, Encode(f.lhs(), bound) + Encode(f.rhs(), bound), bound);
      break;
    case K::kMaxDisj:
      out = MaxOf(Encode(f.lhs(), bound), Encode(f.rhs(), bound), bound);
      break;
    case K::kMinConj:
      out = MinOf(Encode(f.lhs(), bound), Encode(f.rhs(), bound), bound);
      break;
    case K::kEquiv:
      out = MinOf(
          one - Encode(f.lhs(), Flip(bound)) + Encode(f.rhs(), bound),
          one - Encode(f.rhs(), Flip(bound)) + Encode(f.lhs(), bound), bound);
      break;
    case K::kProdConj:
      if (f.lhs().is_closed()) {
        out = Eval(Evaluation{}, f.lhs()) * Encode(f.rhs(), bound);
      } else if (f.rhs().is_closed()) {
        out = Eval(Evaluation{}, f.rhs()) * Encode(f.lhs(), bound);
      } else {
        throw UnsupportedError(
            "product of two non-constant subformulas is not linear");
      }
      break;
    default:
      throw std::logic_error("unexpected leaf kind");
  }
  memo_.emplace(std::move(key), out);
  return out;
}

void LukEncoder::Require(const Fuzzy& f, const Rational& degree) {
  program_.lp().AddConstraint(Encode(f, Bound::kBelow),
                              Relation::kGreaterEqual, LinExpr(degree));
}

TruthDegree RplTruthDegree(const GradedTheory& theory, const Fuzzy& target,
                           const TruthDegreeOptions& options) {
  if (IsAtomMode(theory.mode())) {
    throw UnsupportedError("RPL truth degree needs an RPL theory, got mode " +
                           std::string(ModeName(theory.mode())));
  }
  AtomSet atoms = CollectAtoms(target);
  for (const auto& [axiom, degree] : theory.axioms()) {
    CollectAtoms(axiom, atoms);
  }
  if (!atoms.bodies.empty()) {
    throw UnsupportedError("fuzzy atoms f(...) are not RPL formulas");
  }
  MixedProgram program;
  std::map<std::string, int> index;
  for (const std::string& name : atoms.fuzzy_vars) {
    index[name] = program.lp().AddVariable(name, Rational(0), Rational(1));
  }
  LukEncoder encoder(program, [&](const Fuzzy& leaf) {
    return LinExpr::Var(index.at(leaf.name()));
  });
  for (const auto& [axiom, degree] : theory.axioms()) {
    encoder.Require(axiom, degree);
  }
  program.lp().SetObjective(encoder.Encode(target, Bound::kAbove),
                            Sense::kMinimize);
  LpResult result = SolveMilp(program, {options.max_binaries});
  if (result.status != LpStatus::kOptimal) {
    throw InfeasibleError("theory has no model");
  }
  TruthDegree out;
  for (const auto& [name, i] : index) {
    out.witness.fuzzy_vars[name] = result.assignment[i];
  }
  out.value = Eval(out.witness, target);
  return out;
}

Rational FreeTruthDegree(const Fuzzy& f, const TruthDegreeOptions& options) {
  if (f.is_closed()) return Eval(Evaluation{}, f);
  MixedProgram program;
  std::map<Fuzzy, int> index;
  LukEncoder encoder(program, [&](const Fuzzy& leaf) {
    auto it = index.find(leaf);
    if (it == index.end()) {
      it = index
               .emplace(leaf, program.lp().AddVariable("x", Rational(0),
                                                       Rational(1)))
               .first;
    }
    return LinExpr::Var(it->second);
  });
  program.lp().SetObjective(encoder.Encode(f, Bound::kAbove),
                            Sense::kMinimize);
  LpResult result = SolveMilp(program, {options.max_binaries});
  if (result.status != LpStatus::kOptimal) {
    throw std::logic_error("free truth degree program must be feasible");
  }
  return result.value;
}

}  // namespace pavelka
