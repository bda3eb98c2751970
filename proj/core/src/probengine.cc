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

#include "pavelka/probengine.h"

#include <stdexcept>
#include <utility>

#include "pavelka/encoding.h"
#include "pavelka/errors.h"
#include "pavelka/kernel.h"
#include "pavelka/syntax.h"

namespace pavelka {

ProbabilityModel::ProbabilityModel(std::vector<std::string> variables,
                                   std::vector<Rational> weights)
    : variables_(std::move(variables)), weights_(std::move(weights)) {
  if (variables_.size() > 30) {
    throw std::invalid_argument("too many world variables");
  }
  if (std::set<std::string>(variables_.begin(), variables_.end()).size() !=
      variables_.size()) {
    throw std::invalid_argument("duplicate world variable");
  }
  if (weights_.size() != (std::size_t{1} << variables_.size())) {
    throw std::invalid_argument("need one weight per world");
  }
  Rational total;
  for (const Rational& w : weights_) {
    if (w.sign() < 0) throw std::invalid_argument("negative world weight");
    total += w;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("world weights sum to " + total.str() +
                                ", not 1");
  }
}

ProbabilityModel ProbabilityModel::Uniform(std::vector<std::string> variables) {
  std::size_t n = std::size_t{1} << variables.size();
  std::vector<Rational> weights(n, Rational(1, static_cast<std::int64_t>(n)));
  return ProbabilityModel(std::move(variables), std::move(weights));
}

std::string WorldLabel(const std::vector<std::string>& variables,
                       std::size_t w) {
  if (variables.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i > 0) out += " & ";
    if (!((w >> i) & 1)) out += "!";
    out += variables[i];
  }
  return out;
}

std::string ProbabilityModel::WorldLabel(std::size_t w) const {
  return pavelka::WorldLabel(variables_, w);
}

Rational ProbOf(const ProbabilityModel& model, const Crisp& c) {
  std::vector<bool> table = WorldTable(c, model.variables());
  Rational sum;
  for (std::size_t w = 0; w < table.size(); ++w) {
    if (table[w]) sum += model.weights()[w];
  }
  return sum;
}

Evaluation InducedEval(const ProbabilityModel& model,
                       const std::set<Crisp>& bodies) {
  Evaluation e;
  for (const Crisp& body : bodies) e.atom_values[body] = ProbOf(model, body);
  return e;
}

std::set<Crisp> FpClosure(const std::set<Crisp>& bodies) {
  std::set<Crisp> out = bodies;
  out.insert(Crisp::True());
  for (const Crisp& a : bodies) {
    out.insert(Crisp::Not(a));
    for (const Crisp& b : bodies) {
      out.insert(Crisp::And(a, b));
      out.insert(Crisp::Or(a, b));
      out.insert(Crisp::Implies(a, b));
    }
  }
  return out;
}

ValidationReport ValidateFpEvaluation(const Evaluation& e,
                                      const std::set<Crisp>& bodies,
                                      int entailment_limit) {
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

  if (!check("FP1'", f(Crisp::True()))) return report;
  for (const Crisp& a : bodies) {
    if (MatchSchema(f(a), Schema::kFP1) && !check("FP1", f(a))) return report;
    if (!check("FP3", Fuzzy::Equiv(f(Crisp::Not(a)), Fuzzy::Neg(f(a))))) {
      return report;
    }
  }
  for (const Crisp& a : bodies) {
    for (const Crisp& b : bodies) {
      Fuzzy fp2_prime = Fuzzy::Impl(f(a), f(b));
      if (MatchSchema(fp2_prime, Schema::kFP2Prime, entailment_limit) &&
          !check("FP2'", fp2_prime)) {
        return report;
      }
      if (!check("FP2", Fuzzy::Impl(f(Crisp::Implies(a, b)),
                                    Fuzzy::Impl(f(a), f(b))))) {
        return report;
      }
      Fuzzy both = f(Crisp::And(a, b));
      Fuzzy either = f(Crisp::Or(a, b));
      if (!check("FP4",
                 Fuzzy::Equiv(either,
                              Fuzzy::Impl(Fuzzy::Impl(f(a), both), f(b))))) {
        return report;
      }
      if (!check("FP4'", Fuzzy::Equiv(Fuzzy::Impl(either, f(a)),
                                      Fuzzy::Impl(f(b), both)))) {
        return report;
      }
    }
  }
  return report;
}

namespace {

// World-weight program for a theory: one nonnegative weight per world,
// summing to 1, with every axiom imposed.
class WorldProgram {
 public:
  WorldProgram(const GradedTheory& theory,
               const std::vector<Fuzzy>& extra, const ProbOptions& options)
      : encoder_(program_, [this](const Fuzzy& leaf) {
          return Mass(leaf.body());
        }) {
    if (theory.mode() != LogicMode::kFP &&
        theory.mode() != LogicMode::kFPPlus) {
      throw UnsupportedError("probability bounds need an FP or FP+ theory, "
                             "got mode " + std::string(ModeName(theory.mode())));
    }
    AtomSet atoms;
    for (const auto& [axiom, degree] : theory.axioms()) {
      CollectAtoms(axiom, atoms);
    }
    for (const Fuzzy& f : extra) CollectAtoms(f, atoms);
    if (!atoms.fuzzy_vars.empty()) {
      throw UnsupportedError("plain fuzzy variable " +
                             *atoms.fuzzy_vars.begin() +
                             " has no probabilistic reading");
    }
    if (static_cast<int>(atoms.crisp_vars.size()) > options.max_variables) {
      throw LimitError(std::to_string(atoms.crisp_vars.size()) +
                       " crisp variables exceed the world limit of " +
                       std::to_string(options.max_variables));
    }
    max_binaries_ = options.max_binaries;
    vars_.assign(atoms.crisp_vars.begin(), atoms.crisp_vars.end());
    bodies_ = atoms.bodies;
    std::size_t n = std::size_t{1} << vars_.size();
    LinExpr total;
    for (std::size_t w = 0; w < n; ++w) {
      int idx = program_.lp().AddVariable("w" + std::to_string(w));
      weights_.push_back(idx);
      total += LinExpr::Var(idx);
    }
    program_.lp().AddConstraint(total, Relation::kEqual, LinExpr(Rational(1)));
    for (const auto& [axiom, degree] : theory.axioms()) {
      encoder_.Require(axiom, degree);
    }
  }

  LinExpr Mass(const Crisp& c) {
    std::vector<bool> table = WorldTable(c, vars_);
    LinExpr sum;
    for (std::size_t w = 0; w < table.size(); ++w) {
      if (table[w]) sum += LinExpr::Var(weights_[w]);
    }
    return sum;
  }

  LukEncoder& encoder() { return encoder_; }

  // Minimizes `objective`; throws InfeasibleError without a model.
  std::pair<Rational, ProbabilityModel> Minimize(const LinExpr& objective) {
    program_.lp().SetObjective(objective, Sense::kMinimize);
    LpResult r = SolveMilp(program_, {max_binaries_});
    if (r.status != LpStatus::kOptimal) {
      throw InfeasibleError("theory has no probability model");
    }
    std::vector<Rational> weights;
    for (int idx : weights_) weights.push_back(r.assignment[idx]);
    return {r.value, ProbabilityModel(vars_, std::move(weights))};
  }

  const std::set<Crisp>& bodies() const { return bodies_; }

 private:
  MixedProgram program_;
  LukEncoder encoder_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  std::set<Crisp> bodies_;
  int max_binaries_ = kDefaultBinaryLimit;
};

BoundReport Lower(const GradedTheory& theory, const Fuzzy& target,
                  const ProbOptions& options) {
  WorldProgram wp(theory, {target}, options);
  auto [value, model] =
      wp.Minimize(wp.encoder().Encode(target, Bound::kAbove));
  Rational attained = Eval(InducedEval(model, wp.bodies()), target);
  if (attained != value) {
    throw std::logic_error("witness does not attain the optimum");
  }
  BoundReport report;
  report.value = value;
  report.kind = BoundKind::kLower;
  report.exact = true;
  report.witness = std::move(model);
  return report;
}

}  // namespace

BoundReport FpTruthDegree(const GradedTheory& theory, const Fuzzy& target,
                          BoundKind kind, const ProbOptions& options) {
  if (kind == BoundKind::kLower) return Lower(theory, target, options);
  BoundReport report = Lower(theory, Fuzzy::Neg(target), options);
  report.value = Rational(1) - report.value;
  report.kind = BoundKind::kUpper;
  return report;
}

namespace {

void RequireProviso(const GradedTheory& theory, const Crisp& given,
                    const ProbOptions& options) {
  BoundReport g =
      FpTruthDegree(theory, Fuzzy::Atom(given), BoundKind::kLower, options);
  if (g.value.sign() <= 0) {
    throw ProvisoError("the theory does not bound P(" + Print(given) +
                       ") away from 0");
  }
}

// min over models of P(given & then) - alpha * P(given).
std::pair<Rational, ProbabilityModel> CondMinimum(
    const GradedTheory& theory, const Crisp& given, const Crisp& then,
    const Rational& alpha, const ProbOptions& options) {
  WorldProgram wp(theory, {Fuzzy::Atom(given), Fuzzy::Atom(then)}, options);
  LinExpr objective = wp.Mass(Crisp::And(given, then)) -
                      alpha * wp.Mass(given);
  return wp.Minimize(objective);
}

}  // namespace

bool CondCheck(const GradedTheory& theory, const Crisp& given,
               const Crisp& then, const Rational& alpha,
               const ProbOptions& options) {
  RequireProviso(theory, given, options);
  return CondMinimum(theory, given, then, alpha, options).first.sign() >= 0;
}

BoundReport CondLowerBound(const GradedTheory& theory, const Crisp& given,
                           const Crisp& then, const Rational& tol,
                           const ProbOptions& options) {
  if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be > 0");
  RequireProviso(theory, given, options);
  auto minimum = [&](const Rational& alpha) {
    return CondMinimum(theory, given, then, alpha, options);
  };
  Rational lo(0);
  Rational hi(1);
  auto [top, top_model] = minimum(hi);
  if (top.sign() >= 0) {
    return {Rational(1), BoundKind::kLower, true, std::move(top_model)};
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (minimum(mid).first.sign() >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  auto [at_lo, model] = minimum(lo);
  bool exact = at_lo.is_zero() && ProbOf(model, given).sign() > 0;
  BoundReport report{lo, BoundKind::kLower, exact, std::nullopt};
  if (exact) report.witness = std::move(model);
  return report;
}

bool CheckIndependence(const ProbabilityModel& model, const Crisp& a,
                       const Crisp& b, const Crisp& c) {
  auto holds = [&](const Crisp& k) {
    Rational lhs = ProbOf(model, Crisp::And(Crisp::And(a, b), k)) *
                   ProbOf(model, k);
    Rational rhs = ProbOf(model, Crisp::And(b, k)) *
                   ProbOf(model, Crisp::And(a, k));
    return lhs == rhs;
  };
  return holds(c) && holds(Crisp::Not(c));
}

}  // namespace pavelka
