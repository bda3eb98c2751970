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

#include "pavelka/kernel.h"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pavelka/encoding.h"
#include "pavelka/errors.h"
#include "pavelka/syntax.h"

namespace pavelka {

namespace {

struct TagEntry {
  Schema schema;
  std::string_view tag;
};

constexpr std::array<TagEntry, 21> kTags = {{
    {Schema::kL1, "L1"},
    {Schema::kL2, "L2"},
    {Schema::kL3, "L3"},
    {Schema::kL4, "L4"},
    {Schema::kBookConst, "book-const"},
    {Schema::kBookNeg, "book-neg"},
    {Schema::kBookImpl, "book-impl"},
    {Schema::kBookProd, "book-prod"},
    {Schema::kMonoL, "mono-l"},
    {Schema::kMonoR, "mono-r"},
    {Schema::kFP1, "FP1"},
    {Schema::kFP2, "FP2"},
    {Schema::kFP3, "FP3"},
    {Schema::kFP4, "FP4"},
    {Schema::kFP1Prime, "FP1'"},
    {Schema::kFP2Prime, "FP2'"},
    {Schema::kFP4Prime, "FP4'"},
    {Schema::kFPS1, "FPS1"},
    {Schema::kFPS2, "FPS2"},
    {Schema::kFPS3, "FPS3"},
    {Schema::kFPS4, "FPS4"},
}};

// Metavariable bindings; fuzzy and crisp metavariables share one namespace
// of '$' names but live in separate maps.
struct Bindings {
  std::map<std::string, Fuzzy> fuzzy;
  std::map<std::string, Crisp> crisp;
};

bool IsMeta(const std::string& name) { return !name.empty() && name[0] == '$'; }

bool MatchCrisp(const Crisp& pat, const Crisp& t, Bindings& b) {
  if (pat.kind() == Crisp::Kind::kVar && IsMeta(pat.name())) {
    auto [it, inserted] = b.crisp.emplace(pat.name(), t);
    return inserted || it->second == t;
  }
  if (pat.kind() != t.kind()) return false;
  switch (pat.kind()) {
    case Crisp::Kind::kVar:
      return pat.name() == t.name();
    case Crisp::Kind::kTrue:
    case Crisp::Kind::kFalse:
      return true;
    case Crisp::Kind::kNot:
      return MatchCrisp(pat.operand(), t.operand(), b);
    default:
      return MatchCrisp(pat.lhs(), t.lhs(), b) &&
             MatchCrisp(pat.rhs(), t.rhs(), b);
  }
}

bool MatchFuzzy(const Fuzzy& pat, const Fuzzy& t, Bindings& b) {
  if (pat.kind() == Fuzzy::Kind::kVar && IsMeta(pat.name())) {
    auto [it, inserted] = b.fuzzy.emplace(pat.name(), t);
    return inserted || it->second == t;
  }
  if (pat.kind() != t.kind()) return false;
  switch (pat.kind()) {
    case Fuzzy::Kind::kVar:
      return pat.name() == t.name();
    case Fuzzy::Kind::kAtom:
      return MatchCrisp(pat.body(), t.body(), b);
    case Fuzzy::Kind::kConst:
      return pat.value() == t.value();
    case Fuzzy::Kind::kNeg:
      return MatchFuzzy(pat.operand(), t.operand(), b);
    default:
      return MatchFuzzy(pat.lhs(), t.lhs(), b) &&
             MatchFuzzy(pat.rhs(), t.rhs(), b);
  }
}

Fuzzy Pattern(std::string_view text) {
  ParseOptions options;
  options.allow_metavariables = true;
  return ParseFormula(text, options);
}

Crisp CrispPattern(std::string_view text) {
  ParseOptions options;
  options.allow_metavariables = true;
  return ParseCrisp(text, options);
}

struct Patterns {
  Fuzzy l1 = Pattern("$A -> ($B -> $A)");
  Fuzzy l2 = Pattern("($A -> $B) -> (($B -> $C) -> ($A -> $C))");
  Fuzzy l3 = Pattern("(~$A -> ~$B) -> ($B -> $A)");
  Fuzzy l4 = Pattern("(($A -> $B) -> $B) -> (($B -> $A) -> $A)");
  Fuzzy mono_l = Pattern("($A -> $B) -> (($A * $C) -> ($B * $C))");
  Fuzzy mono_r = Pattern("($A -> $B) -> (($C * $A) -> ($C * $B))");
  std::array<Crisp, 3> classical = {
      CrispPattern("$x -> ($y -> $x)"),
      CrispPattern("($x -> ($y -> $z)) -> (($x -> $y) -> ($x -> $z))"),
      CrispPattern("(!$x -> !$y) -> ($y -> $x)"),
  };
  Fuzzy fp2 = Pattern("f($x -> $y) -> (f($x) -> f($y))");
  Fuzzy fp3 = Pattern("f(!$x) <-> ~f($x)");
  Fuzzy fp4 = Pattern("f($x | $y) <-> ((f($x) -> f($x & $y)) -> f($y))");
  Fuzzy fp1_prime = Pattern("f(true)");
  Fuzzy fp4_prime = Pattern("(f($x | $y) -> f($x)) <-> (f($y) -> f($x & $y))");
  Fuzzy fps3 = Pattern("~f(false)");
  Fuzzy fps4 = Pattern("(f($x) /\\ f($y)) <-> f($x & $y)");
};

const Patterns& GetPatterns() {
  static const Patterns* patterns = new Patterns();
  return *patterns;
}

bool Instance(const Fuzzy& pat, const Fuzzy& f) {
  Bindings b;
  if (MatchFuzzy(pat, f, b)) return true;
  Bindings d;
  return MatchFuzzy(Desugar(pat), Desugar(f), d);
}

bool IsConst(const Fuzzy& f) { return f.kind() == Fuzzy::Kind::kConst; }

// Matches "lhs <-> t" or "t <-> lhs" where `side` accepts lhs and returns
// the value t must have.
template <typename Side>
bool BookkeepingEquiv(const Fuzzy& f, Side side) {
  if (f.kind() != Fuzzy::Kind::kEquiv) return false;
  for (int flip = 0; flip < 2; ++flip) {
    const Fuzzy& compound = flip ? f.rhs() : f.lhs();
    const Fuzzy& result = flip ? f.lhs() : f.rhs();
    if (!IsConst(result)) continue;
    std::optional<Rational> expected = side(compound);
    if (expected && *expected == result.value()) return true;
  }
  return false;
}

bool ClassicalAxiom(const Crisp& c) {
  for (const Crisp& pat : GetPatterns().classical) {
    Bindings b;
    if (MatchCrisp(pat, c, b)) return true;
  }
  return false;
}

bool MatchesShape(const Fuzzy& f, Schema schema, int entailment_limit) {
  const Patterns& p = GetPatterns();
  using K = Fuzzy::Kind;
  switch (schema) {
    case Schema::kL1:
      return Instance(p.l1, f);
    case Schema::kL2:
      return Instance(p.l2, f);
    case Schema::kL3:
      return Instance(p.l3, f);
    case Schema::kL4:
      return Instance(p.l4, f);
    case Schema::kBookConst:
      return IsConst(f);
    case Schema::kBookNeg:
      return BookkeepingEquiv(f, [](const Fuzzy& g) -> std::optional<Rational> {
        if (g.kind() != K::kNeg || !IsConst(g.operand())) return std::nullopt;
        return Rational(1) - g.operand().value();
      });
    case Schema::kBookImpl:
      return BookkeepingEquiv(f, [](const Fuzzy& g) -> std::optional<Rational> {
        if (g.kind() != K::kImpl || !IsConst(g.lhs()) || !IsConst(g.rhs())) {
          return std::nullopt;
        }
        return luk::Impl(g.lhs().value(), g.rhs().value());
      });
    case Schema::kBookProd:
      return BookkeepingEquiv(f, [](const Fuzzy& g) -> std::optional<Rational> {
        if (g.kind() != K::kProdConj || !IsConst(g.lhs()) ||
            !IsConst(g.rhs())) {
          return std::nullopt;
        }
        return g.lhs().value() * g.rhs().value();
      });
    case Schema::kMonoL:
      return Instance(p.mono_l, f);
    case Schema::kMonoR:
      return Instance(p.mono_r, f);
    case Schema::kFP1:
    case Schema::kFPS1:
      return f.kind() == K::kAtom && ClassicalAxiom(f.body());
    case Schema::kFP2:
    case Schema::kFPS2:
      return Instance(p.fp2, f);
    case Schema::kFP3:
      return Instance(p.fp3, f);
    case Schema::kFP4:
      return Instance(p.fp4, f);
    case Schema::kFP1Prime:
      return f == p.fp1_prime;
    case Schema::kFP2Prime: {
      if (f.kind() != K::kImpl || f.lhs().kind() != K::kAtom ||
          f.rhs().kind() != K::kAtom) {
        return false;
      }
      try {
        return IsTautology(Crisp::Implies(f.lhs().body(), f.rhs().body()),
                           entailment_limit);
      } catch (const LimitError&) {
        return false;
      }
    }
    case Schema::kFP4Prime:
      return Instance(p.fp4_prime, f);
    case Schema::kFPS3:
      return Instance(p.fps3, f);
    case Schema::kFPS4:
      return Instance(p.fps4, f);
  }
  return false;
}

}  // namespace

std::string_view SchemaTag(Schema schema) {
  for (const TagEntry& e : kTags) {
    if (e.schema == schema) return e.tag;
  }
  throw std::logic_error("unknown schema");
}

std::optional<Schema> ParseSchemaTag(std::string_view tag) {
  for (const TagEntry& e : kTags) {
    if (e.tag == tag) return e.schema;
  }
  return std::nullopt;
}

const std::vector<Schema>& AllSchemas() {
  static const std::vector<Schema>* all = [] {
    auto* v = new std::vector<Schema>;
    for (const TagEntry& e : kTags) v->push_back(e.schema);
    return v;
  }();
  return *all;
}

std::string JustificationText(const Justification& just) {
  struct Visitor {
    std::string operator()(const AxiomJust& a) const {
      return std::string(SchemaTag(a.schema));
    }
    std::string operator()(const TheoryAxiomJust&) const { return "hyp"; }
    std::string operator()(const ModusPonensJust& m) const {
      return "mp " + std::to_string(m.antecedent) + " " +
             std::to_string(m.implication);
    }
    std::string operator()(const TruthConstJust& t) const {
      return "tci " + std::to_string(t.premise) + " " +
             t.constant.compact_str();
    }
    std::string operator()(const TautologyJust&) const { return "taut"; }
  };
  return std::visit(Visitor{}, just);
}

bool SchemaAllowed(Schema schema, LogicMode mode) {
  switch (schema) {
    case Schema::kL1:
    case Schema::kL2:
    case Schema::kL3:
    case Schema::kL4:
    case Schema::kBookConst:
    case Schema::kBookNeg:
    case Schema::kBookImpl:
      return true;
    case Schema::kBookProd:
    case Schema::kMonoL:
    case Schema::kMonoR:
      return AllowsProduct(mode);
    case Schema::kFP1:
    case Schema::kFP2:
    case Schema::kFP3:
    case Schema::kFP4:
    case Schema::kFP1Prime:
    case Schema::kFP2Prime:
    case Schema::kFP4Prime:
      return mode == LogicMode::kFP || mode == LogicMode::kFPPlus;
    case Schema::kFPS1:
    case Schema::kFPS2:
    case Schema::kFPS3:
    case Schema::kFPS4:
      return mode == LogicMode::kFPS;
  }
  return false;
}

std::optional<Rational> MatchSchema(const Fuzzy& f, Schema schema,
                                    int entailment_limit) {
  if (!MatchesShape(f, schema, entailment_limit)) return std::nullopt;
  if (schema == Schema::kBookConst) return f.value();
  return Rational(1);
}

std::optional<AxiomMatch> MatchAxiom(const Fuzzy& f, LogicMode mode) {
  std::optional<AxiomMatch> best;
  for (Schema s : AllSchemas()) {
    if (!SchemaAllowed(s, mode)) continue;
    std::optional<Rational> d = MatchSchema(f, s);
    if (d && (!best || *d > best->degree)) best = AxiomMatch{s, *d};
  }
  return best;
}

CheckReport CheckProof(const GradedTheory& theory, const Proof& proof) {
  CheckReport report;
  auto fail = [&](std::size_t step, std::string reason) {
    report.accepted = false;
    report.failing_step = step;
    report.reason = std::move(reason);
    return report;
  };
  if (proof.steps.empty()) return fail(0, "empty proof");
  const LogicMode mode = theory.mode();
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const std::size_t n = i + 1;
    const ProofStep& step = proof.steps[i];
    if (!step.degree.is_degree()) return fail(n, "degree outside [0,1]");
    if (step.formula.contains_product() && !AllowsProduct(mode)) {
      return fail(n, "product conjunction is not available in mode " +
                         std::string(ModeName(mode)));
    }
    auto ref = [&](std::size_t k) -> const ProofStep* {
      if (k == 0 || k >= n) return nullptr;
      return &proof.steps[k - 1];
    };
    auto too_high = [&](const Rational& allowed) {
      return "claimed degree " + step.degree.compact_str() +
             " exceeds the justified " + allowed.compact_str();
    };

    if (const auto* a = std::get_if<AxiomJust>(&step.just)) {
      std::string tag(SchemaTag(a->schema));
      if (!SchemaAllowed(a->schema, mode)) {
        return fail(n, "schema " + tag + " is not an axiom of " +
                           std::string(ModeName(mode)));
      }
      std::optional<Rational> d = MatchSchema(step.formula, a->schema);
      if (!d) return fail(n, "formula is not an instance of " + tag);
      if (step.degree > *d) return fail(n, too_high(*d));
    } else if (std::holds_alternative<TheoryAxiomJust>(step.just)) {
      Rational d = theory.DegreeOf(step.formula);
      if (d.is_zero()) return fail(n, "formula is not an axiom of the theory");
      if (step.degree > d) return fail(n, too_high(d));
    } else if (const auto* m = std::get_if<ModusPonensJust>(&step.just)) {
      const ProofStep* ante = ref(m->antecedent);
      const ProofStep* impl = ref(m->implication);
      if (!ante || !impl) return fail(n, "reference to a later step");
      if (impl->formula.kind() != Fuzzy::Kind::kImpl ||
          !(impl->formula.lhs() == ante->formula) ||
          !(impl->formula.rhs() == step.formula)) {
        return fail(n, "step " + std::to_string(m->implication) +
                           " is not an implication from step " +
                           std::to_string(m->antecedent) + " to this formula");
      }
      Rational d = luk::StrongConj(ante->degree, impl->degree);
      if (step.degree > d) return fail(n, too_high(d));
    } else if (const auto* t = std::get_if<TruthConstJust>(&step.just)) {
      const ProofStep* prem = ref(t->premise);
      if (!prem) return fail(n, "reference to a later step");
      if (!t->constant.is_degree()) return fail(n, "constant outside [0,1]");
      if (!(step.formula ==
            Fuzzy::Impl(Fuzzy::Const(t->constant), prem->formula))) {
        return fail(n, "formula is not " + t->constant.compact_str() +
                           " -> (step " + std::to_string(t->premise) + ")");
      }
      Rational d = luk::Impl(t->constant, prem->degree);
      if (step.degree > d) return fail(n, too_high(d));
    } else {
      Rational d;
      try {
        d = FreeTruthDegree(step.formula);
      } catch (const Error& e) {
        return fail(n, std::string("cannot evaluate tautology degree: ") +
                           e.what());
      }
      if (step.degree > d) return fail(n, too_high(d));
    }
  }
  report.accepted = true;
  report.conclusion =
      GradedFormula{proof.steps.back().formula, proof.steps.back().degree};
  return report;
}

}  // namespace pavelka
