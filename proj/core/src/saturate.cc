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

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "pavelka/errors.h"
#include "pavelka/kernel.h"

namespace pavelka {

std::map<Fuzzy, Rational> SaturationResult::Derived() const {
  std::map<Fuzzy, Rational> out;
  for (const auto& [f, idx] : best_) out.emplace(f, log_[idx - 1].degree);
  return out;
}

std::optional<Rational> SaturationResult::DegreeOf(const Fuzzy& f) const {
  auto it = best_.find(f);
  if (it == best_.end()) return std::nullopt;
  return log_[it->second - 1].degree;
}

namespace {

std::vector<std::size_t> Premises(const Justification& just) {
  if (const auto* m = std::get_if<ModusPonensJust>(&just)) {
    return {m->antecedent, m->implication};
  }
  if (const auto* t = std::get_if<TruthConstJust>(&just)) return {t->premise};
  return {};
}

}  // namespace

Proof SaturationResult::ReplayProof(const Fuzzy& f) const {
  auto it = best_.find(f);
  if (it == best_.end()) {
    throw std::out_of_range("formula was not derived");
  }
  std::set<std::size_t> needed;
  std::vector<std::size_t> stack = {it->second};
  while (!stack.empty()) {
    std::size_t idx = stack.back();
    stack.pop_back();
    if (!needed.insert(idx).second) continue;
    for (std::size_t p : Premises(log_[idx - 1].just)) stack.push_back(p);
  }
  std::map<std::size_t, std::size_t> renumber;
  Proof proof;
  for (std::size_t idx : needed) {
    ProofStep step = log_[idx - 1];
    if (auto* m = std::get_if<ModusPonensJust>(&step.just)) {
      m->antecedent = renumber.at(m->antecedent);
      m->implication = renumber.at(m->implication);
    } else if (auto* t = std::get_if<TruthConstJust>(&step.just)) {
      t->premise = renumber.at(t->premise);
    }
    proof.steps.push_back(std::move(step));
    renumber[idx] = proof.steps.size();
  }
  return proof;
}

class Saturator {
 public:
  Saturator(const GradedTheory& theory, const SaturateOptions& options,
            std::span<const Fuzzy> seeds)
      : theory_(theory), options_(options), seeds_(seeds) {}

  SaturationResult Run() {
    try {
      BuildUniverse();
      for (const auto& [axiom, degree] : theory_.axioms()) {
        Add(axiom, degree, TheoryAxiomJust{});
      }
      for (const Fuzzy& seed : seeds_) {
        if (auto m = MatchAxiom(seed, theory_.mode())) {
          Add(seed, m->degree, AxiomJust{m->schema});
        }
      }
      if (Probabilistic()) {
        Add(Fuzzy::Atom(Crisp::True()), Rational(1),
            AxiomJust{Schema::kFP1Prime});
      }
      while (!queue_.empty()) {
        std::size_t idx = queue_.front();
        queue_.pop_front();
        Process(idx);
      }
    } catch (const Exhausted&) {
      result_.truncated_ = true;
    }
    return std::move(result_);
  }

 private:
  struct Exhausted {};

  bool Probabilistic() const {
    return theory_.mode() == LogicMode::kFP ||
           theory_.mode() == LogicMode::kFPPlus;
  }
  bool Possibilistic() const { return theory_.mode() == LogicMode::kFPS; }

  const ProofStep& At(std::size_t idx) const { return result_.log_[idx - 1]; }

  // Records (f, degree) unless an equal or better step exists. Returns the
  // index of the best step for f, or 0 if there is none.
  std::size_t Add(const Fuzzy& f, const Rational& degree, Justification just) {
    auto it = result_.best_.find(f);
    if (it != result_.best_.end() && At(it->second).degree >= degree) {
      return it->second;
    }
    if (degree.is_zero()) return it == result_.best_.end() ? 0 : it->second;
    if (f.contains_product() && !AllowsProduct(theory_.mode())) return 0;
    if (result_.log_.size() >= options_.max_steps) throw Exhausted{};
    result_.log_.push_back({f, degree, std::move(just)});
    std::size_t idx = result_.log_.size();
    result_.best_[f] = idx;
    queue_.push_back(idx);
    return idx;
  }

  std::size_t Best(const Fuzzy& f) const {
    auto it = result_.best_.find(f);
    return it == result_.best_.end() ? 0 : it->second;
  }

  void ModusPonens(std::size_t ante, std::size_t impl) {
    Add(At(impl).formula.rhs(),
        luk::StrongConj(At(ante).degree, At(impl).degree),
        ModusPonensJust{ante, impl});
  }

  // Derives `conclusion` from step `idx` through the tautology
  // (step formula) -> conclusion.
  void Weaken(std::size_t idx, const Fuzzy& conclusion) {
    std::size_t t = Add(Fuzzy::Impl(At(idx).formula, conclusion), Rational(1),
                        TautologyJust{});
    if (t) ModusPonens(idx, t);
  }

  void Process(std::size_t idx) {
    if (Best(At(idx).formula) != idx) return;  // superseded
    const Fuzzy f = At(idx).formula;
    using K = Fuzzy::Kind;

    auto users = implications_.find(f);
    if (users != implications_.end()) {
      std::vector<Fuzzy> impls = users->second;
      for (const Fuzzy& impl : impls) {
        if (std::size_t j = Best(impl)) ModusPonens(Best(f), j);
      }
    }
    switch (f.kind()) {
      case K::kImpl: {
        auto& list = implications_[f.lhs()];
        if (std::find(list.begin(), list.end(), f) == list.end()) {
          list.push_back(f);
        }
        if (std::size_t a = Best(f.lhs())) ModusPonens(a, idx);
        break;
      }
      case K::kEquiv:
        Weaken(idx, Fuzzy::Impl(f.lhs(), f.rhs()));
        Weaken(Best(f), Fuzzy::Impl(f.rhs(), f.lhs()));
        break;
      case K::kMinConj:
      case K::kStrongConj:
        Weaken(idx, f.lhs());
        Weaken(Best(f), f.rhs());
        break;
      case K::kAtom:
        ProcessAtom(f.body());
        break;
      default:
        break;
    }
  }

  void ProcessAtom(const Crisp& body) {
    const Fuzzy atom = Fuzzy::Atom(body);
    if (Probabilistic()) {
      for (const Crisp& other : universe_) {
        if (other == body || other.kind() == Crisp::Kind::kTrue) continue;
        if (Implies(body, other)) {
          Add(Fuzzy::Impl(atom, Fuzzy::Atom(other)), Rational(1),
              AxiomJust{Schema::kFP2Prime});
        }
      }
      if (body.kind() == Crisp::Kind::kNot) {
        Add(Fuzzy::Equiv(atom, Fuzzy::Neg(Fuzzy::Atom(body.operand()))),
            Rational(1), AxiomJust{Schema::kFP3});
      }
    }
    if (Possibilistic()) {
      for (const Crisp& other : universe_) {
        std::size_t j = Best(Fuzzy::Atom(other));
        if (!j || other == body) continue;
        for (int order = 0; order < 2; ++order) {
          Crisp a = order ? other : body;
          Crisp b = order ? body : other;
          Crisp both = Crisp::And(a, b);
          if (!universe_set_.contains(both)) continue;
          Fuzzy fa = Fuzzy::Atom(a);
          Fuzzy fb = Fuzzy::Atom(b);
          Add(Fuzzy::Equiv(Fuzzy::MinConj(fa, fb), Fuzzy::Atom(both)),
              Rational(1), AxiomJust{Schema::kFPS4});
          MinIntro(fa, fb);
        }
      }
    }
  }

  // From (A, r) and (B, s) derive (A /\ B, min(r, s)) via truth constants.
  void MinIntro(const Fuzzy& a, const Fuzzy& b) {
    std::size_t ia = Best(a);
    std::size_t ib = Best(b);
    if (!ia || !ib) return;
    Rational c = min(At(ia).degree, At(ib).degree);
    Fuzzy k = Fuzzy::Const(c);
    Fuzzy both = Fuzzy::MinConj(a, b);
    if (auto d = Best(both); d && At(d).degree >= c) return;
    Fuzzy ka = Fuzzy::Impl(k, a);
    Fuzzy kb = Fuzzy::Impl(k, b);
    Fuzzy kboth = Fuzzy::Impl(k, both);
    Add(ka, luk::Impl(c, At(ia).degree), TruthConstJust{ia, c});
    Add(kb, luk::Impl(c, At(ib).degree), TruthConstJust{ib, c});
    Add(Fuzzy::Impl(ka, Fuzzy::Impl(kb, kboth)), Rational(1),
        TautologyJust{});
    Add(k, c, AxiomJust{Schema::kBookConst});
  }

  bool Implies(const Crisp& a, const Crisp& b) {
    auto key = std::make_pair(a, b);
    auto it = entails_.find(key);
    if (it != entails_.end()) return it->second;
    bool value = false;
    try {
      value = IsTautology(Crisp::Implies(a, b), options_.entailment_limit);
    } catch (const LimitError&) {
      value = false;
    }
    entails_.emplace(std::move(key), value);
    return value;
  }

  static void Subformulas(const Crisp& c, std::set<Crisp>& out) {
    if (!out.insert(c).second) return;
    if (c.kind() == Crisp::Kind::kNot) {
      Subformulas(c.operand(), out);
    } else if (c.is_binary()) {
      Subformulas(c.lhs(), out);
      Subformulas(c.rhs(), out);
    }
  }

  void BuildUniverse() {
    AtomSet atoms;
    for (const auto& [axiom, degree] : theory_.axioms()) {
      CollectAtoms(axiom, atoms);
    }
    for (const Fuzzy& seed : seeds_) CollectAtoms(seed, atoms);
    std::set<Crisp> base;
    for (const Crisp& body : atoms.bodies) Subformulas(body, base);
    base.insert(Crisp::True());
    auto push = [&](const Crisp& c) {
      if (universe_set_.insert(c).second) universe_.push_back(c);
    };
    for (const Crisp& c : base) push(c);
    std::vector<Crisp> combos;
    for (const Crisp& a : base) combos.push_back(Crisp::Not(a));
    for (const Crisp& a : base) {
      for (const Crisp& b : base) {
        if (a == b) continue;
        combos.push_back(Crisp::And(a, b));
        combos.push_back(Crisp::Or(a, b));
      }
    }
    for (const Crisp& c : combos) {
      if (universe_.size() >= options_.max_bodies) break;
      push(c);
    }
  }

  const GradedTheory& theory_;
  const SaturateOptions& options_;
  std::span<const Fuzzy> seeds_;
  SaturationResult result_;
  std::deque<std::size_t> queue_;
  std::map<Fuzzy, std::vector<Fuzzy>> implications_;
  std::vector<Crisp> universe_;
  std::set<Crisp> universe_set_;
  std::map<std::pair<Crisp, Crisp>, bool> entails_;
};

SaturationResult Saturate(const GradedTheory& theory,
                          const SaturateOptions& options,
                          std::span<const Fuzzy> seeds) {
  if (options.max_steps == 0) {
    throw std::invalid_argument("saturation budget must be positive");
  }
  return Saturator(theory, options, seeds).Run();
}

}  // namespace pavelka
