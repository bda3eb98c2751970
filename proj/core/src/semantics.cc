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

#include "pavelka/semantics.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pavelka/errors.h"
#include "pavelka/syntax.h"

namespace pavelka {

namespace luk {

Rational Neg(const Rational& x) { return Rational(1) - x; }

Rational Impl(const Rational& x, const Rational& y) {
  return min(Rational(1), Rational(1) - x + y);
}

Rational StrongConj(const Rational& x, const Rational& y) {
  return max(Rational(0), x + y - Rational(1));
}

Rational StrongDisj(const Rational& x, const Rational& y) {
  return min(Rational(1), x + y);
}

Rational Equiv(const Rational& x, const Rational& y) {
  return min(Rational(1) - x + y, Rational(1) - y + x);
}

}  // namespace luk

void Evaluation::SetVar(const std::string& name, const Rational& value) {
  if (!value.is_degree()) {
    throw std::invalid_argument("value for " + name + " outside [0,1]");
  }
  fuzzy_vars[name] = value;
}

void Evaluation::SetAtom(const Crisp& body, const Rational& value) {
  if (!value.is_degree()) {
    throw std::invalid_argument("value for f(" + Print(body) +
                                ") outside [0,1]");
  }
  atom_values[body] = value;
}

Rational Eval(const Evaluation& e, const Fuzzy& f) {
  using K = Fuzzy::Kind;
  switch (f.kind()) {
    case K::kVar: {
      auto it = e.fuzzy_vars.find(f.name());
      if (it == e.fuzzy_vars.end()) {
        throw UnboundAtomError("no value for fuzzy variable " + f.name());
      }
      return it->second;
    }
    case K::kAtom: {
      auto it = e.atom_values.find(f.body());
      if (it == e.atom_values.end()) {
        throw UnboundAtomError("no value for atom " + Print(f));
      }
      return it->second;
    }
    case K::kConst:
      return f.value();
    case K::kNeg:
      return luk::Neg(Eval(e, f.operand()));
    default:
      break;
  }
  Rational x = Eval(e, f.lhs());
  Rational y = Eval(e, f.rhs());
  switch (f.kind()) {
    case K::kImpl:
      return luk::Impl(x, y);
    case K::kStrongConj:
      return luk::StrongConj(x, y);
    case K::kStrongDisj:
      return luk::StrongDisj(x, y);
    case K::kMaxDisj:
      return max(x, y);
    case K::kMinConj:
      return min(x, y);
    case K::kEquiv:
      return luk::Equiv(x, y);
    case K::kProdConj:
      return x * y;
    default:
      throw std::logic_error("unreachable fuzzy kind");
  }
}

bool IsModel(const Evaluation& e, const GradedTheory& theory) {
  for (const auto& [formula, degree] : theory.axioms()) {
    if (Eval(e, formula) < degree) return false;
  }
  return true;
}

bool EvalCrisp(const Crisp& c, const std::map<std::string, bool>& assignment) {
  switch (c.kind()) {
    case Crisp::Kind::kVar: {
      auto it = assignment.find(c.name());
      if (it == assignment.end()) {
        throw UnboundAtomError("no truth value for variable " + c.name());
      }
      return it->second;
    }
    case Crisp::Kind::kTrue:
      return true;
    case Crisp::Kind::kFalse:
      return false;
    case Crisp::Kind::kNot:
      return !EvalCrisp(c.operand(), assignment);
    case Crisp::Kind::kAnd:
      return EvalCrisp(c.lhs(), assignment) && EvalCrisp(c.rhs(), assignment);
    case Crisp::Kind::kOr:
      return EvalCrisp(c.lhs(), assignment) || EvalCrisp(c.rhs(), assignment);
    case Crisp::Kind::kImplies:
      return !EvalCrisp(c.lhs(), assignment) || EvalCrisp(c.rhs(), assignment);
    case Crisp::Kind::kIff:
      return EvalCrisp(c.lhs(), assignment) == EvalCrisp(c.rhs(), assignment);
  }
  return false;
}

namespace {

// Bit-parallel truth table over 2^n worlds.
class Table {
 public:
  explicit Table(std::size_t vars)
      : bits_(std::size_t{1} << vars),
        words_(std::max<std::size_t>(1, bits_ / 64), 0) {}

  static Table Constant(std::size_t vars, bool value) {
    Table t(vars);
    if (value) t.Fill();
    return t;
  }

  static Table Variable(std::size_t vars, std::size_t index) {
    Table t(vars);
    for (std::size_t w = 0; w < t.bits_; ++w) {
      if ((w >> index) & 1) t.words_[w / 64] |= std::uint64_t{1} << (w % 64);
    }
    return t;
  }

  void Fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    Trim();
  }
  void Invert() {
    for (auto& w : words_) w = ~w;
    Trim();
  }
  void And(const Table& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void Or(const Table& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  void Xnor(const Table& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] = ~(words_[i] ^ o.words_[i]);
    }
    Trim();
  }
  bool Any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }
  bool Test(std::size_t world) const {
    return (words_[world / 64] >> (world % 64)) & 1;
  }
  std::uint64_t FirstWord() const { return words_[0]; }

 private:
  void Trim() {
    if (bits_ < 64) words_[0] &= (std::uint64_t{1} << bits_) - 1;
  }

  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

Table Tabulate(const Crisp& c, const std::vector<std::string>& vars) {
  switch (c.kind()) {
    case Crisp::Kind::kVar: {
      auto it = std::find(vars.begin(), vars.end(), c.name());
      if (it == vars.end()) {
        throw UnboundAtomError("variable " + c.name() +
                               " is outside the world variables");
      }
      return Table::Variable(vars.size(),
                             static_cast<std::size_t>(it - vars.begin()));
    }
    case Crisp::Kind::kTrue:
      return Table::Constant(vars.size(), true);
    case Crisp::Kind::kFalse:
      return Table::Constant(vars.size(), false);
    case Crisp::Kind::kNot: {
      Table t = Tabulate(c.operand(), vars);
      t.Invert();
      return t;
    }
    default:
      break;
  }
  Table a = Tabulate(c.lhs(), vars);
  Table b = Tabulate(c.rhs(), vars);
  switch (c.kind()) {
    case Crisp::Kind::kAnd:
      a.And(b);
      return a;
    case Crisp::Kind::kOr:
      a.Or(b);
      return a;
    case Crisp::Kind::kImplies:
      a.Invert();
      a.Or(b);
      return a;
    default:
      a.Xnor(b);
      return a;
  }
}

}  // namespace

bool Entails(std::span<const Crisp> premises, const Crisp& goal,
             int variable_limit) {
  std::set<std::string> names = goal.variables();
  for (const Crisp& p : premises) {
    for (auto& v : p.variables()) names.insert(v);
  }
  if (static_cast<int>(names.size()) > variable_limit) {
    throw LimitError("entailment check over " + std::to_string(names.size()) +
                     " variables exceeds the limit of " +
                     std::to_string(variable_limit));
  }
  std::vector<std::string> vars(names.begin(), names.end());
  // Countermodels: premises hold and goal fails.
  Table counter = Tabulate(goal, vars);
  counter.Invert();
  for (const Crisp& p : premises) counter.And(Tabulate(p, vars));
  return !counter.Any();
}

bool IsTautology(const Crisp& c, int variable_limit) {
  return Entails({}, c, variable_limit);
}

std::uint64_t TruthMask(const Crisp& c,
                        const std::vector<std::string>& variables) {
  if (variables.size() > 6) {
    throw LimitError("truth masks support at most 6 variables");
  }
  return Tabulate(c, variables).FirstWord();
}

std::vector<bool> WorldTable(const Crisp& c,
                             const std::vector<std::string>& variables) {
  Table t = Tabulate(c, variables);
  std::size_t n = std::size_t{1} << variables.size();
  std::vector<bool> out(n);
  for (std::size_t w = 0; w < n; ++w) out[w] = t.Test(w);
  return out;
}

}  // namespace pavelka
