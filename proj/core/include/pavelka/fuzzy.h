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

// Graded-logic formulas over fuzzy variables, fuzzy atoms f(phi) and
// rational truth constants.

#ifndef PAVELKA_FUZZY_H_
#define PAVELKA_FUZZY_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>

#include "pavelka/crisp.h"
#include "pavelka/rational.h"

namespace pavelka {

class Fuzzy {
 public:
  enum class Kind {
    kVar,         // plain fuzzy propositional variable
    kAtom,        // f(phi) for a crisp phi
    kConst,       // truth constant
    kNeg,         // 1 - x
    kImpl,        // min(1, 1 - x + y)
    kStrongConj,  // max(0, x + y - 1)
    kStrongDisj,  // min(1, x + y)
    kMaxDisj,     // max(x, y)
    kMinConj,     // min(x, y)
    kEquiv,       // min(1 - x + y, 1 - y + x)
    kProdConj,    // x * y
  };

  static Fuzzy Var(std::string name);
  static Fuzzy Atom(Crisp body);
  // Throws std::invalid_argument unless 0 <= value <= 1.
  static Fuzzy Const(Rational value);
  static Fuzzy Neg(Fuzzy operand);
  static Fuzzy Impl(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy StrongConj(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy StrongDisj(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy MaxDisj(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy MinConj(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy Equiv(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy ProdConj(Fuzzy lhs, Fuzzy rhs);
  static Fuzzy Binary(Kind kind, Fuzzy lhs, Fuzzy rhs);

  Kind kind() const;
  bool is_binary() const;
  const std::string& name() const;  // kVar
  const Crisp& body() const;        // kAtom
  const Rational& value() const;    // kConst
  const Fuzzy& operand() const;     // kNeg
  const Fuzzy& lhs() const;
  const Fuzzy& rhs() const;

  std::size_t size() const;
  std::size_t depth() const;
  bool contains_product() const;
  // No kVar or kAtom nodes below this one.
  bool is_closed() const;

  friend bool operator==(const Fuzzy& a, const Fuzzy& b);
  friend std::strong_ordering operator<=>(const Fuzzy& a, const Fuzzy& b);

  struct Node;

 private:
  explicit Fuzzy(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A formula together with a lower bound on its truth value.
struct GradedFormula {
  Fuzzy formula;
  Rational degree;

  friend bool operator==(const GradedFormula&, const GradedFormula&) = default;
};

// Rewrites &, strong/max disjunction, min conjunction and equivalence into
// negation and implication. Product conjunction is primitive and kept.
Fuzzy Desugar(const Fuzzy& f);

struct AtomSet {
  std::set<std::string> fuzzy_vars;
  std::set<Crisp> bodies;
  std::set<std::string> crisp_vars;
};

AtomSet CollectAtoms(const Fuzzy& f);
void CollectAtoms(const Fuzzy& f, AtomSet& into);

}  // namespace pavelka

#endif  // PAVELKA_FUZZY_H_
