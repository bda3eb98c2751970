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

// Classical (two-valued) propositional formulas: the bodies of fuzzy atoms.

#ifndef PAVELKA_CRISP_H_
#define PAVELKA_CRISP_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace pavelka {

// Immutable, structurally compared formula tree. Copies share nodes.
class Crisp {
 public:
  enum class Kind { kVar, kTrue, kFalse, kNot, kAnd, kOr, kImplies, kIff };

  static Crisp Var(std::string name);
  static Crisp True();
  static Crisp False();
  static Crisp Not(Crisp operand);
  static Crisp And(Crisp lhs, Crisp rhs);
  static Crisp Or(Crisp lhs, Crisp rhs);
  static Crisp Implies(Crisp lhs, Crisp rhs);
  static Crisp Iff(Crisp lhs, Crisp rhs);
  static Crisp Binary(Kind kind, Crisp lhs, Crisp rhs);

  Kind kind() const;
  bool is_binary() const;
  // Only for kVar.
  const std::string& name() const;
  // kNot: operand(); binary kinds: lhs()/rhs().
  const Crisp& operand() const;
  const Crisp& lhs() const;
  const Crisp& rhs() const;

  // Number of nodes.
  std::size_t size() const;
  std::size_t depth() const;

  // Names of all variables, sorted.
  std::set<std::string> variables() const;

  friend bool operator==(const Crisp& a, const Crisp& b);
  friend std::strong_ordering operator<=>(const Crisp& a, const Crisp& b);

  struct Node;

 private:
  explicit Crisp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace pavelka

#endif  // PAVELKA_CRISP_H_
