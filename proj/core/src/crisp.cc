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

#include "pavelka/crisp.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pavelka {

struct Crisp::Node {
  Kind kind;
  std::string name;
  std::optional<Crisp> lhs;
  std::optional<Crisp> rhs;
  std::size_t size = 1;
  std::size_t depth = 1;
};

Crisp Crisp::Var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVar;
  node->name = std::move(name);
  return Crisp(std::move(node));
}

Crisp Crisp::True() {
  static const Crisp kTrue = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kTrue;
    return Crisp(std::move(node));
  }();
  return kTrue;
}

Crisp Crisp::False() {
  static const Crisp kFalse = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kFalse;
    return Crisp(std::move(node));
  }();
  return kFalse;
}

Crisp Crisp::Not(Crisp operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  node->size = operand.size() + 1;
  node->depth = operand.depth() + 1;
  node->lhs = std::move(operand);
  return Crisp(std::move(node));
}

Crisp Crisp::Binary(Kind kind, Crisp lhs, Crisp rhs) {
  switch (kind) {
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      break;
    default:
      throw std::invalid_argument("not a binary crisp connective");
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->size = lhs.size() + rhs.size() + 1;
  node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Crisp(std::move(node));
}

Crisp Crisp::And(Crisp lhs, Crisp rhs) {
  return Binary(Kind::kAnd, std::move(lhs), std::move(rhs));
}
Crisp Crisp::Or(Crisp lhs, Crisp rhs) {
  return Binary(Kind::kOr, std::move(lhs), std::move(rhs));
}
Crisp Crisp::Implies(Crisp lhs, Crisp rhs) {
  return Binary(Kind::kImplies, std::move(lhs), std::move(rhs));
}
Crisp Crisp::Iff(Crisp lhs, Crisp rhs) {
  return Binary(Kind::kIff, std::move(lhs), std::move(rhs));
}

Crisp::Kind Crisp::kind() const { return node_->kind; }

bool Crisp::is_binary() const {
  switch (node_->kind) {
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return true;
    default:
      return false;
  }
}

const std::string& Crisp::name() const { return node_->name; }
const Crisp& Crisp::operand() const { return *node_->lhs; }
const Crisp& Crisp::lhs() const { return *node_->lhs; }
const Crisp& Crisp::rhs() const { return *node_->rhs; }
std::size_t Crisp::size() const { return node_->size; }
std::size_t Crisp::depth() const { return node_->depth; }

std::set<std::string> Crisp::variables() const {
  std::set<std::string> out;
  auto walk = [&out](const Crisp& c, auto& self) -> void {
    switch (c.kind()) {
      case Kind::kVar:
        out.insert(c.name());
        return;
      case Kind::kTrue:
      case Kind::kFalse:
        return;
      case Kind::kNot:
        self(c.operand(), self);
        return;
      default:
        self(c.lhs(), self);
        self(c.rhs(), self);
    }
  };
  walk(*this, walk);
  return out;
}

bool operator==(const Crisp& a, const Crisp& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Crisp& a, const Crisp& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  // Cheap discriminators first; they also make the order total.
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Crisp::Kind::kVar:
      return a.name() <=> b.name();
    case Crisp::Kind::kTrue:
    case Crisp::Kind::kFalse:
      return std::strong_ordering::equal;
    case Crisp::Kind::kNot:
      return a.operand() <=> b.operand();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

}  // namespace pavelka
