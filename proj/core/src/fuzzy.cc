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

#include "pavelka/fuzzy.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pavelka {

struct Fuzzy::Node {
  Kind kind;
  std::string name;
  std::optional<Crisp> body;
  Rational value;
  std::optional<Fuzzy> lhs;
  std::optional<Fuzzy> rhs;
  std::size_t size = 1;
  std::size_t depth = 1;
  bool has_product = false;
  bool closed = true;
};

Fuzzy Fuzzy::Var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVar;
  node->name = std::move(name);
  node->closed = false;
  return Fuzzy(std::move(node));
}

Fuzzy Fuzzy::Atom(Crisp body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAtom;
  node->body = std::move(body);
  node->closed = false;
  return Fuzzy(std::move(node));
}

Fuzzy Fuzzy::Const(Rational value) {
  if (!value.is_degree()) {
    throw std::invalid_argument("truth constant outside [0,1]: " +
                                value.str());
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kConst;
  node->value = std::move(value);
  return Fuzzy(std::move(node));
}

Fuzzy Fuzzy::Neg(Fuzzy operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNeg;
  node->size = operand.size() + 1;
  node->depth = operand.depth() + 1;
  node->has_product = operand.contains_product();
  node->closed = operand.is_closed();
  node->lhs = std::move(operand);
  return Fuzzy(std::move(node));
}

Fuzzy Fuzzy::Binary(Kind kind, Fuzzy lhs, Fuzzy rhs) {
  switch (kind) {
    case Kind::kVar:
    case Kind::kAtom:
    case Kind::kConst:
    case Kind::kNeg:
      throw std::invalid_argument("not a binary fuzzy connective");
    default:
      break;
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->size = lhs.size() + rhs.size() + 1;
  node->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  node->has_product = kind == Kind::kProdConj || lhs.contains_product() ||
                      rhs.contains_product();
  node->closed = lhs.is_closed() && rhs.is_closed();
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Fuzzy(std::move(node));
}

Fuzzy Fuzzy::Impl(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kImpl, std::move(a), std::move(b));
}
Fuzzy Fuzzy::StrongConj(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kStrongConj, std::move(a), std::move(b));
}
Fuzzy Fuzzy::StrongDisj(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kStrongDisj, std::move(a), std::move(b));
}
Fuzzy Fuzzy::MaxDisj(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kMaxDisj, std::move(a), std::move(b));
}
Fuzzy Fuzzy::MinConj(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kMinConj, std::move(a), std::move(b));
}
Fuzzy Fuzzy::Equiv(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kEquiv, std::move(a), std::move(b));
}
Fuzzy Fuzzy::ProdConj(Fuzzy a, Fuzzy b) {
  return Binary(Kind::kProdConj, std::move(a), std::move(b));
}

Fuzzy::Kind Fuzzy::kind() const { return node_->kind; }

bool Fuzzy::is_binary() const {
  switch (node_->kind) {
    case Kind::kVar:
    case Kind::kAtom:
    case Kind::kConst:
    case Kind::kNeg:
      return false;
    default:
      return true;
  }
}

const std::string& Fuzzy::name() const { return node_->name; }
const Crisp& Fuzzy::body() const { return *node_->body; }
const Rational& Fuzzy::value() const { return node_->value; }
const Fuzzy& Fuzzy::operand() const { return *node_->lhs; }
const Fuzzy& Fuzzy::lhs() const { return *node_->lhs; }
const Fuzzy& Fuzzy::rhs() const { return *node_->rhs; }
std::size_t Fuzzy::size() const { return node_->size; }
std::size_t Fuzzy::depth() const { return node_->depth; }
bool Fuzzy::contains_product() const { return node_->has_product; }
bool Fuzzy::is_closed() const { return node_->closed; }

bool operator==(const Fuzzy& a, const Fuzzy& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Fuzzy& a, const Fuzzy& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Fuzzy::Kind::kVar:
      return a.name() <=> b.name();
    case Fuzzy::Kind::kAtom:
      return a.body() <=> b.body();
    case Fuzzy::Kind::kConst:
      return a.value() <=> b.value();
    case Fuzzy::Kind::kNeg:
      return a.operand() <=> b.operand();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

Fuzzy Desugar(const Fuzzy& f) {
  using K = Fuzzy::Kind;
  switch (f.kind()) {
    case K::kVar:
    case K::kAtom:
    case K::kConst:
      return f;
    case K::kNeg:
      return Fuzzy::Neg(Desugar(f.operand()));
    default:
      break;
  }
  Fuzzy a = Desugar(f.lhs());
  Fuzzy b = Desugar(f.rhs());
  switch (f.kind()) {
    case K::kImpl:
      return Fuzzy::Impl(a, b);
    case K::kProdConj:
      return Fuzzy::ProdConj(a, b);
    case K::kStrongConj:
      // not(a -> not b)
      return Fuzzy::Neg(Fuzzy::Impl(a, Fuzzy::Neg(b)));
    case K::kStrongDisj:
      // not a -> b
      return Fuzzy::Impl(Fuzzy::Neg(a), b);
    case K::kMaxDisj:
      // (a -> b) -> b
      return Fuzzy::Impl(Fuzzy::Impl(a, b), b);
    case K::kMinConj: {
      // not(not a \/ not b)
      Fuzzy na = Fuzzy::Neg(a);
      Fuzzy nb = Fuzzy::Neg(b);
      return Fuzzy::Neg(Fuzzy::Impl(Fuzzy::Impl(na, nb), nb));
    }
    case K::kEquiv: {
      // (a -> b) /\ (b -> a), itself desugared
      Fuzzy ab = Fuzzy::Impl(a, b);
      Fuzzy ba = Fuzzy::Impl(b, a);
      return Desugar(Fuzzy::MinConj(ab, ba));
    }
    default:
      throw std::logic_error("unreachable fuzzy kind");
  }
}

void CollectAtoms(const Fuzzy& f, AtomSet& into) {
  switch (f.kind()) {
    case Fuzzy::Kind::kVar:
      into.fuzzy_vars.insert(f.name());
      return;
    case Fuzzy::Kind::kAtom:
      if (into.bodies.insert(f.body()).second) {
        for (auto& v : f.body().variables()) into.crisp_vars.insert(v);
      }
      return;
    case Fuzzy::Kind::kConst:
      return;
    case Fuzzy::Kind::kNeg:
      CollectAtoms(f.operand(), into);
      return;
    default:
      CollectAtoms(f.lhs(), into);
      CollectAtoms(f.rhs(), into);
  }
}

AtomSet CollectAtoms(const Fuzzy& f) {
  AtomSet out;
  CollectAtoms(f, out);
  return out;
}

}  // namespace pavelka
