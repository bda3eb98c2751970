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

#include "oracles.h"

#include <algorithm>
#include <stdexcept>

namespace pavelka::testing {

Crisp RandomCrisp(Rng& rng, const std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || rng.Int(0, 3) == 0) {
    int k = rng.Int(0, static_cast<int>(vars.size()) + 1);
    if (k == static_cast<int>(vars.size())) {
      return rng.Coin() ? Crisp::True() : Crisp::False();
    }
    if (k > static_cast<int>(vars.size())) k = rng.Int(0, static_cast<int>(vars.size()) - 1);
    return Crisp::Var(vars[static_cast<std::size_t>(k)]);
  }
  switch (rng.Int(0, 4)) {
    case 0:
      return Crisp::Not(RandomCrisp(rng, vars, depth - 1));
    case 1:
      return Crisp::And(RandomCrisp(rng, vars, depth - 1),
                        RandomCrisp(rng, vars, depth - 1));
    case 2:
      return Crisp::Or(RandomCrisp(rng, vars, depth - 1),
                       RandomCrisp(rng, vars, depth - 1));
    case 3:
      return Crisp::Implies(RandomCrisp(rng, vars, depth - 1),
                            RandomCrisp(rng, vars, depth - 1));
    default:
      return Crisp::Iff(RandomCrisp(rng, vars, depth - 1),
                        RandomCrisp(rng, vars, depth - 1));
  }
}

Fuzzy RandomFuzzy(Rng& rng, const FuzzyGenOptions& options, int depth) {
  using K = Fuzzy::Kind;
  if (depth <= 0 || rng.Int(0, 3) == 0) {
    int choices = static_cast<int>(options.vars.size() + options.bodies.size());
    int k = rng.Int(0, choices);
    if (k == choices) return Fuzzy::Const(rng.Grid(options.const_den));
    if (k < static_cast<int>(options.vars.size())) {
      return Fuzzy::Var(options.vars[static_cast<std::size_t>(k)]);
    }
    return Fuzzy::Atom(
        options.bodies[static_cast<std::size_t>(k) - options.vars.size()]);
  }
  static const std::vector<K> kBinary = {K::kImpl,    K::kStrongConj,
                                         K::kStrongDisj, K::kMaxDisj,
                                         K::kMinConj, K::kEquiv};
  int k = rng.Int(0, static_cast<int>(kBinary.size()) + (options.product ? 1 : 0));
  if (k == 0) return Fuzzy::Neg(RandomFuzzy(rng, options, depth - 1));
  if (k == static_cast<int>(kBinary.size()) + 1) {
    Fuzzy c = Fuzzy::Const(rng.Grid(options.const_den));
    Fuzzy x = RandomFuzzy(rng, options, depth - 1);
    return rng.Coin() ? Fuzzy::ProdConj(c, x) : Fuzzy::ProdConj(x, c);
  }
  return Fuzzy::Binary(kBinary[static_cast<std::size_t>(k) - 1],
                       RandomFuzzy(rng, options, depth - 1),
                       RandomFuzzy(rng, options, depth - 1));
}

std::int64_t ScaledEval(const Fuzzy& f, std::int64_t scale,
                        const std::function<std::int64_t(const Fuzzy&)>& leaf) {
  using K = Fuzzy::Kind;
  auto rec = [&](const Fuzzy& g) { return ScaledEval(g, scale, leaf); };
  switch (f.kind()) {
    case K::kVar:
    case K::kAtom:
      return leaf(f);
    case K::kConst: {
      Rational scaled = f.value() * Rational(scale);
      if (!scaled.is_integer()) {
        throw std::domain_error("constant off the evaluation grid");
      }
      return scaled.numerator().get_si();
    }
    case K::kNeg:
      return scale - rec(f.operand());
    default:
      break;
  }
  std::int64_t x = rec(f.lhs());
  std::int64_t y = rec(f.rhs());
  switch (f.kind()) {
    case K::kImpl:
      return std::min(scale, scale - x + y);
    case K::kStrongConj:
      return std::max<std::int64_t>(0, x + y - scale);
    case K::kStrongDisj:
      return std::min(scale, x + y);
    case K::kMaxDisj:
      return std::max(x, y);
    case K::kMinConj:
      return std::min(x, y);
    case K::kEquiv:
      return std::min(scale - x + y, scale - y + x);
    case K::kProdConj:
      if ((x * y) % scale != 0) {
        throw std::domain_error("product off the evaluation grid");
      }
      return x * y / scale;
    default:
      throw std::logic_error("unexpected kind");
  }
}

namespace {

void Compose(int remaining, int parts, std::vector<int>& current,
             const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    current.push_back(remaining);
    fn(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    current.push_back(k);
    Compose(remaining - k, parts - 1, current, fn);
    current.pop_back();
  }
}

bool Truth(const Crisp& c, const std::vector<std::string>& vars,
           std::uint32_t w) {
  switch (c.kind()) {
    case Crisp::Kind::kVar: {
      auto it = std::find(vars.begin(), vars.end(), c.name());
      if (it == vars.end()) throw std::out_of_range("unknown variable");
      return (w >> (it - vars.begin())) & 1;
    }
    case Crisp::Kind::kTrue:
      return true;
    case Crisp::Kind::kFalse:
      return false;
    case Crisp::Kind::kNot:
      return !Truth(c.operand(), vars, w);
    case Crisp::Kind::kAnd:
      return Truth(c.lhs(), vars, w) && Truth(c.rhs(), vars, w);
    case Crisp::Kind::kOr:
      return Truth(c.lhs(), vars, w) || Truth(c.rhs(), vars, w);
    case Crisp::Kind::kImplies:
      return !Truth(c.lhs(), vars, w) || Truth(c.rhs(), vars, w);
    case Crisp::Kind::kIff:
      return Truth(c.lhs(), vars, w) == Truth(c.rhs(), vars, w);
  }
  return false;
}

}  // namespace

void ForEachComposition(int total, int parts,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> current;
  Compose(total, parts, current, fn);
}

std::uint32_t WorldMask(const Crisp& c, const std::vector<std::string>& vars) {
  std::uint32_t mask = 0;
  for (std::uint32_t w = 0; w < (1u << vars.size()); ++w) {
    if (Truth(c, vars, w)) mask |= 1u << w;
  }
  return mask;
}

int MaskedSum(std::uint32_t mask, const std::vector<int>& counts) {
  int sum = 0;
  for (std::size_t w = 0; w < counts.size(); ++w) {
    if ((mask >> w) & 1) sum += counts[w];
  }
  return sum;
}

}  // namespace pavelka::testing
