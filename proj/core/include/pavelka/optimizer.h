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

// Exact rational linear programming (two-phase dense simplex, Bland's rule)
// and depth-first branch-and-bound over binary variables.

#ifndef PAVELKA_OPTIMIZER_H_
#define PAVELKA_OPTIMIZER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pavelka/rational.h"

namespace pavelka {

// Affine expression sum(coef * x_i) + constant.
class LinExpr {
 public:
  LinExpr() = default;
  LinExpr(Rational constant) : constant_(std::move(constant)) {}  // NOLINT
  static LinExpr Var(int index, const Rational& coef = Rational(1));

  const std::map<int, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  bool is_constant() const { return terms_.empty(); }

  Rational Evaluate(std::span<const Rational> values) const;

  LinExpr& operator+=(const LinExpr& rhs);
  LinExpr& operator-=(const LinExpr& rhs);
  LinExpr& operator*=(const Rational& k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(const Rational& k, LinExpr a) { return a *= k; }

 private:
  std::map<int, Rational> terms_;
  Rational constant_;
};

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };

struct Variable {
  std::string name;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// `expr relation 0`, with the constant folded into `expr`.
struct Constraint {
  LinExpr expr;
  Relation relation;
};

class LinearProgram {
 public:
  // Default bounds are [0, +inf).
  int AddVariable(std::string name,
                  std::optional<Rational> lower = Rational(0),
                  std::optional<Rational> upper = std::nullopt);
  void SetBounds(int index, std::optional<Rational> lower,
                 std::optional<Rational> upper);
  // lhs relation rhs.
  void AddConstraint(const LinExpr& lhs, Relation relation,
                     const LinExpr& rhs = LinExpr());
  void SetObjective(LinExpr objective, Sense sense);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const Variable& variable(int index) const { return variables_[index]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const LinExpr& objective() const { return objective_; }
  Sense sense() const { return sense_; }

  // True iff `values` satisfies every bound and constraint exactly.
  bool IsFeasible(std::span<const Rational> values) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  LinExpr objective_;
  Sense sense_ = Sense::kMinimize;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                   // objective, kOptimal only
  std::vector<Rational> assignment;  // one entry per variable, kOptimal only
};

LpResult SolveLp(const LinearProgram& program);

// A linear program in which some variables must take values in {0, 1}.
class MixedProgram {
 public:
  LinearProgram& lp() { return lp_; }
  const LinearProgram& lp() const { return lp_; }
  int AddBinary(std::string name);
  const std::vector<int>& binaries() const { return binaries_; }

 private:
  LinearProgram lp_;
  std::vector<int> binaries_;
};

inline constexpr int kDefaultBinaryLimit = 24;

struct MilpOptions {
  int max_binaries = kDefaultBinaryLimit;
};

// Depth-first branch-and-bound; branches on the first fractional binary in
// declaration order, 0-branch first. Throws LimitError when the program has
// more binaries than allowed.
LpResult SolveMilp(const MixedProgram& program, const MilpOptions& options = {});

}  // namespace pavelka

#endif  // PAVELKA_OPTIMIZER_H_
