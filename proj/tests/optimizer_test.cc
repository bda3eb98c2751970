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

#include "pavelka/optimizer.h"

#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "oracles.h"
#include "pavelka/errors.h"

namespace pavelka {
namespace {

using testing::Rng;

LinExpr X(int i, Rational c = Rational(1)) { return LinExpr::Var(i, c); }

TEST(LinExprTest, Arithmetic) {
  LinExpr e = X(0, 2) + X(1) - X(0) + Rational(3);
  e *= Rational(1, 2);
  std::vector<Rational> v = {Rational(4), Rational(2)};
  EXPECT_EQ(e.Evaluate(v), Rational(9, 2));
  LinExpr z = X(0) - X(0);
  EXPECT_TRUE(z.is_constant());
}

TEST(SimplexTest, TextbookMaximum) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
  LinearProgram lp;
  int x = lp.AddVariable("x");
  int y = lp.AddVariable("y");
  lp.AddConstraint(X(x), Relation::kLessEqual, Rational(4));
  lp.AddConstraint(X(y, 2), Relation::kLessEqual, Rational(12));
  lp.AddConstraint(X(x, 3) + X(y, 2), Relation::kLessEqual, Rational(18));
  lp.SetObjective(X(x, 3) + X(y, 5), Sense::kMaximize);
  LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(36));
  EXPECT_EQ(r.assignment[0], Rational(2));
  EXPECT_EQ(r.assignment[1], Rational(6));
  EXPECT_TRUE(lp.IsFeasible(r.assignment));
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearProgram lp;
  int x = lp.AddVariable("x", Rational(0), Rational(1));
  lp.AddConstraint(X(x), Relation::kGreaterEqual, Rational(2));
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kInfeasible);

  LinearProgram open;
  int y = open.AddVariable("y", std::nullopt, std::nullopt);
  open.SetObjective(X(y), Sense::kMinimize);
  EXPECT_EQ(SolveLp(open).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, FreeAndShiftedVariables) {
  // min x + y with x in [-3, 5], y free, y >= x - 1/3, y >= -x.
  LinearProgram lp;
  int x = lp.AddVariable("x", Rational(-3), Rational(5));
  int y = lp.AddVariable("y", std::nullopt, std::nullopt);
  lp.AddConstraint(X(y), Relation::kGreaterEqual, X(x) - Rational(1, 3));
  lp.AddConstraint(X(y), Relation::kGreaterEqual, Rational(0) - X(x));
  lp.SetObjective(X(x) + X(y), Sense::kMinimize);
  LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(0));
  EXPECT_TRUE(lp.IsFeasible(r.assignment));
}

TEST(SimplexTest, EqualitiesAndRedundantRows) {
  LinearProgram lp;
  int a = lp.AddVariable("a");
  int b = lp.AddVariable("b");
  lp.AddConstraint(X(a) + X(b), Relation::kEqual, Rational(1));
  lp.AddConstraint(X(a, 2) + X(b, 2), Relation::kEqual, Rational(2));
  lp.SetObjective(X(a) - X(b), Sense::kMinimize);
  LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(-1));
}

TEST(SimplexTest, UndeclaredVariableIsRejected) {
  LinearProgram lp;
  lp.AddVariable("x");
  EXPECT_THROW(lp.AddConstraint(X(3), Relation::kEqual), std::out_of_range);
}

// Random small LPs: the reported optimum is feasible and no grid point of
// the box does better.
TEST(SimplexTest, RandomBoxProgramsBeatGrid) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    LinearProgram lp;
    for (int i = 0; i < 2; ++i) lp.AddVariable("x", Rational(0), Rational(1));
    std::vector<std::pair<LinExpr, Rational>> rows;
    for (int k = 0; k < 3; ++k) {
      LinExpr e = X(0, rng.Int(-3, 3)) + X(1, rng.Int(-3, 3));
      Rational rhs(rng.Int(-2, 4), 2);
      lp.AddConstraint(e, Relation::kLessEqual, rhs);
      rows.emplace_back(e, rhs);
    }
    LinExpr obj = X(0, rng.Int(-4, 4)) + X(1, rng.Int(-4, 4));
    lp.SetObjective(obj, Sense::kMinimize);
    LpResult r = SolveLp(lp);
    std::optional<Rational> grid_best;
    for (int i = 0; i <= 12; ++i) {
      for (int j = 0; j <= 12; ++j) {
        std::vector<Rational> v = {Rational(i, 12), Rational(j, 12)};
        if (!lp.IsFeasible(v)) continue;
        Rational o = obj.Evaluate(v);
        if (!grid_best || o < *grid_best) grid_best = o;
      }
    }
    if (r.status == LpStatus::kInfeasible) {
      EXPECT_FALSE(grid_best.has_value());
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_TRUE(lp.IsFeasible(r.assignment));
    EXPECT_EQ(obj.Evaluate(r.assignment), r.value);
    if (grid_best) {
      EXPECT_LE(r.value, *grid_best);
    }
  }
}

// Pure binary programs against exhaustive enumeration.
TEST(MilpTest, MatchesEnumeration) {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    MixedProgram mp;
    const int n = 5;
    for (int i = 0; i < n; ++i) mp.AddBinary("b");
    std::vector<std::pair<LinExpr, Rational>> rows;
    for (int k = 0; k < 3; ++k) {
      LinExpr e;
      for (int i = 0; i < n; ++i) e += X(i, rng.Int(-3, 5));
      Rational rhs(rng.Int(0, 8));
      mp.lp().AddConstraint(e, Relation::kLessEqual, rhs);
      rows.emplace_back(e, rhs);
    }
    LinExpr obj;
    for (int i = 0; i < n; ++i) obj += X(i, rng.Int(-5, 5));
    mp.lp().SetObjective(obj, Sense::kMaximize);
    std::optional<Rational> best;
    for (int m = 0; m < (1 << n); ++m) {
      std::vector<Rational> v;
      for (int i = 0; i < n; ++i) v.emplace_back((m >> i) & 1);
      if (!mp.lp().IsFeasible(v)) continue;
      Rational o = obj.Evaluate(v);
      if (!best || o > *best) best = o;
    }
    LpResult r = SolveMilp(mp);
    if (!best) {
      EXPECT_EQ(r.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_EQ(r.value, *best);
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(r.assignment[i] == Rational(0) || r.assignment[i] == Rational(1));
    }
  }
}

TEST(MilpTest, BinaryLimit) {
  MixedProgram mp;
  for (int i = 0; i < 3; ++i) mp.AddBinary("b");
  MilpOptions options;
  options.max_binaries = 2;
  EXPECT_THROW(SolveMilp(mp, options), LimitError);
}

}  // namespace
}  // namespace pavelka
