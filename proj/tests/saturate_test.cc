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

#include <gtest/gtest.h>

#include <vector>

#include "pavelka/kernel.h"
#include "pavelka/probengine.h"
#include "pavelka/syntax.h"

namespace pavelka {
namespace {

TEST(SaturateTest, EmptyTheoryDerivesReflexiveAtom) {
  std::vector<Fuzzy> seeds = {ParseFormula("f(p -> p)")};
  SaturationResult r =
      Saturate(GradedTheory(LogicMode::kFP), SaturateOptions{}, seeds);
  EXPECT_EQ(r.DegreeOf(ParseFormula("f(p -> p)")), Rational(1));
}

TEST(SaturateTest, GradedModusPonensOnAtoms) {
  GradedTheory t =
      ParseTheory("mode FP\naxiom f(p) >= 4/5\naxiom f(p) -> f(q) >= 9/10\n");
  EXPECT_EQ(Saturate(t).DegreeOf(ParseFormula("f(q)")), Rational(7, 10));
}

TEST(SaturateTest, ConjunctionElimination) {
  GradedTheory t = ParseTheory("mode FP\naxiom f(p & q) >= 1/2\n");
  EXPECT_EQ(Saturate(t).DegreeOf(ParseFormula("f(p)")), Rational(1, 2));
}

// Derived degrees never exceed the exact lower probability bound.
TEST(SaturateTest, FrechetDegreesAreSound) {
  GradedTheory t = ParseTheory("mode FP\naxiom f(p) >= 0.7\naxiom f(q) >= 0.6\n");
  std::vector<Fuzzy> seeds = {ParseFormula("f(p & q)")};
  SaturationResult r = Saturate(t, SaturateOptions{}, seeds);
  for (const auto& [f, degree] : r.Derived()) {
    EXPECT_LE(degree, FpTruthDegree(t, f, BoundKind::kLower).value) << Print(f);
  }
}

TEST(SaturateTest, RplChain) {
  GradedTheory t = ParseTheory(
      "mode RPL\naxiom a >= 0.9\naxiom a -> b >= 0.8\naxiom b -> c >= 0.9\n");
  SaturationResult r = Saturate(t);
  EXPECT_EQ(r.DegreeOf(ParseFormula("b")), Rational(7, 10));
  EXPECT_EQ(r.DegreeOf(ParseFormula("c")), Rational(3, 5));
}

TEST(SaturateTest, ReplayedProofsAreAccepted) {
  GradedTheory t = ParseTheory(
      "mode FP\naxiom f(p) >= 0.7\naxiom f(p) -> f(q) >= 0.9\n");
  SaturationResult r = Saturate(t);
  ASSERT_FALSE(r.Derived().empty());
  for (const auto& [f, degree] : r.Derived()) {
    Proof p = r.ReplayProof(f);
    CheckReport c = CheckProof(t, p);
    ASSERT_TRUE(c.accepted) << Print(f) << ": " << c.reason;
    EXPECT_EQ(c.conclusion->formula, f);
    EXPECT_EQ(c.conclusion->degree, degree);
  }
  EXPECT_THROW(r.ReplayProof(ParseFormula("zzz")), std::out_of_range);
}

TEST(SaturateTest, BudgetTruncatesAndIsMonotone) {
  GradedTheory t = ParseTheory("mode FP\naxiom f(p) >= 0.7\naxiom f(q) >= 0.6\n");
  SaturateOptions small;
  small.max_steps = 10;
  SaturationResult a = Saturate(t, small);
  SaturationResult b = Saturate(t);
  EXPECT_TRUE(a.truncated());
  for (const auto& [f, degree] : a.Derived()) {
    auto other = b.DegreeOf(f);
    ASSERT_TRUE(other.has_value());
    EXPECT_GE(*other, degree);
  }
}

}  // namespace
}  // namespace pavelka
