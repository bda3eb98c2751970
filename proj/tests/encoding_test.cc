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

#include "pavelka/encoding.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.h"
#include "pavelka/errors.h"
#include "pavelka/semantics.h"
#include "pavelka/syntax.h"

namespace pavelka {
namespace {

using testing::FuzzyGenOptions;
using testing::RandomFuzzy;
using testing::Rng;
using testing::ScaledEval;

Rational Degree(const char* theory, const char* target) {
  return RplTruthDegree(ParseTheory(theory), ParseFormula(target)).value;
}

TEST(RplTruthDegreeTest, ExcludedMiddle) {
  EXPECT_EQ(Degree("mode RPL\n", "a \\/ ~a"), Rational(1, 2));
  EXPECT_EQ(Degree("mode RPL\n", "a | ~a"), Rational(1));
  EXPECT_EQ(Degree("mode RPL\n", "a /\\ ~a"), Rational(0));
}

TEST(RplTruthDegreeTest, GradedModusPonens) {
  EXPECT_EQ(Degree("mode RPL\naxiom a >= 0.6\naxiom a -> b >= 0.7\n", "b"),
            Rational(3, 10));
  EXPECT_EQ(Degree("mode RPL\naxiom a >= 3/5\n", "0.8 -> a"), Rational(4, 5));
}

TEST(RplTruthDegreeTest, ProductWithConstant) {
  EXPECT_EQ(Degree("mode RPL+\naxiom a >= 1/2\n", "0.5 * a"), Rational(1, 4));
  EXPECT_THROW(Degree("mode RPL+\n", "a * b"), UnsupportedError);
}

TEST(RplTruthDegreeTest, InfeasibleTheory) {
  EXPECT_THROW(Degree("mode RPL\naxiom a >= 1\naxiom ~a >= 1\n", "a"),
               InfeasibleError);
}

TEST(RplTruthDegreeTest, AtomModesAreUnsupported) {
  EXPECT_THROW(Degree("mode FP\n", "f(p)"), UnsupportedError);
}

TEST(RplTruthDegreeTest, WitnessIsAModelAttainingTheValue) {
  GradedTheory t =
      ParseTheory("mode RPL\naxiom a \\/ b >= 0.7\naxiom ~(a & b) >= 0.8\n");
  Fuzzy target = ParseFormula("a /\\ b");
  TruthDegree d = RplTruthDegree(t, target);
  EXPECT_TRUE(IsModel(d.witness, t));
  EXPECT_EQ(Eval(d.witness, target), d.value);
}

// Truth degrees of random two-variable theories against a grid oracle at
// step 1/12 (all constants lie on the grid).
TEST(RplTruthDegreeTest, RandomTheoriesAgainstGrid) {
  Rng rng(41);
  FuzzyGenOptions gen;
  gen.vars = {"a", "b"};
  gen.const_den = 4;
  const int kScale = 12;
  int compared = 0;
  for (int t = 0; t < 60; ++t) {
    GradedTheory theory(LogicMode::kRPL);
    std::vector<std::pair<Fuzzy, int>> axioms;
    int n = rng.Int(0, 2);
    for (int i = 0; i < n; ++i) {
      Fuzzy f = RandomFuzzy(rng, gen, 2);
      int d = rng.Int(0, 4) * 3;
      theory.Add(f, Rational(d, kScale));
      axioms.emplace_back(f, d);
    }
    Fuzzy target = RandomFuzzy(rng, gen, 3);
    std::optional<std::int64_t> grid_min;
    for (int x = 0; x <= kScale; ++x) {
      for (int y = 0; y <= kScale; ++y) {
        auto leaf = [&](const Fuzzy& l) -> std::int64_t {
          return l.name() == "a" ? x : y;
        };
        bool model = std::all_of(axioms.begin(), axioms.end(), [&](auto& ax) {
          return ScaledEval(ax.first, kScale, leaf) >= ax.second;
        });
        if (!model) continue;
        std::int64_t v = ScaledEval(target, kScale, leaf);
        if (!grid_min || v < *grid_min) grid_min = v;
      }
    }
    try {
      TruthDegree d = RplTruthDegree(theory, target);
      ASSERT_TRUE(grid_min.has_value());
      EXPECT_LE(d.value, Rational(*grid_min, kScale)) << Print(target);
      EXPECT_TRUE(IsModel(d.witness, theory));
      EXPECT_EQ(Eval(d.witness, target), d.value);
      ++compared;
    } catch (const InfeasibleError&) {
      EXPECT_FALSE(grid_min.has_value());
    }
  }
  EXPECT_GT(compared, 30);
}

TEST(FreeTruthDegreeTest, Tautologies) {
  EXPECT_EQ(FreeTruthDegree(ParseFormula("a -> (b -> a)")), Rational(1));
  EXPECT_EQ(FreeTruthDegree(ParseFormula("a -> b")), Rational(0));
  EXPECT_EQ(FreeTruthDegree(ParseFormula("f(p) | ~f(p)")), Rational(1));
  EXPECT_EQ(FreeTruthDegree(ParseFormula("0.3 -> a \\/ 0.6")), Rational(1));
}

}  // namespace
}  // namespace pavelka
