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

#include "pavelka/probengine.h"

#include <gtest/gtest.h>

#include "pavelka/errors.h"
#include "pavelka/semantics.h"
#include "pavelka/syntax.h"

namespace pavelka {
namespace {

GradedTheory Frechet() {
  return ParseTheory("mode FP\naxiom f(p) >= 0.7\naxiom f(q) >= 0.6\n");
}

TEST(ProbabilityModelTest, ValidatesWeights) {
  EXPECT_THROW(ProbabilityModel({"p"}, {Rational(1, 2)}), std::invalid_argument);
  EXPECT_THROW(ProbabilityModel({"p"}, {Rational(1, 2), Rational(1, 3)}),
               std::invalid_argument);
  EXPECT_THROW(ProbabilityModel({"p"}, {Rational(3, 2), Rational(-1, 2)}),
               std::invalid_argument);
  EXPECT_THROW(ProbabilityModel({"p", "p"}, std::vector<Rational>(4, Rational(1, 4))),
               std::invalid_argument);
  ProbabilityModel u = ProbabilityModel::Uniform({"p", "q"});
  EXPECT_EQ(u.num_worlds(), 4u);
  EXPECT_EQ(u.WorldLabel(1), "p & !q");
  EXPECT_EQ(WorldLabel({}, 0), "true");
}

TEST(ProbabilityModelTest, ProbOfAndInducedEval) {
  ProbabilityModel m({"p", "q"}, {Rational(1, 10), Rational(2, 10),
                                  Rational(3, 10), Rational(4, 10)});
  EXPECT_EQ(ProbOf(m, ParseCrisp("p")), Rational(3, 5));
  EXPECT_EQ(ProbOf(m, ParseCrisp("p -> q")), Rational(4, 5));
  EXPECT_EQ(ProbOf(m, ParseCrisp("true")), Rational(1));
  EXPECT_THROW(ProbOf(m, ParseCrisp("r")), UnboundAtomError);
  Evaluation e = InducedEval(m, {ParseCrisp("q")});
  EXPECT_EQ(Eval(e, ParseFormula("f(q)")), Rational(7, 10));
}

TEST(ValidateFpTest, InducedEvaluationsPass) {
  ProbabilityModel m({"p", "q"}, {Rational(1, 8), Rational(3, 8),
                                  Rational(1, 4), Rational(1, 4)});
  std::set<Crisp> bodies = {ParseCrisp("p"), ParseCrisp("q")};
  Evaluation e = InducedEval(m, FpClosure(bodies));
  EXPECT_TRUE(ValidateFpEvaluation(e, bodies).ok);
}

TEST(ValidateFpTest, PerturbationIsNamed) {
  ProbabilityModel m = ProbabilityModel::Uniform({"p", "q"});
  std::set<Crisp> bodies = {ParseCrisp("p"), ParseCrisp("q")};
  Evaluation e = InducedEval(m, FpClosure(bodies));
  e.SetAtom(ParseCrisp("p"), Rational(3, 5));
  ValidationReport r = ValidateFpEvaluation(e, bodies);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.schema, "FP3");
  EXPECT_FALSE(r.instance.empty());
  EXPECT_LT(r.value, Rational(1));
  EXPECT_THROW(ValidateFpEvaluation(Evaluation{}, bodies), UnboundAtomError);
}

TEST(FpTruthDegreeTest, FrechetBounds) {
  Fuzzy target = ParseFormula("f(p & q)");
  BoundReport lo = FpTruthDegree(Frechet(), target, BoundKind::kLower);
  EXPECT_EQ(lo.value, Rational(3, 10));
  ASSERT_TRUE(lo.witness.has_value());
  EXPECT_EQ(ProbOf(*lo.witness, ParseCrisp("p & q")), Rational(3, 10));
  // Lower-bound axioms alone allow P(p & q) = 1.
  EXPECT_EQ(FpTruthDegree(Frechet(), target, BoundKind::kUpper).value,
            Rational(1));
  GradedTheory pinned = Frechet();
  pinned.Add(ParseFormula("f(!p)"), Rational(3, 10));
  pinned.Add(ParseFormula("f(!q)"), Rational(2, 5));
  EXPECT_EQ(FpTruthDegree(pinned, target, BoundKind::kUpper).value,
            Rational(3, 5));
}

TEST(FpTruthDegreeTest, EmptyTheory) {
  GradedTheory t(LogicMode::kFP);
  EXPECT_EQ(FpTruthDegree(t, ParseFormula("f(p)"), BoundKind::kLower).value,
            Rational(0));
  EXPECT_EQ(FpTruthDegree(t, ParseFormula("f(p | !p)"), BoundKind::kLower).value,
            Rational(1));
}

TEST(FpTruthDegreeTest, Errors) {
  EXPECT_THROW(FpTruthDegree(ParseTheory("mode FP\naxiom f(p) >= 1\naxiom f(!p) >= 1\n"),
                             ParseFormula("f(q)"), BoundKind::kLower),
               InfeasibleError);
  EXPECT_THROW(FpTruthDegree(GradedTheory(LogicMode::kFPS), ParseFormula("f(p)"),
                             BoundKind::kLower),
               UnsupportedError);
  EXPECT_THROW(FpTruthDegree(GradedTheory(LogicMode::kFP), ParseFormula("a"),
                             BoundKind::kLower),
               UnsupportedError);
  ProbOptions small;
  small.max_variables = 2;
  EXPECT_THROW(FpTruthDegree(GradedTheory(LogicMode::kFP),
                             ParseFormula("f(p & q & r)"), BoundKind::kLower, small),
               LimitError);
}

TEST(CondTest, CheckAndLowerBound) {
  GradedTheory t = ParseTheory("mode FP+\naxiom f(p) >= 1/2\naxiom f(p & q) >= 2/5\n");
  Crisp p = ParseCrisp("p"), q = ParseCrisp("q");
  EXPECT_TRUE(CondCheck(t, p, q, Rational(2, 5)));
  EXPECT_FALSE(CondCheck(t, p, q, Rational(41, 100)));
  BoundReport b = CondLowerBound(t, p, q, Rational(1, 1024));
  EXPECT_LE(b.value, Rational(2, 5));
  EXPECT_GE(b.value, Rational(2, 5) - Rational(1, 1024));
  EXPECT_THROW(CondCheck(GradedTheory(LogicMode::kFPPlus), p, q, Rational(1, 2)),
               ProvisoError);
}

TEST(CondTest, CertainConditional) {
  GradedTheory t = ParseTheory("mode FP+\naxiom f(p) >= 1/2\naxiom f(p -> q) >= 1\n");
  BoundReport b = CondLowerBound(t, ParseCrisp("p"), ParseCrisp("q"), Rational(1, 64));
  EXPECT_EQ(b.value, Rational(1));
  EXPECT_TRUE(b.exact);
}

TEST(IndependenceTest, ProductDistribution) {
  // p, q independent given r and given !r.
  std::vector<Rational> w(8);
  for (int i = 0; i < 8; ++i) {
    Rational pr = (i & 4) ? Rational(1, 3) : Rational(2, 3);
    Rational pp = (i & 1) ? Rational(1, 2) : Rational(1, 2);
    Rational pq = (i & 2) ? Rational(1, 4) : Rational(3, 4);
    w[i] = pr * pp * pq;
  }
  ProbabilityModel m({"p", "q", "r"}, w);
  EXPECT_TRUE(CheckIndependence(m, ParseCrisp("p"), ParseCrisp("q"), ParseCrisp("r")));
  EXPECT_FALSE(CheckIndependence(m, ParseCrisp("p"), ParseCrisp("p & q"),
                                 ParseCrisp("r")));
}

}  // namespace
}  // namespace pavelka
