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

#include "pavelka/kernel.h"

#include <gtest/gtest.h>

#include "pavelka/errors.h"
#include "pavelka/syntax.h"

namespace pavelka {
namespace {

std::optional<Rational> Match(const char* f, Schema s) {
  return MatchSchema(ParseFormula(f), s);
}

TEST(SchemaTest, LukasiewiczAxioms) {
  EXPECT_EQ(Match("a -> (b -> a)", Schema::kL1), Rational(1));
  EXPECT_EQ(Match("f(p) -> (0.3 -> f(p))", Schema::kL1), Rational(1));
  EXPECT_FALSE(Match("a -> (b -> b)", Schema::kL1));
  EXPECT_TRUE(Match("(a -> b) -> ((b -> c) -> (a -> c))", Schema::kL2));
  EXPECT_TRUE(Match("(~a -> ~b) -> (b -> a)", Schema::kL3));
  EXPECT_TRUE(Match("((a -> b) -> b) -> ((b -> a) -> a)", Schema::kL4));
  EXPECT_FALSE(Match("((a -> b) -> b) -> ((b -> a) -> b)", Schema::kL4));
}

TEST(SchemaTest, Bookkeeping) {
  EXPECT_EQ(Match("0.4", Schema::kBookConst), Rational(2, 5));
  EXPECT_TRUE(Match("~0.4 <-> 0.6", Schema::kBookNeg));
  EXPECT_FALSE(Match("~0.4 <-> 0.5", Schema::kBookNeg));
  EXPECT_TRUE(Match("(0.4 -> 0.3) <-> 0.9", Schema::kBookImpl));
  EXPECT_FALSE(Match("(0.4 -> 0.3) <-> 1", Schema::kBookImpl));
  EXPECT_TRUE(Match("(0.5 * 0.4) <-> 0.2", Schema::kBookProd));
}

TEST(SchemaTest, ProbabilitySchemas) {
  EXPECT_TRUE(Match("f(p -> q) -> (f(p) -> f(q))", Schema::kFP2));
  EXPECT_TRUE(Match("f(!p) <-> ~f(p)", Schema::kFP3));
  EXPECT_TRUE(Match("f(p | q) <-> ((f(p) -> f(p & q)) -> f(q))", Schema::kFP4));
  EXPECT_TRUE(Match("f(true)", Schema::kFP1Prime));
  EXPECT_TRUE(Match("f(p & q) -> f(p)", Schema::kFP2Prime));
  EXPECT_FALSE(Match("f(p) -> f(p & q)", Schema::kFP2Prime));
  EXPECT_TRUE(
      Match("(f(p | q) -> f(p)) <-> (f(q) -> f(p & q))", Schema::kFP4Prime));
  EXPECT_TRUE(Match("~f(false)", Schema::kFPS3));
  EXPECT_TRUE(Match("(f(p) /\\ f(q)) <-> f(p & q)", Schema::kFPS4));
}

TEST(SchemaTest, ModeRestrictions) {
  EXPECT_TRUE(SchemaAllowed(Schema::kL1, LogicMode::kRPL));
  EXPECT_FALSE(SchemaAllowed(Schema::kFP3, LogicMode::kRPL));
  EXPECT_FALSE(SchemaAllowed(Schema::kFP3, LogicMode::kFPS));
  EXPECT_TRUE(SchemaAllowed(Schema::kFPS4, LogicMode::kFPS));
  EXPECT_FALSE(SchemaAllowed(Schema::kFPS4, LogicMode::kFP));
  EXPECT_FALSE(SchemaAllowed(Schema::kBookProd, LogicMode::kFP));
  EXPECT_TRUE(SchemaAllowed(Schema::kBookProd, LogicMode::kFPPlus));
  auto m = MatchAxiom(ParseFormula("f(p & q) -> f(p)"), LogicMode::kFP);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->schema, Schema::kFP2Prime);
  EXPECT_FALSE(MatchAxiom(ParseFormula("f(p) -> f(q)"), LogicMode::kFP));
}

CheckReport Check(const char* theory, const char* proof) {
  return CheckProof(ParseTheory(theory), ParseProof(proof));
}

TEST(CheckProofTest, AcceptsGradedModusPonens) {
  CheckReport r = Check("mode RPL\naxiom a >= 0.6\naxiom a -> b >= 0.7\n",
                        "1: a @ 0.6 by hyp\n"
                        "2: a -> b @ 0.7 by hyp\n"
                        "3: b @ 0.3 by mp 1 2\n");
  ASSERT_TRUE(r.accepted) << r.reason;
  EXPECT_EQ(r.conclusion->formula, ParseFormula("b"));
  EXPECT_EQ(r.conclusion->degree, Rational(3, 10));
}

TEST(CheckProofTest, LowerDegreesAreAlwaysFine) {
  CheckReport r = Check("mode RPL\naxiom a >= 0.6\n",
                        "1: a @ 0.5 by hyp\n2: 0.8 -> a @ 0.6 by tci 1 0.8\n");
  EXPECT_TRUE(r.accepted) << r.reason;
}

TEST(CheckProofTest, RejectsOverclaimedDegree) {
  CheckReport r = Check("mode RPL\naxiom a >= 0.6\naxiom a -> b >= 0.7\n",
                        "1: a @ 0.6 by hyp\n"
                        "2: a -> b @ 0.7 by hyp\n"
                        "3: b @ 0.4 by mp 1 2\n");
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.failing_step, 3u);
  EXPECT_NE(r.reason.find("exceeds"), std::string::npos);
}

TEST(CheckProofTest, RejectsBadReferencesAndSchemas) {
  EXPECT_THROW(ParseProof("1: b @ 1 by mp 1 2\n"), ParseError);
  EXPECT_EQ(Check("mode RPL\n", "1: a -> (b -> b) @ 1 by L1\n").failing_step,
            1u);
  EXPECT_FALSE(Check("mode RPL\n", "1: a @ 1 by hyp\n").accepted);
  EXPECT_FALSE(Check("mode RPL\n", "1: f(!p) <-> ~f(p) @ 1 by FP3\n").accepted);
  EXPECT_FALSE(Check("mode RPL\n", "1: a -> b @ 1/2 by taut\n").accepted);
  EXPECT_TRUE(Check("mode RPL\n", "1: a | ~a @ 1 by taut\n").accepted);
}

TEST(CheckProofTest, EmptyProofIsRejected) {
  CheckReport r = CheckProof(GradedTheory(LogicMode::kRPL), Proof{});
  EXPECT_FALSE(r.accepted);
}

TEST(CheckProofTest, ProductOnlyInPlusModes) {
  const char* proof = "1: (0.5 * 0.4) <-> 0.2 @ 1 by book-prod\n";
  EXPECT_FALSE(Check("mode FP\n", proof).accepted);
  EXPECT_TRUE(Check("mode FP+\n", proof).accepted);
}

}  // namespace
}  // namespace pavelka
