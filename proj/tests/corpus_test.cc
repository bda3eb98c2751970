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

// Every shipped proof is accepted and its conclusion degree equals the
// semantic truth degree of the conclusion in the matching theory.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "oracles.h"
#include "pavelka/encoding.h"
#include "pavelka/kernel.h"
#include "pavelka/necengine.h"
#include "pavelka/probengine.h"
#include "pavelka/semantics.h"
#include "pavelka/syntax.h"

namespace pavelka {
namespace {

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CorpusTest : public ::testing::TestWithParam<const char*> {};

TEST_P(CorpusTest, AcceptedAtSemanticDegree) {
  std::string name = GetParam();
  std::string dir = PAVELKA_CORPUS_DIR;
  std::string theory_name = name == "ex39" ? "fp" : name;
  GradedTheory theory = ParseTheory(Slurp(dir + "/" + theory_name + ".glt"));
  Proof proof = ParseProof(Slurp(dir + "/" + name + ".glp"));
  CheckReport report = CheckProof(theory, proof);
  ASSERT_TRUE(report.accepted) << report.reason;
  const Fuzzy& f = report.conclusion->formula;
  Rational semantic;
  switch (theory.mode()) {
    case LogicMode::kRPL:
    case LogicMode::kRPLPlus:
      semantic = RplTruthDegree(theory, f).value;
      break;
    case LogicMode::kFP:
    case LogicMode::kFPPlus:
      semantic = FpTruthDegree(theory, f, BoundKind::kLower).value;
      break;
    case LogicMode::kFPS:
      ASSERT_EQ(f.kind(), Fuzzy::Kind::kAtom);
      semantic = FpsTruthDegree(theory, f.body());
      break;
  }
  EXPECT_EQ(report.conclusion->degree, semantic);
}

// Every step of an accepted proof holds to its degree in random models.
TEST_P(CorpusTest, StepsHoldInRandomModels) {
  std::string name = GetParam();
  std::string dir = PAVELKA_CORPUS_DIR;
  std::string theory_name = name == "ex39" ? "fp" : name;
  GradedTheory theory = ParseTheory(Slurp(dir + "/" + theory_name + ".glt"));
  Proof proof = ParseProof(Slurp(dir + "/" + name + ".glp"));
  AtomSet atoms;
  for (const auto& [f, d] : theory.axioms()) CollectAtoms(f, atoms);
  for (const ProofStep& step : proof.steps) CollectAtoms(step.formula, atoms);
  std::vector<std::string> vars(atoms.crisp_vars.begin(), atoms.crisp_vars.end());
  std::size_t worlds = std::size_t{1} << vars.size();
  testing::Rng rng(61);
  int models = 0;
  for (int i = 0; i < 20000 && models < 500; ++i) {
    Evaluation e;
    switch (theory.mode()) {
      case LogicMode::kRPL:
      case LogicMode::kRPLPlus:
        for (const auto& v : atoms.fuzzy_vars) e.SetVar(v, rng.Grid(20));
        break;
      case LogicMode::kFP:
      case LogicMode::kFPPlus: {
        std::vector<int> counts(worlds);
        int total = 0;
        for (int& c : counts) total += c = rng.Int(0, 10);
        if (total == 0) counts[0] = total = 1;
        std::vector<Rational> w;
        for (int c : counts) w.emplace_back(c, total);
        e = InducedEval(ProbabilityModel(vars, w), atoms.bodies);
        break;
      }
      case LogicMode::kFPS: {
        std::vector<Rational> pi(worlds);
        for (auto& x : pi) x = rng.Grid(10);
        pi[static_cast<std::size_t>(rng.Int(0, static_cast<int>(worlds) - 1))] = 1;
        e = InducedNecEval(NecessityModel(vars, pi), atoms.bodies);
        break;
      }
    }
    if (!IsModel(e, theory)) continue;
    ++models;
    for (const ProofStep& step : proof.steps) {
      EXPECT_GE(Eval(e, step.formula), step.degree) << Print(step.formula);
    }
  }
  EXPECT_GE(models, 50);
}

INSTANTIATE_TEST_SUITE_P(Shipped, CorpusTest,
                         ::testing::Values("ex39", "mp_chain", "frechet",
                                           "conj_elim", "complement", "rpl_tci",
                                           "rpl_book", "rpl_strong_conj",
                                           "fps_min", "fpplus_cond"));

}  // namespace
}  // namespace pavelka
