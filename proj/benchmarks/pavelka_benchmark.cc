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

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pavelka/encoding.h"
#include "pavelka/kernel.h"
#include "pavelka/necengine.h"
#include "pavelka/optimizer.h"
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

// Dense n x n program: max sum x_i with sum_j (1 + (i + j) % 3) x_j <= n.
void BM_SolveLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LinearProgram lp;
  LinExpr objective;
  for (int i = 0; i < n; ++i) {
    lp.AddVariable("x" + std::to_string(i));
    objective += LinExpr::Var(i);
  }
  for (int i = 0; i < n; ++i) {
    LinExpr row;
    for (int j = 0; j < n; ++j) row += LinExpr::Var(j, Rational(1 + (i + j) % 3));
    lp.AddConstraint(row, Relation::kLessEqual, Rational(n));
  }
  lp.SetObjective(objective, Sense::kMaximize);
  for (auto _ : state) benchmark::DoNotOptimize(SolveLp(lp));
}
BENCHMARK(BM_SolveLp)->Arg(4)->Arg(8)->Arg(16);

void BM_FpTruthDegreeFrechet(benchmark::State& state) {
  GradedTheory t = ParseTheory("mode FP\naxiom f(p) >= 0.7\naxiom f(q) >= 0.6\n");
  Fuzzy target = ParseFormula("f(p & q)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(FpTruthDegree(t, target, BoundKind::kLower));
  }
}
BENCHMARK(BM_FpTruthDegreeFrechet);

// Chain f(p0) >= 9/10, f(p_i -> p_{i+1}) >= 9/10 over n variables.
void BM_FpTruthDegreeChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GradedTheory t(LogicMode::kFP);
  t.Add(ParseFormula("f(p0)"), Rational(9, 10));
  for (int i = 0; i + 1 < n; ++i) {
    t.Add(ParseFormula("f(p" + std::to_string(i) + " -> p" +
                       std::to_string(i + 1) + ")"),
          Rational(9, 10));
  }
  Fuzzy target = ParseFormula("f(p" + std::to_string(n - 1) + ")");
  for (auto _ : state) {
    benchmark::DoNotOptimize(FpTruthDegree(t, target, BoundKind::kLower));
  }
}
BENCHMARK(BM_FpTruthDegreeChain)->Arg(2)->Arg(4)->Arg(6);

void BM_RplTruthDegree(benchmark::State& state) {
  GradedTheory t = ParseTheory(
      "mode RPL\naxiom a \\/ b >= 0.7\naxiom ~(a & b) >= 0.8\naxiom b -> c >= 0.9\n");
  Fuzzy target = ParseFormula("a /\\ c");
  for (auto _ : state) benchmark::DoNotOptimize(RplTruthDegree(t, target));
}
BENCHMARK(BM_RplTruthDegree);

void BM_Entails(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Crisp> premises;
  for (int i = 0; i + 1 < n; ++i) {
    premises.push_back(Crisp::Implies(Crisp::Var("p" + std::to_string(i)),
                                      Crisp::Var("p" + std::to_string(i + 1))));
  }
  premises.push_back(Crisp::Var("p0"));
  Crisp goal = Crisp::Var("p" + std::to_string(n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(Entails(premises, goal));
}
BENCHMARK(BM_Entails)->Arg(4)->Arg(8)->Arg(12);

void BM_CheckProofProbabilitySum(benchmark::State& state) {
  std::string dir = PAVELKA_CORPUS_DIR;
  GradedTheory t = ParseTheory(Slurp(dir + "/fp.glt"));
  Proof proof = ParseProof(Slurp(dir + "/ex39.glp"));
  for (auto _ : state) benchmark::DoNotOptimize(CheckProof(t, proof));
}
BENCHMARK(BM_CheckProofProbabilitySum);

void BM_SaturateFrechet(benchmark::State& state) {
  GradedTheory t = ParseTheory("mode FP\naxiom f(p) >= 0.7\naxiom f(q) >= 0.6\n");
  std::vector<Fuzzy> seeds = {ParseFormula("f(p & q)")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Saturate(t, SaturateOptions{}, seeds));
  }
}
BENCHMARK(BM_SaturateFrechet);

void BM_FpsTruthDegree(benchmark::State& state) {
  GradedTheory t = ParseTheory(
      "mode FPS\naxiom f(p | q) >= 4/5\naxiom f(!p | r) >= 3/5\n"
      "axiom f(!q | s) >= 1/2\naxiom f(!r | !s | t) >= 2/5\n");
  Crisp target = ParseCrisp("p | t");
  for (auto _ : state) benchmark::DoNotOptimize(FpsTruthDegree(t, target));
}
BENCHMARK(BM_FpsTruthDegree);

}  // namespace
}  // namespace pavelka

BENCHMARK_MAIN();
