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

// Independent reference computations for tests: random formula
// generators, integer-scaled evaluation on grids, and brute-force
// enumeration of distributions and possibility assignments.

#ifndef PAVELKA_TESTS_ORACLES_H_
#define PAVELKA_TESTS_ORACLES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pavelka/crisp.h"
#include "pavelka/fuzzy.h"
#include "pavelka/rational.h"

namespace pavelka::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform in [lo, hi].
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  bool Coin() { return Int(0, 1) == 1; }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Int(0, static_cast<int>(v.size()) - 1))];
  }
  // k/den with k uniform in [0, den].
  Rational Grid(int den) { return Rational(Int(0, den), den); }

 private:
  std::mt19937_64 gen_;
};

Crisp RandomCrisp(Rng& rng, const std::vector<std::string>& vars, int depth);

struct FuzzyGenOptions {
  std::vector<std::string> vars;  // plain fuzzy variables
  std::vector<Crisp> bodies;      // atom bodies
  int const_den = 4;              // constants k/const_den
  bool product = false;           // allow * with a constant operand
};
Fuzzy RandomFuzzy(Rng& rng, const FuzzyGenOptions& options, int depth);

// Evaluation with every value an integer multiple of 1/scale. Leaves map to
// integers in [0, scale]. Throws std::domain_error when a constant or a
// product is not a multiple of 1/scale.
std::int64_t ScaledEval(const Fuzzy& f, std::int64_t scale,
                        const std::function<std::int64_t(const Fuzzy&)>& leaf);

// Calls fn for every vector of `parts` nonnegative integers summing to
// `total`.
void ForEachComposition(int total, int parts,
                        const std::function<void(const std::vector<int>&)>& fn);

// Bit w of the result is the truth of c in world w over vars (bit i of w is
// vars[i]).
std::uint32_t WorldMask(const Crisp& c, const std::vector<std::string>& vars);

// Sum of counts[w] over worlds w in mask.
int MaskedSum(std::uint32_t mask, const std::vector<int>& counts);

}  // namespace pavelka::testing

#endif  // PAVELKA_TESTS_ORACLES_H_
