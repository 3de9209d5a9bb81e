// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOLS_VERIFY_VERIFY_H_
#define NOLS_VERIFY_VERIFY_H_

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "core/element_set.h"
#include "core/numeric_policy.h"
#include "core/oracles.h"
#include "core/random_source.h"
#include "objectives/objectives.h"
#include "solvers/certificate.h"
#include "solvers/non_oblivious.h"

namespace nols {

inline constexpr int kBruteForceMaxGround = 22;
inline constexpr int kAxiomCheckMaxGround = 12;
// Exhaustive value-oracle checks go up to 16 so that lifted guides with
// n * l <= 16 can be covered.
inline constexpr int kExhaustiveValueCheckMaxGround = 16;

// Visits every independent set once, depth-first over ascending ids, never
// extending a dependent set. Returns the number of sets visited.
long EnumerateIndependentSets(
    const MatroidOracle& matroid,
    const std::function<void(const ElementSet&)>& visit);

struct BruteForceResult {
  ElementSet opt_set;
  double opt_value = 0;
  long enumerated_count = 0;
};

// Exact max of f over the independent sets (n <= 22, std::invalid_argument
// beyond). Ties keep the first set in enumeration order.
BruteForceResult BruteForceOpt(const ValueOracle& f,
                               const MatroidOracle& matroid);

// Certificate for s with the greedy witness. Throws std::invalid_argument if
// s is dependent.
LocalOptCertificate LocalOptGap(const ValueOracle& f,
                                const MatroidOracle& matroid,
                                const ElementSet& s,
                                double bound = std::numeric_limits<double>::infinity());

// max over every enumerated T of sum_{v in T} f(v | S - v), minus
// sum_{u in S} f(u | S - u). Cross-check for LocalOptGap at small n.
double ExhaustiveLocalOptGap(const ValueOracle& f, const MatroidOracle& matroid,
                             const ElementSet& s);

struct AxiomReport {
  bool ok = true;
  std::string failure;  // empty when ok
  std::optional<ElementSet> first;   // counterexample sets, when any
  std::optional<ElementSet> second;
  long independent_count = 0;
  int rank = 0;
};

// Exhaustive check of non-emptiness, down-closure and exchange (n <= 12,
// or n <= max_ground when given).
AxiomReport CheckMatroidAxioms(const MatroidOracle& matroid,
                               int max_ground = kAxiomCheckMaxGround);

enum class CheckMode { kExhaustive, kSampled };

struct ValueOracleReport {
  bool ok = true;
  std::string failure;
  long checks = 0;
};

// Non-negativity, monotonicity and submodularity. Exhaustive mode enumerates
// all subsets (n <= 16); sampled mode draws `samples` triples S ⊆ T, u ∉ T.
ValueOracleReport CheckValueOracle(const ValueOracle& f, CheckMode mode,
                                   RandomSource* rng = nullptr,
                                   int samples = 10000,
                                   NumericPolicy policy = NumericPolicy::Floating());

struct ApproximationReport {
  double ratio = 1;
  double target = 0;
  bool pass = true;
};

// ratio = f(S) / f(OPT) (1 when f(OPT) = 0); target
// (1 - (1 + 1/l)^-l) - eps.
ApproximationReport MakeApproximationReport(const RunReport& run,
                                            const BruteForceResult& truth,
                                            double epsilon, int levels);

struct RegularizedCheckResult {
  bool ok = true;
  long checked = 0;
  std::optional<ElementSet> violator;
  double worst_slack = 0;  // min over T of lhs - rhs
};

// f(S) + l(S) >= (1 - 1/e - eps) f(T) + l(T) for every independent T.
RegularizedCheckResult CheckRegularizedGuarantee(
    const ValueOracle& f, const LinearRegularizer& regularizer,
    const MatroidOracle& matroid, const ElementSet& s, double epsilon,
    NumericPolicy policy = NumericPolicy::Floating());

}  // namespace nols

#endif  // NOLS_VERIFY_VERIFY_H_
