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

#ifndef NOLS_SOLVERS_NON_OBLIVIOUS_H_
#define NOLS_SOLVERS_NON_OBLIVIOUS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "core/element_set.h"
#include "core/numeric_policy.h"
#include "core/oracles.h"
#include "core/query_ledger.h"
#include "objectives/objectives.h"
#include "solvers/certificate.h"
#include "solvers/warm_start.h"

namespace nols {

enum class Variant { kDeterministic, kRandomized };

std::string VariantName(Variant variant);
Variant ParseVariant(const std::string& name);

struct SolverConfig {
  double epsilon = 0.2;
  Variant variant = Variant::kDeterministic;
  std::uint64_t seed = 0;
  std::optional<int> levels_override;
  WarmStartKind warm_start = WarmStartKind::kThresholdGreedy;
  // Randomized only: attempt budget; negative means ceil(log3(1 / eps')).
  int max_repetitions = -1;
  NumericPolicy policy = NumericPolicy::Floating();

  // 1 + ceil(1 / eps) unless overridden.
  int Levels() const;
  // eps / (e (1 + ln l)).
  double EpsilonPrime() const;
  // Throws std::invalid_argument on an unusable configuration.
  void Validate() const;
};

struct RunReport {
  Variant variant = Variant::kDeterministic;
  std::uint64_t seed = 0;
  double epsilon = 0;
  double epsilon_prime = 0;
  int levels = 1;

  ElementSet output_set;
  ElementSet lifted_solution;  // over n * levels
  double objective_value = 0;  // f(output)
  double regularizer_value = 0;
  bool regularized = false;

  QueryCounts queries;
  long iterations = 0;
  int repetitions = 0;
  bool failed = false;

  double guide_start_value = 0;  // guide at the warm start
  std::optional<LocalOptCertificate> certificate;  // guide-level
};

// Local search on the lifted guide g' over N x [l] and the lifted matroid,
// with alpha from the level count and precision eps'. Returns the projection
// of the lifted solution. The ledger counts calls to f and to the matroid;
// the certificate is computed afterwards on uncounted oracles.
RunReport NonObliviousSolve(const ValueOracle& f, const MatroidOracle& matroid,
                            const SolverConfig& config);

// Same, guided by g' + alpha_l (l + 1) l'. Maximizes f + l.
RunReport RegularizedSolve(const ValueOracle& f,
                           const LinearRegularizer& regularizer,
                           const MatroidOracle& matroid,
                           const SolverConfig& config);

// Lower bound (1 - (1 + 1/l)^-l) f(OPT) + (1 + 1/l)^-l f(empty) - eps f(OPT).
double LiftedGuarantee(int levels, double epsilon, double opt_value,
                       double empty_value);

}  // namespace nols

#endif  // NOLS_SOLVERS_NON_OBLIVIOUS_H_
