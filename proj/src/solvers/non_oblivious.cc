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

#include "solvers/non_oblivious.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/random_source.h"
#include "matroids/matroids.h"
#include "objectives/guide.h"
#include "objectives/incremental.h"
#include "solvers/local_search.h"

namespace nols {

std::string VariantName(Variant variant) {
  return variant == Variant::kDeterministic ? "deterministic" : "randomized";
}

Variant ParseVariant(const std::string& name) {
  if (name == "deterministic" || name == "det") return Variant::kDeterministic;
  if (name == "randomized" || name == "rand") return Variant::kRandomized;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

int SolverConfig::Levels() const {
  if (levels_override.has_value()) return *levels_override;
  return 1 + static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
}

double SolverConfig::EpsilonPrime() const {
  return epsilon / (std::numbers::e * (1.0 + std::log(Levels())));
}

void SolverConfig::Validate() const {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const int levels = Levels();
  if (levels < 1 || levels > kMaxLevels) {
    throw std::invalid_argument("level count must be in [1, " +
                                std::to_string(kMaxLevels) + "]");
  }
}

double LiftedGuarantee(int levels, double epsilon, double opt_value,
                       double empty_value) {
  const double decay = std::pow(1.0 + 1.0 / levels, -levels);
  return (1.0 - decay) * opt_value + decay * empty_value - epsilon * opt_value;
}

namespace {

RunReport Solve(const ValueOracle& f, const LinearRegularizer* regularizer,
                const MatroidOracle& matroid, const SolverConfig& config) {
  config.Validate();
  if (f.ground_size() != matroid.ground_size()) {
    throw std::invalid_argument("objective and matroid sizes differ");
  }
  const int levels = config.Levels();
  const double eps_prime = config.EpsilonPrime();
  const AlphaSchedule alpha = AlphaSchedule::ForLevels(levels);

  QueryLedger ledger;
  const CountingValueOracle counted_f(f, ledger);
  const CountingMatroidOracle counted_m(matroid, ledger);
  LiftedIncremental guide(counted_f, alpha, regularizer);
  const LiftedMatroid lifted(counted_m, levels);

  LocalSearchOptions options;
  options.policy = config.policy;
  options.warm_start = config.warm_start;

  LocalSearchResult search;
  if (config.variant == Variant::kDeterministic) {
    search = DeterministicLocalSearch(guide, lifted, eps_prime, options);
  } else {
    RandomSource rng(config.seed);
    search = RandomizedLocalSearch(guide, lifted, eps_prime, rng, options,
                                   config.max_repetitions);
  }

  RunReport report;
  report.variant = config.variant;
  report.seed = config.seed;
  report.epsilon = config.epsilon;
  report.epsilon_prime = eps_prime;
  report.levels = levels;
  report.queries = ledger.Snapshot();
  report.iterations = search.iterations;
  report.repetitions = search.repetitions;
  report.failed = search.failed;
  report.guide_start_value = search.start_value;
  report.regularized = regularizer != nullptr;

  const LiftedIndexer& indexer = lifted.indexer();
  report.lifted_solution =
      search.failed ? ElementSet(indexer.lifted_size()) : search.set;
  report.output_set = indexer.ProjectAll(report.lifted_solution);
  report.objective_value = f.Evaluate(report.output_set);
  if (regularizer != nullptr) {
    report.regularizer_value = regularizer->Evaluate(report.output_set);
  }
  if (!search.failed) {
    LiftedIncremental raw_guide(f, alpha, regularizer);
    const LiftedMatroid raw_lifted(matroid, levels);
    report.certificate = ComputeLocalOptCertificate(
        raw_guide, raw_lifted, report.lifted_solution,
        eps_prime * search.start_value, config.policy);
  }
  return report;
}

}  // namespace

RunReport NonObliviousSolve(const ValueOracle& f, const MatroidOracle& matroid,
                            const SolverConfig& config) {
  return Solve(f, nullptr, matroid, config);
}

RunReport RegularizedSolve(const ValueOracle& f,
                           const LinearRegularizer& regularizer,
                           const MatroidOracle& matroid,
                           const SolverConfig& config) {
  if (regularizer.ground_size() != f.ground_size()) {
    throw std::invalid_argument("regularizer and objective sizes differ");
  }
  return Solve(f, &regularizer, matroid, config);
}

}  // namespace nols
