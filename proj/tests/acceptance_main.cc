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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "core/query_ledger.h"
#include "core/random_source.h"
#include "fixtures.h"
#include "io/generator.h"
#include "io/report.h"
#include "matroids/matroids.h"
#include "matroids/operations.h"
#include "objectives/guide.h"
#include "objectives/incremental.h"
#include "solvers/idealized.h"
#include "solvers/local_search.h"
#include "solvers/non_oblivious.h"
#include "solvers/warm_start.h"
#include "verify/verify.h"

namespace nols {
namespace {

using testing::Fixture;

constexpr double kEpsilons[] = {0.5, 0.25, 0.2};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Relative slack used where values are non-integer sums of alpha-weighted
// terms.
constexpr double kSlack = 1e-9;

bool AtLeast(double a, double b) {
  return a >= b - kSlack * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string Num(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

struct Truth {
  double opt = 0;
  double empty = 0;
};

Truth Solve(const Fixture& fx) {
  return {BruteForceOpt(*fx.f, *fx.matroid).opt_value,
          fx.f->Evaluate(ElementSet(fx.f->ground_size()))};
}

Outcome DeterministicBound() {
  const auto suite = testing::SmallSuite();
  Outcome out;
  long runs = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const Fixture& fx : suite) {
    const Truth truth = Solve(fx);
    for (double eps : kEpsilons) {
      SolverConfig config;
      config.epsilon = eps;
      const RunReport run = NonObliviousSolve(*fx.f, *fx.matroid, config);
      const double bound =
          LiftedGuarantee(run.levels, eps, truth.opt, truth.empty);
      ++runs;
      worst = std::min(worst, run.objective_value - bound);
      if (!AtLeast(run.objective_value, bound)) {
        out.pass = false;
        out.detail = fx.name + " eps=" + Num(eps) + ": f(S)=" +
                     Num(run.objective_value) + " < " + Num(bound);
        return out;
      }
    }
  }
  out.detail = std::to_string(suite.size()) + " fixtures, " +
               std::to_string(runs) + " runs, min slack " + Num(worst);
  out.pass = suite.size() >= 30;
  return out;
}

Outcome ClassicRecovery() {
  const auto suite = testing::SmallSuite();
  Outcome out;
  long runs = 0;
  for (const Fixture& fx : suite) {
    const Truth truth = Solve(fx);
    for (double eps : kEpsilons) {
      SolverConfig config;
      config.epsilon = eps;
      config.levels_override = 1;
      const RunReport run = NonObliviousSolve(*fx.f, *fx.matroid, config);
      ++runs;
      if (!AtLeast(run.objective_value, (0.5 - eps) * truth.opt)) {
        out.pass = false;
        out.detail = fx.name + " eps=" + Num(eps) + ": f(S)=" +
                     Num(run.objective_value) + ", f(OPT)=" + Num(truth.opt);
        return out;
      }
    }
  }
  out.detail = std::to_string(runs) + " runs with one level";
  return out;
}

Outcome WarmStartThird() {
  const auto suite = testing::SmallSuite();
  Outcome out;
  double worst = std::numeric_limits<double>::infinity();
  for (const Fixture& fx : suite) {
    const Truth truth = Solve(fx);
    for (WarmStartKind kind :
         {WarmStartKind::kThresholdGreedy, WarmStartKind::kPlainGreedy}) {
      const ElementSet s0 = WarmStart(*fx.f, *fx.matroid, kind);
      const double value = fx.f->Evaluate(s0);
      if (!fx.matroid->IsIndependent(s0) || 3 * value < truth.opt) {
        out.pass = false;
        out.detail = fx.name + ": f(S0)=" + Num(value) +
                     ", f(OPT)=" + Num(truth.opt);
        return out;
      }
      if (truth.opt > 0) worst = std::min(worst, value / truth.opt);
    }
  }
  out.detail = "min f(S0)/f(OPT) = " + Num(worst);
  return out;
}

Outcome CertificateHolds() {
  const auto suite = testing::SmallSuite();
  Outcome out;
  long certified = 0;
  long cross_checked = 0;
  for (const Fixture& fx : suite) {
    const int n = fx.f->ground_size();
    for (double eps : kEpsilons) {
      for (Variant variant : {Variant::kDeterministic, Variant::kRandomized}) {
        SolverConfig config;
        config.epsilon = eps;
        config.variant = variant;
        config.seed = 17;
        const RunReport run = NonObliviousSolve(*fx.f, *fx.matroid, config);
        if (run.failed) continue;
        const AlphaSchedule alpha = AlphaSchedule::ForLevels(run.levels);
        const LiftedGuide guide(*fx.f, alpha);
        const LiftedMatroid lifted(*fx.matroid, run.levels);
        const double bound = run.epsilon_prime * run.guide_start_value;
        const LocalOptCertificate cert =
            LocalOptGap(guide, lifted, run.lifted_solution, bound);
        ++certified;
        if (!cert.passes || !run.certificate ||
            !AtLeast(cert.gap, run.certificate->gap) ||
            !AtLeast(run.certificate->gap, cert.gap)) {
          out.pass = false;
          out.detail = fx.name + " eps=" + Num(eps) + " " +
                       VariantName(variant) + ": gap " + Num(cert.gap) +
                       " vs bound " + Num(bound);
          return out;
        }
        if (n <= 10 && eps == 0.5) {
          const double exhaustive =
              ExhaustiveLocalOptGap(guide, lifted, run.lifted_solution);
          ++cross_checked;
          if (!AtLeast(cert.gap, exhaustive) || !AtLeast(exhaustive, cert.gap)) {
            out.pass = false;
            out.detail = fx.name + ": greedy gap " + Num(cert.gap) +
                         " != exhaustive " + Num(exhaustive);
            return out;
          }
        }
      }
    }
    // Single-level runs certify the condition for f itself.
    if (n <= 10) {
      SolverConfig config;
      config.epsilon = 0.25;
      config.levels_override = 1;
      const RunReport run = NonObliviousSolve(*fx.f, *fx.matroid, config);
      const LocalOptCertificate cert = LocalOptGap(
          *fx.f, *fx.matroid, run.output_set,
          run.epsilon_prime * run.guide_start_value);
      const double exhaustive =
          ExhaustiveLocalOptGap(*fx.f, *fx.matroid, run.output_set);
      ++certified;
      ++cross_checked;
      if (!cert.passes || cert.gap != exhaustive) {
        out.pass = false;
        out.detail = fx.name + " single level: gap " + Num(cert.gap) +
                     ", exhaustive " + Num(exhaustive);
        return out;
      }
    }
  }
  out.detail = std::to_string(certified) + " certificates, " +
               std::to_string(cross_checked) + " exhaustive cross-checks";
  return out;
}

std::unique_ptr<MatroidOracle> RandomMatroid(RandomSource& rng, int n) {
  switch (rng.Below(3)) {
    case 0:
      return std::make_unique<UniformMatroid>(n, 1 + rng.Below(n - 1));
    case 1: {
      const int blocks = 1 + static_cast<int>(rng.Below(4));
      std::vector<std::vector<ElementId>> parts(blocks);
      for (int u = 0; u < n; ++u) parts[rng.Below(blocks)].push_back(u);
      std::vector<int> caps(blocks);
      for (auto& c : caps) c = 1 + static_cast<int>(rng.Below(3));
      std::vector<std::vector<ElementId>> nonempty;
      std::vector<int> nonempty_caps;
      for (int b = 0; b < blocks; ++b) {
        if (parts[b].empty()) continue;
        nonempty.push_back(parts[b]);
        nonempty_caps.push_back(caps[b]);
      }
      return std::make_unique<PartitionMatroid>(n, nonempty, nonempty_caps);
    }
    default: {
      const int vertices = 3 + static_cast<int>(rng.Below(5));
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        const int a = static_cast<int>(rng.Below(vertices));
        int b = static_cast<int>(rng.Below(vertices - 1));
        if (b >= a) ++b;
        edges.emplace_back(a, b);
      }
      return std::make_unique<GraphicMatroid>(vertices, edges);
    }
  }
}

Outcome ExchangeEquivalence() {
  RandomSource rng(5);
  Outcome out;
  int cases = 0;
  int attempts = 0;
  while (cases < 1000 && attempts < 100000) {
    ++attempts;
    const int n = 4 + static_cast<int>(rng.Below(13));
    const auto matroid = RandomMatroid(rng, n);
    // Random base via a shuffled greedy pass.
    std::vector<ElementId> order(n);
    for (int u = 0; u < n; ++u) order[u] = u;
    for (int i = n; i > 1; --i) std::swap(order[i - 1], order[rng.Below(i)]);
    ElementSet s(n);
    for (ElementId u : order) {
      if (matroid->IsIndependent(s.With(u))) s.insert(u);
    }
    std::vector<ElementId> outside;
    for (ElementId v = 0; v < n; ++v) {
      if (!s.contains(v) && matroid->IsIndependent(ElementSet(n, {v}))) {
        outside.push_back(v);
      }
    }
    if (s.empty() || outside.empty()) continue;
    const ElementId v = outside[rng.Below(outside.size())];
    ElementSet candidates(n);
    s.ForEach([&](ElementId u) {
      if (rng.Below(3) != 0) candidates.insert(u);
    });
    if (candidates.empty()) continue;
    if (!matroid->IsIndependent((s - candidates).With(v))) continue;
    std::vector<double> weights(n, 0.0);
    for (auto& w : weights) w = static_cast<double>(rng.Below(6));

    // Linear scan over the candidates.
    double best = std::numeric_limits<double>::infinity();
    candidates.ForEach([&](ElementId u) {
      if (matroid->IsIndependent(s.Without(u).With(v))) {
        best = std::min(best, weights[u]);
      }
    });

    QueryLedger ledger;
    const CountingMatroidOracle counted(*matroid, ledger);
    const ElementId found = FindMinWeightExchange(
        counted, s, candidates, v, weights, MinWeightExchange::Check::kFull);
    const auto queries = ledger.Snapshot().independence_queries;
    const int limit =
        static_cast<int>(std::ceil(std::log2(candidates.size()))) + 2;
    ++cases;
    if (!candidates.contains(found) ||
        !matroid->IsIndependent(s.Without(found).With(v)) ||
        weights[found] != best || static_cast<int>(queries) > limit) {
      out.pass = false;
      out.detail = "case " + std::to_string(cases) + ": found weight " +
                   Num(weights[found]) + ", scan " + Num(best) + ", " +
                   std::to_string(queries) + " queries (limit " +
                   std::to_string(limit) + ")";
      return out;
    }
  }
  out.pass = cases == 1000;
  out.detail = std::to_string(cases) + " cases";
  return out;
}

Instance FailureRateInstance() {
  GeneratorOptions options;
  options.family = "coverage";
  options.n = 12;
  options.r = 3;
  options.seed = 7;
  return GenerateInstance(options);
}

Outcome FailureRate() {
  const Instance instance = FailureRateInstance();
  int failures = 0;
  constexpr int kSeeds = 300;
  for (int seed = 0; seed < kSeeds; ++seed) {
    RandomSource rng(seed);
    PlainIncremental objective(*instance.objective);
    const LocalSearchResult result = RandomizedLocalSearchOnce(
        objective, *instance.matroid, 0.5, rng);
    failures += result.failed;
  }
  const double rate = static_cast<double>(failures) / kSeeds;
  Outcome out;
  out.pass = rate <= 0.45;
  out.detail = "fail rate " + Num(rate) + " (" + std::to_string(failures) +
               "/" + std::to_string(kSeeds) + ")";
  return out;
}

Outcome QueryScaling() {
  Outcome out;
  std::vector<double> det;
  std::vector<double> rnd;
  std::string rows;
  for (int n : {64, 128, 256, 512}) {
    const int r = static_cast<int>(std::ceil(std::sqrt(n)));
    GeneratorOptions options;
    options.family = "coverage";
    options.n = n;
    options.r = r;
    options.seed = 3;
    const Instance instance = GenerateInstance(options);
    const double log_factor = 1.0 + std::log2(r);
    SolverConfig config;
    config.epsilon = 0.5;
    config.seed = 3;
    const RunReport d =
        NonObliviousSolve(*instance.objective, *instance.matroid, config);
    config.variant = Variant::kRandomized;
    const RunReport q =
        NonObliviousSolve(*instance.objective, *instance.matroid, config);
    det.push_back(d.queries.total() / (double(n) * r * log_factor));
    rnd.push_back(q.queries.total() /
                  ((n + r * std::ceil(std::sqrt(n))) * log_factor));
    rows += " n=" + std::to_string(n) + ":" + Num(det.back()) + "/" +
            Num(rnd.back());
  }
  const auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi / *lo;
  };
  const double det_spread = spread(det);
  const double rnd_spread = spread(rnd);
  out.pass = det_spread < 4 && rnd_spread < 4;
  out.detail = "spread det " + Num(det_spread) + ", rand " + Num(rnd_spread) +
               " (det/rand normalized:" + rows + ")";
  return out;
}

std::vector<Fixture> LiftableFixtures() {
  std::vector<Fixture> fixtures = testing::SmallSuite();
  std::uint64_t seed = 500;
  for (const char* family : {"coverage", "partition", "graphic"}) {
    for (int n : {4, 5}) {
      GeneratorOptions options;
      options.family = family;
      options.n = n;
      options.r = 2;
      options.seed = seed++;
      Instance instance = GenerateInstance(options);
      Fixture fx;
      fx.name = instance.name;
      fx.f = std::move(instance.objective);
      fx.matroid = std::move(instance.matroid);
      fixtures.push_back(std::move(fx));
    }
  }
  return fixtures;
}

Outcome LiftedStructure() {
  Outcome out;
  int checked = 0;
  for (const Fixture& fx : LiftableFixtures()) {
    const int n = fx.f->ground_size();
    const int rank = Rank(*fx.matroid);
    for (int levels = 2; n * levels <= 16; ++levels) {
      const LiftedGuide guide(*fx.f, AlphaSchedule::ForLevels(levels));
      const ValueOracleReport values =
          CheckValueOracle(guide, CheckMode::kExhaustive);
      const LiftedMatroid lifted(*fx.matroid, levels);
      const AxiomReport axioms = CheckMatroidAxioms(lifted, 16);
      ++checked;
      if (!values.ok || !axioms.ok || axioms.rank != rank) {
        out.pass = false;
        out.detail = fx.name + " levels=" + std::to_string(levels) + ": " +
                     (values.ok ? axioms.failure : values.failure) +
                     " rank " + std::to_string(axioms.rank) + " vs " +
                     std::to_string(rank);
        return out;
      }
    }
  }
  out.pass = checked > 0;
  out.detail = std::to_string(checked) + " (fixture, levels) pairs";
  return out;
}

// True when some Step-1 or Step-2 move strictly increases g.
bool HasImprovingMove(const ValueOracle& f, const MatroidOracle& matroid,
                      const AlphaSchedule& alpha,
                      const std::vector<ElementSet>& parts) {
  const int n = f.ground_size();
  const int levels = static_cast<int>(parts.size());
  const double value = GEval(f, alpha, parts);
  ElementSet all(n);
  for (const auto& p : parts) all |= p;
  for (int k = 0; k < levels; ++k) {
    for (ElementId u : parts[k].ToVector()) {
      for (int j = 0; j < levels; ++j) {
        if (j != k) {
          auto next = parts;
          next[k].erase(u);
          next[j].insert(u);
          if (GEval(f, alpha, next) > value + kSlack * std::max(1.0, value)) {
            return true;
          }
        }
        for (ElementId v = 0; v < n; ++v) {
          if (all.contains(v) ||
              !matroid.IsIndependent(all.Without(u).With(v))) {
            continue;
          }
          auto next = parts;
          next[k].erase(u);
          next[j].insert(v);
          if (GEval(f, alpha, next) > value + kSlack * std::max(1.0, value)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

Outcome IdealizedReference() {
  Outcome out;
  int runs = 0;
  for (const Fixture& fx : testing::SmallSuite()) {
    if (fx.f->ground_size() > 10) continue;
    const Truth truth = Solve(fx);
    for (int levels : {1, 2, 3}) {
      const auto parts = IdealizedLocalSearch(*fx.f, *fx.matroid, levels);
      const AlphaSchedule alpha = AlphaSchedule::ForLevels(levels);
      ElementSet all(fx.f->ground_size());
      for (const auto& p : parts) all |= p;
      const double value = fx.f->Evaluate(all);
      const double decay = std::pow(1.0 + 1.0 / levels, -levels);
      const double bound = (1 - decay) * truth.opt + decay * truth.empty;
      ++runs;
      if (HasImprovingMove(*fx.f, *fx.matroid, alpha, parts) ||
          !fx.matroid->IsIndependent(all) || !AtLeast(value, bound)) {
        out.pass = false;
        out.detail = fx.name + " levels=" + std::to_string(levels) +
                     ": f=" + Num(value) + ", bound " + Num(bound);
        return out;
      }
    }
  }
  out.pass = runs > 0;
  out.detail = std::to_string(runs) + " runs";
  return out;
}

Outcome RegularizedGuarantee() {
  Outcome out;
  const auto suite = testing::RegularizedSuite();
  double worst = std::numeric_limits<double>::infinity();
  long sets = 0;
  for (const Fixture& fx : suite) {
    SolverConfig config;
    config.epsilon = 0.25;
    const RunReport run =
        RegularizedSolve(*fx.f, *fx.regularizer, *fx.matroid, config);
    const RegularizedCheckResult check = CheckRegularizedGuarantee(
        *fx.f, *fx.regularizer, *fx.matroid, run.output_set, 0.25);
    worst = std::min(worst, check.worst_slack);
    sets += check.checked;
    if (!check.ok) {
      out.pass = false;
      out.detail = fx.name + ": violated, slack " + Num(check.worst_slack);
      return out;
    }
  }
  out.pass = suite.size() >= 10;
  out.detail = std::to_string(suite.size()) + " fixtures, " +
               std::to_string(sets) + " sets, min slack " + Num(worst);
  return out;
}

Outcome Determinism() {
  Outcome out;
  int compared = 0;
  for (const char* family : {"coverage", "partition", "graphic"}) {
    GeneratorOptions options;
    options.family = family;
    options.n = 40;
    options.r = 5;
    options.seed = 9;
    const std::string first_instance =
        SerializeInstance(GenerateInstance(options));
    if (first_instance != SerializeInstance(GenerateInstance(options))) {
      out.pass = false;
      out.detail = std::string(family) + ": generated instances differ";
      return out;
    }
    for (Variant variant : {Variant::kDeterministic, Variant::kRandomized}) {
      std::string texts[2];
      for (auto& text : texts) {
        const Instance instance = ParseInstance(first_instance);
        SolverConfig config;
        config.epsilon = 0.25;
        config.variant = variant;
        config.seed = 12345;
        StoredReport stored;
        stored.instance = instance.name;
        stored.n = instance.n;
        stored.run =
            NonObliviousSolve(*instance.objective, *instance.matroid, config);
        text = SerializeReport(stored);
      }
      ++compared;
      if (texts[0] != texts[1]) {
        out.pass = false;
        out.detail = std::string(family) + " " + VariantName(variant) +
                     ": reports differ";
        return out;
      }
    }
  }
  out.detail = std::to_string(compared) + " report pairs byte-identical";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;  // <= 0: none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace nols

int main() {
  using nols::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "approximation bound, deterministic", 60, nols::DeterministicBound},
      {2, "single-level local search recovery", 10, nols::ClassicRecovery},
      {3, "warm start reaches a third of the optimum", 0, nols::WarmStartThird},
      {4, "local-optimality certificates", 0, nols::CertificateHolds},
      {5, "binary-search exchange equivalence", 10, nols::ExchangeEquivalence},
      {6, "randomized failure rate", 60, nols::FailureRate},
      {7, "query scaling", 300, nols::QueryScaling},
      {8, "lifted objective and matroid structure", 0, nols::LiftedStructure},
      {9, "idealized reference search", 0, nols::IdealizedReference},
      {10, "regularized guarantee", 60, nols::RegularizedGuarantee},
      {11, "determinism", 0, nols::Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    nols::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; exceeded " + nols::Num(c.time_limit_seconds) + " s";
    }
    failed += !outcome.pass;
    std::printf("criterion %2d: %s  %s [%s] (%.2f s)\n", c.id,
                outcome.pass ? "PASS" : "FAIL", c.name, outcome.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
