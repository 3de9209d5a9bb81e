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

#include "verify/verify.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "objectives/incremental.h"

namespace nols {
namespace {

void DepthFirst(const MatroidOracle& matroid, ElementSet& current,
                ElementId next,
                const std::function<void(const ElementSet&)>& visit,
                long& count) {
  visit(current);
  ++count;
  for (ElementId u = next; u < matroid.ground_size(); ++u) {
    current.insert(u);
    if (matroid.IsIndependent(current)) {
      DepthFirst(matroid, current, u + 1, visit, count);
    }
    current.erase(u);
  }
}

ElementSet FromMask(int n, std::uint32_t mask) {
  ElementSet s(n);
  for (int u = 0; u < n; ++u) {
    if ((mask >> u) & 1u) s.insert(u);
  }
  return s;
}

std::string Describe(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.ForEach([&](ElementId u) {
    if (!first) out += ",";
    out += std::to_string(u);
    first = false;
  });
  return out + "}";
}

}  // namespace

long EnumerateIndependentSets(
    const MatroidOracle& matroid,
    const std::function<void(const ElementSet&)>& visit) {
  ElementSet current(matroid.ground_size());
  if (!matroid.IsIndependent(current)) return 0;
  long count = 0;
  DepthFirst(matroid, current, 0, visit, count);
  return count;
}

BruteForceResult BruteForceOpt(const ValueOracle& f,
                               const MatroidOracle& matroid) {
  if (matroid.ground_size() > kBruteForceMaxGround) {
    throw std::invalid_argument("brute force is limited to n <= 22");
  }
  if (f.ground_size() != matroid.ground_size()) {
    throw std::invalid_argument("objective and matroid sizes differ");
  }
  BruteForceResult best;
  bool have = false;
  best.enumerated_count =
      EnumerateIndependentSets(matroid, [&](const ElementSet& s) {
        const double value = f.Evaluate(s);
        if (!have || value > best.opt_value) {
          have = true;
          best.opt_value = value;
          best.opt_set = s;
        }
      });
  if (!have) best.opt_set = ElementSet(matroid.ground_size());
  return best;
}

LocalOptCertificate LocalOptGap(const ValueOracle& f,
                                const MatroidOracle& matroid,
                                const ElementSet& s, double bound) {
  if (!matroid.IsIndependent(s)) {
    throw std::invalid_argument("certificate requested for a dependent set");
  }
  PlainIncremental objective(f);
  return ComputeLocalOptCertificate(objective, matroid, s, bound);
}

double ExhaustiveLocalOptGap(const ValueOracle& f, const MatroidOracle& matroid,
                             const ElementSet& s) {
  const int n = matroid.ground_size();
  std::vector<double> weights(n);
  double own = 0;
  for (ElementId v = 0; v < n; ++v) {
    weights[v] = MarginalWithout(f, v, s);
    if (s.contains(v)) own += weights[v];
  }
  double best = -std::numeric_limits<double>::infinity();
  EnumerateIndependentSets(matroid, [&](const ElementSet& t) {
    double total = 0;
    t.ForEach([&](ElementId v) { total += weights[v]; });
    best = std::max(best, total);
  });
  return best - own;
}

AxiomReport CheckMatroidAxioms(const MatroidOracle& matroid, int max_ground) {
  const int n = matroid.ground_size();
  if (n > max_ground || n > 24) {
    throw std::invalid_argument("axiom check limited to n <= " +
                                std::to_string(max_ground));
  }
  AxiomReport report;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<char> independent(subsets);
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    independent[mask] = matroid.IsIndependent(FromMask(n, mask));
    if (independent[mask]) {
      by_size[std::popcount(mask)].push_back(mask);
      ++report.independent_count;
      report.rank = std::max(report.rank, std::popcount(mask));
    }
  }
  if (!independent[0]) {
    report.ok = false;
    report.failure = "empty set is not independent";
    return report;
  }
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (!independent[mask]) continue;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::uint32_t smaller = mask & ~(bits & (~bits + 1));
      if (!independent[smaller]) {
        report.ok = false;
        report.first = FromMask(n, mask);
        report.second = FromMask(n, smaller);
        report.failure = "not down-closed: " + Describe(*report.first) +
                         " independent but " + Describe(*report.second) +
                         " is not";
        return report;
      }
    }
  }
  for (int size = 0; size < n; ++size) {
    for (std::uint32_t s : by_size[size]) {
      for (std::uint32_t t : by_size[size + 1]) {
        bool found = false;
        for (std::uint32_t bits = t & ~s; bits != 0 && !found;
             bits &= bits - 1) {
          found = independent[s | (bits & (~bits + 1))];
        }
        if (!found) {
          report.ok = false;
          report.first = FromMask(n, s);
          report.second = FromMask(n, t);
          report.failure = "exchange axiom fails: no element of " +
                           Describe(*report.second) + " extends " +
                           Describe(*report.first);
          return report;
        }
      }
    }
  }
  return report;
}

ValueOracleReport CheckValueOracle(const ValueOracle& f, CheckMode mode,
                                   RandomSource* rng, int samples,
                                   NumericPolicy policy) {
  const int n = f.ground_size();
  ValueOracleReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.failure = std::move(message);
  };

  if (mode == CheckMode::kExhaustive) {
    if (n > kExhaustiveValueCheckMaxGround) {
      throw std::invalid_argument("exhaustive value check limited to n <= 16");
    }
    const std::uint32_t subsets = std::uint32_t{1} << n;
    std::vector<double> value(subsets);
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      value[mask] = f.Evaluate(FromMask(n, mask));
      ++report.checks;
      if (value[mask] < 0) {
        fail("negative value at " + Describe(FromMask(n, mask)));
        return report;
      }
    }
    for (std::uint32_t s = 0; s < subsets; ++s) {
      for (int u = 0; u < n; ++u) {
        const std::uint32_t bu = std::uint32_t{1} << u;
        if (s & bu) continue;
        const double gain_u = value[s | bu] - value[s];
        ++report.checks;
        if (!policy.AtLeast(gain_u, 0)) {
          fail("not monotone: adding " + std::to_string(u) + " to " +
               Describe(FromMask(n, s)) + " decreases f");
          return report;
        }
        for (int w = 0; w < n; ++w) {
          const std::uint32_t bw = std::uint32_t{1} << w;
          if (w == u || (s & bw)) continue;
          const double later = value[s | bu | bw] - value[s | bw];
          ++report.checks;
          if (!policy.AtLeast(gain_u, later)) {
            fail("not submodular: marginal of " + std::to_string(u) +
                 " grows from " + Describe(FromMask(n, s)) + " to " +
                 Describe(FromMask(n, s | bw)));
            return report;
          }
        }
      }
    }
    return report;
  }

  if (rng == nullptr) {
    throw std::invalid_argument("sampled value check needs a random source");
  }
  for (int i = 0; i < samples; ++i) {
    ElementSet t(n);
    ElementSet s(n);
    for (ElementId u = 0; u < n; ++u) {
      if (rng->Below(2) == 1) {
        t.insert(u);
        if (rng->Below(2) == 1) s.insert(u);
      }
    }
    const ElementSet outside = ElementSet::Full(n) - t;
    if (outside.empty()) continue;
    const ElementId u = SampleWithoutReplacement(*rng, outside, 1).ToVector()[0];
    const double fs = f.Evaluate(s);
    const double ft = f.Evaluate(t);
    const double gain_s = f.Evaluate(s.With(u)) - fs;
    const double gain_t = f.Evaluate(t.With(u)) - ft;
    ++report.checks;
    if (fs < 0 || ft < 0) {
      fail("negative value at " + Describe(fs < 0 ? s : t));
      return report;
    }
    if (!policy.AtLeast(ft, fs)) {
      fail("not monotone: " + Describe(s) + " above its superset " +
           Describe(t));
      return report;
    }
    if (!policy.AtLeast(gain_s, gain_t)) {
      fail("not submodular: marginal of " + std::to_string(u) + " grows from " +
           Describe(s) + " to " + Describe(t));
      return report;
    }
  }
  return report;
}

ApproximationReport MakeApproximationReport(const RunReport& run,
                                            const BruteForceResult& truth,
                                            double epsilon, int levels) {
  if (run.output_set.universe_size() != truth.opt_set.universe_size()) {
    throw std::invalid_argument("run and brute force are different instances");
  }
  ApproximationReport report;
  report.target = 1.0 - std::pow(1.0 + 1.0 / levels, -levels) - epsilon;
  report.ratio =
      truth.opt_value == 0 ? 1.0 : run.objective_value / truth.opt_value;
  report.pass = NumericPolicy::Floating().AtLeast(report.ratio, report.target);
  return report;
}

RegularizedCheckResult CheckRegularizedGuarantee(
    const ValueOracle& f, const LinearRegularizer& regularizer,
    const MatroidOracle& matroid, const ElementSet& s, double epsilon,
    NumericPolicy policy) {
  const double factor = 1.0 - 1.0 / std::numbers::e - epsilon;
  const double achieved = f.Evaluate(s) + regularizer.Evaluate(s);
  RegularizedCheckResult result;
  bool first = true;
  result.checked = EnumerateIndependentSets(matroid, [&](const ElementSet& t) {
    const double required = factor * f.Evaluate(t) + regularizer.Evaluate(t);
    const double slack = achieved - required;
    if (first || slack < result.worst_slack) result.worst_slack = slack;
    first = false;
    if (!policy.AtLeast(achieved, required) && result.ok) {
      result.ok = false;
      result.violator = t;
    }
  });
  return result;
}

}  // namespace nols
