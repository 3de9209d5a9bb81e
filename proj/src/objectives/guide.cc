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

#include "objectives/guide.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nols {
namespace {

double Binomial(int n, int k) {
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

// sum over non-empty J of alpha_|J| f(union of parts in J). Parts may overlap.
double SumOverLevelSubsets(const ValueOracle& f, const AlphaSchedule& alpha,
                           const std::vector<ElementSet>& parts) {
  const int levels = static_cast<int>(parts.size());
  const std::uint32_t subsets = std::uint32_t{1} << levels;
  std::vector<ElementSet> unions(subsets);
  unions[0] = ElementSet(f.ground_size());
  double total = 0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const int low = std::countr_zero(mask);
    unions[mask] = unions[mask & (mask - 1)] | parts[low];
    total += alpha[std::popcount(mask)] * f.Evaluate(unions[mask]);
  }
  return total;
}

std::vector<ElementSet> LevelParts(const LiftedIndexer& indexer,
                                   const ElementSet& lifted) {
  std::vector<ElementSet> parts(indexer.levels(),
                                ElementSet(indexer.base_size()));
  lifted.ForEach([&](ElementId id) {
    const LiftedElement x = indexer.Unflatten(id);
    parts[x.level - 1].insert(x.base);
  });
  return parts;
}

LiftedIndexer IndexerFor(const ValueOracle& f, const AlphaSchedule& alpha,
                         const ElementSet& lifted) {
  LiftedIndexer indexer(f.ground_size(), alpha.levels());
  if (lifted.universe_size() != indexer.lifted_size()) {
    throw std::invalid_argument("lifted set has the wrong universe size");
  }
  return indexer;
}

}  // namespace

AlphaSchedule AlphaSchedule::ForLevels(int levels) {
  if (levels < 1 || levels > kMaxLevels) {
    throw std::invalid_argument("level count must be in [1, " +
                                std::to_string(kMaxLevels) + "], got " +
                                std::to_string(levels));
  }
  std::vector<double> alpha(levels + 2, 0.0);
  const double growth = 1.0 + 1.0 / levels;
  for (int i = 1; i <= levels; ++i) {
    alpha[i] = std::pow(growth, i - 1) / Binomial(levels - 1, i - 1);
  }
  return AlphaSchedule(levels, std::move(alpha));
}

double AlphaSchedule::SubsetWeightSum() const {
  double total = 0;
  for (int i = 1; i <= levels_; ++i) total += Binomial(levels_, i) * alpha_[i];
  return total;
}

double GEval(const ValueOracle& f, const AlphaSchedule& alpha,
             const std::vector<ElementSet>& parts) {
  if (static_cast<int>(parts.size()) != alpha.levels()) {
    throw std::invalid_argument("expected one part per level");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (parts[i].Intersects(parts[j])) {
        throw std::invalid_argument("parts of g must be disjoint");
      }
    }
  }
  return SumOverLevelSubsets(f, alpha, parts);
}

double GPrimeEval(const ValueOracle& f, const AlphaSchedule& alpha,
                  const ElementSet& lifted) {
  const LiftedIndexer indexer = IndexerFor(f, alpha, lifted);
  return SumOverLevelSubsets(f, alpha, LevelParts(indexer, lifted));
}

double GPrimeMarginal(const ValueOracle& f, const AlphaSchedule& alpha,
                      LiftedElement x, const ElementSet& lifted) {
  const LiftedIndexer indexer = IndexerFor(f, alpha, lifted);
  const LevelMask own = LevelMask{1} << (x.level - 1);
  const LevelMask others = indexer.AllLevels() & ~own;
  double total = 0;
  // Enumerate J = own ∪ sub for every sub ⊆ others.
  LevelMask sub = others;
  while (true) {
    const LevelMask mask = own | sub;
    total += alpha[std::popcount(mask)] *
             Marginal(f, x.base, indexer.Project(lifted, mask));
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
  return total;
}

LiftedGuide::LiftedGuide(const ValueOracle& f, const AlphaSchedule& alpha,
                         const LinearRegularizer* regularizer)
    : f_(f),
      alpha_(alpha),
      regularizer_(regularizer),
      indexer_(f.ground_size(), alpha.levels()),
      regularizer_scale_(alpha[alpha.levels()] * (alpha.levels() + 1)) {
  if (regularizer_ != nullptr &&
      regularizer_->ground_size() != f.ground_size()) {
    throw std::invalid_argument("regularizer and objective sizes differ");
  }
}

double LiftedGuide::Evaluate(const ElementSet& lifted) const {
  double value = GPrimeEval(f_, alpha_, lifted);
  if (regularizer_ != nullptr) {
    double linear = 0;
    lifted.ForEach([&](ElementId id) {
      linear += regularizer_->weight(indexer_.Unflatten(id).base);
    });
    value += regularizer_scale_ * linear;
  }
  return value;
}

}  // namespace nols
