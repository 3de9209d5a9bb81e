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

#include "objectives/incremental.h"

#include <bit>
#include <stdexcept>

namespace nols {

PlainIncremental::PlainIncremental(const ValueOracle& f) : f_(f) {
  current_ = ElementSet(f.ground_size());
}

void PlainIncremental::Reset(const ElementSet& s) {
  current_ = s;
  value_ = f_.Evaluate(current_);
}

double PlainIncremental::Gain(ElementId v) {
  if (current_.contains(v)) return 0;
  return f_.Evaluate(current_.With(v)) - value_;
}

double PlainIncremental::Loss(ElementId u) {
  if (!current_.contains(u)) {
    throw std::invalid_argument("Loss() of an element outside the solution");
  }
  return value_ - f_.Evaluate(current_.Without(u));
}

void PlainIncremental::Add(ElementId v) {
  current_.insert(v);
  value_ = f_.Evaluate(current_);
}

void PlainIncremental::Remove(ElementId u) {
  current_.erase(u);
  value_ = f_.Evaluate(current_);
}

LiftedIncremental::LiftedIncremental(const ValueOracle& f,
                                     const AlphaSchedule& alpha,
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
  if (regularizer_ != nullptr && regularizer_->IsZero()) regularizer_ = nullptr;
  current_ = ElementSet(indexer_.lifted_size());
  levels_of_.assign(indexer_.base_size(), 0);
  const std::size_t subsets = std::size_t{1} << indexer_.levels();
  projections_.assign(subsets, ElementSet(indexer_.base_size()));
  projection_values_.assign(subsets, 0.0);
}

template <typename Fn>
void LiftedIncremental::ForSubsetsContaining(int level, Fn&& fn) const {
  const LevelMask own = LevelMask{1} << (level - 1);
  const LevelMask others = indexer_.AllLevels() & ~own;
  LevelMask sub = others;
  while (true) {
    fn(own | sub);
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
}

double LiftedIncremental::LinearTerm(ElementId base) const {
  return regularizer_ == nullptr ? 0.0
                                 : regularizer_scale_ * regularizer_->weight(base);
}

void LiftedIncremental::Reset(const ElementSet& s) {
  if (s.universe_size() != indexer_.lifted_size()) {
    throw std::invalid_argument("lifted set has the wrong universe size");
  }
  current_ = s;
  std::fill(levels_of_.begin(), levels_of_.end(), 0);
  linear_sum_ = 0;
  std::vector<ElementSet> parts(indexer_.levels(),
                                ElementSet(indexer_.base_size()));
  s.ForEach([&](ElementId id) {
    const LiftedElement x = indexer_.Unflatten(id);
    levels_of_[x.base] |= LevelMask{1} << (x.level - 1);
    parts[x.level - 1].insert(x.base);
    linear_sum_ += LinearTerm(x.base);
  });
  projections_[0].clear();
  for (std::size_t mask = 1; mask < projections_.size(); ++mask) {
    const int low = std::countr_zero(mask);
    projections_[mask] = projections_[mask & (mask - 1)] | parts[low];
    projection_values_[mask] = f_.Evaluate(projections_[mask]);
  }
}

double LiftedIncremental::Value() const {
  double total = linear_sum_;
  for (std::size_t mask = 1; mask < projections_.size(); ++mask) {
    total += alpha_[std::popcount(mask)] * projection_values_[mask];
  }
  return total;
}

double LiftedIncremental::Gain(ElementId v) {
  if (current_.contains(v)) return 0;
  const LiftedElement x = indexer_.Unflatten(v);
  const LevelMask present = levels_of_[x.base];
  double total = LinearTerm(x.base);
  ForSubsetsContaining(x.level, [&](LevelMask mask) {
    if ((present & mask) != 0) return;  // already in pi_J(S)
    total += alpha_[std::popcount(mask)] *
             (f_.Evaluate(projections_[mask].With(x.base)) -
              projection_values_[mask]);
  });
  return total;
}

double LiftedIncremental::Loss(ElementId u) {
  if (!current_.contains(u)) {
    throw std::invalid_argument("Loss() of an element outside the solution");
  }
  const LiftedElement x = indexer_.Unflatten(u);
  const LevelMask others =
      levels_of_[x.base] & ~(LevelMask{1} << (x.level - 1));
  double total = LinearTerm(x.base);
  ForSubsetsContaining(x.level, [&](LevelMask mask) {
    if ((others & mask) != 0) return;  // another copy keeps it in pi_J
    total += alpha_[std::popcount(mask)] *
             (projection_values_[mask] -
              f_.Evaluate(projections_[mask].Without(x.base)));
  });
  return total;
}

void LiftedIncremental::Add(ElementId v) {
  if (current_.contains(v)) return;
  const LiftedElement x = indexer_.Unflatten(v);
  const LevelMask present = levels_of_[x.base];
  ForSubsetsContaining(x.level, [&](LevelMask mask) {
    if ((present & mask) != 0) return;
    projections_[mask].insert(x.base);
    projection_values_[mask] = f_.Evaluate(projections_[mask]);
  });
  levels_of_[x.base] |= LevelMask{1} << (x.level - 1);
  current_.insert(v);
  linear_sum_ += LinearTerm(x.base);
}

void LiftedIncremental::Remove(ElementId u) {
  if (!current_.contains(u)) return;
  const LiftedElement x = indexer_.Unflatten(u);
  const LevelMask others =
      levels_of_[x.base] & ~(LevelMask{1} << (x.level - 1));
  ForSubsetsContaining(x.level, [&](LevelMask mask) {
    if ((others & mask) != 0) return;
    projections_[mask].erase(x.base);
    projection_values_[mask] = f_.Evaluate(projections_[mask]);
  });
  levels_of_[x.base] = others;
  current_.erase(u);
  linear_sum_ -= LinearTerm(x.base);
}

}  // namespace nols
