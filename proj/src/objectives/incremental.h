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

#ifndef NOLS_OBJECTIVES_INCREMENTAL_H_
#define NOLS_OBJECTIVES_INCREMENTAL_H_

#include <memory>
#include <vector>

#include "core/element_set.h"
#include "core/lifted.h"
#include "core/oracles.h"
#include "objectives/guide.h"
#include "objectives/objectives.h"

namespace nols {

// Objective bound to a current solution S, caching what is needed so that
// marginals cost as few oracle calls as possible. Owned by one solver run.
class IncrementalObjective {
 public:
  virtual ~IncrementalObjective() = default;

  virtual int ground_size() const = 0;

  // Rebinds to s and refreshes the cache.
  virtual void Reset(const ElementSet& s) = 0;

  // Objective value of the current solution (no oracle calls).
  virtual double Value() const = 0;

  // f(v | S) for v outside S.
  virtual double Gain(ElementId v) = 0;

  // f(u | S - u) for u in S.
  virtual double Loss(ElementId u) = 0;

  virtual void Add(ElementId v) = 0;
  virtual void Remove(ElementId u) = 0;

  const ElementSet& current() const { return current_; }

  // f(v | S - v) for any v: Loss for members, Gain otherwise.
  double MarginalWithout(ElementId v) {
    return current_.contains(v) ? Loss(v) : Gain(v);
  }

  void Swap(ElementId out, ElementId in) {
    Remove(out);
    Add(in);
  }

 protected:
  ElementSet current_;
};

// Any value oracle, caching f(S): one query per marginal or update.
class PlainIncremental final : public IncrementalObjective {
 public:
  explicit PlainIncremental(const ValueOracle& f);

  int ground_size() const override { return f_.ground_size(); }
  void Reset(const ElementSet& s) override;
  double Value() const override { return value_; }
  double Gain(ElementId v) override;
  double Loss(ElementId u) override;
  void Add(ElementId v) override;
  void Remove(ElementId u) override;

 private:
  const ValueOracle& f_;
  double value_ = 0;
};

// Lifted guide g' (+ optional regularizer) over N x [l]. Keeps pi_J(S) and
// f(pi_J(S)) for every J ⊆ [l]; adding or removing (u, i) touches only the
// 2^(l-1) projections with i in J.
class LiftedIncremental final : public IncrementalObjective {
 public:
  LiftedIncremental(const ValueOracle& f, const AlphaSchedule& alpha,
                    const LinearRegularizer* regularizer = nullptr);

  int ground_size() const override { return indexer_.lifted_size(); }
  void Reset(const ElementSet& s) override;
  double Value() const override;
  double Gain(ElementId v) override;
  double Loss(ElementId u) override;
  void Add(ElementId v) override;
  void Remove(ElementId u) override;

  const LiftedIndexer& indexer() const { return indexer_; }

 private:
  template <typename Fn>
  void ForSubsetsContaining(int level, Fn&& fn) const;

  double LinearTerm(ElementId base) const;

  const ValueOracle& f_;
  AlphaSchedule alpha_;
  const LinearRegularizer* regularizer_;
  LiftedIndexer indexer_;
  double regularizer_scale_;

  std::vector<LevelMask> levels_of_;     // per base element
  std::vector<ElementSet> projections_;  // pi_J(S), indexed by J
  std::vector<double> projection_values_;
  double linear_sum_ = 0;
};

}  // namespace nols

#endif  // NOLS_OBJECTIVES_INCREMENTAL_H_
