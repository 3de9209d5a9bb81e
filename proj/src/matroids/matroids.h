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

#ifndef NOLS_MATROIDS_MATROIDS_H_
#define NOLS_MATROIDS_MATROIDS_H_

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "core/element_set.h"
#include "core/lifted.h"
#include "core/oracles.h"

namespace nols {

// S is independent iff |S| <= capacity.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int n, int capacity);

  int ground_size() const override { return n_; }
  bool IsIndependent(const ElementSet& s) const override;
  int capacity() const { return capacity_; }

 private:
  int n_;
  int capacity_;
};

// Disjoint blocks covering [0, n), each with its own capacity.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(int n, std::vector<std::vector<ElementId>> blocks,
                   std::vector<int> capacities);

  int ground_size() const override { return n_; }
  bool IsIndependent(const ElementSet& s) const override;

  const std::vector<std::vector<ElementId>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  int n_;
  std::vector<std::vector<ElementId>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

// Element i is edge i; a set is independent iff it is a forest. Each query
// builds a fresh union-find over the edges of the set.
class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  bool IsIndependent(const ElementSet& s) const override;

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Independence family listed explicitly as bitmasks; n <= 20.
class ExplicitMatroid final : public MatroidOracle {
 public:
  enum class Validation { kCheckAxioms, kSkip };

  // With kCheckAxioms the family must contain the empty set, be down-closed
  // and satisfy the exchange axiom, or std::invalid_argument is thrown.
  // kSkip builds an arbitrary set family (used to exercise the checkers).
  ExplicitMatroid(int n, const std::vector<std::vector<ElementId>>& family,
                  Validation validation = Validation::kCheckAxioms);

  int ground_size() const override { return n_; }
  bool IsIndependent(const ElementSet& s) const override;

  std::vector<std::vector<ElementId>> Family() const;

 private:
  static std::uint32_t Mask(const ElementSet& s);

  int n_;
  std::unordered_set<std::uint32_t> family_;
};

// Matroid over N x [levels]: a lifted set is independent iff it holds at most
// one copy of each base element and its projection is independent in the
// base matroid. One base query per lifted query.
class LiftedMatroid final : public MatroidOracle {
 public:
  LiftedMatroid(const MatroidOracle& base, int levels);

  int ground_size() const override { return indexer_.lifted_size(); }
  bool IsIndependent(const ElementSet& s) const override;

  const LiftedIndexer& indexer() const { return indexer_; }
  const MatroidOracle& base() const { return base_; }

 private:
  const MatroidOracle& base_;
  LiftedIndexer indexer_;
};

inline LiftedMatroid Lift(const MatroidOracle& base, int levels) {
  return LiftedMatroid(base, levels);
}

}  // namespace nols

#endif  // NOLS_MATROIDS_MATROIDS_H_
