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

#include "matroids/matroids.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nols {

UniformMatroid::UniformMatroid(int n, int capacity)
    : n_(n), capacity_(capacity) {
  if (n < 0 || capacity < 0) {
    throw std::invalid_argument("uniform matroid needs n >= 0, k >= 0");
  }
}

bool UniformMatroid::IsIndependent(const ElementSet& s) const {
  return s.size() <= capacity_;
}

PartitionMatroid::PartitionMatroid(int n,
                                   std::vector<std::vector<ElementId>> blocks,
                                   std::vector<int> capacities)
    : n_(n),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(n, -1) {
  if (blocks_.size() != capacities_.size()) {
    throw std::invalid_argument("one capacity per block required");
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0) {
      throw std::invalid_argument("negative block capacity");
    }
    for (ElementId u : blocks_[b]) {
      if (u < 0 || u >= n) {
        throw std::invalid_argument("block element out of range");
      }
      if (block_of_[u] != -1) {
        throw std::invalid_argument("element " + std::to_string(u) +
                                    " appears in two blocks");
      }
      block_of_[u] = static_cast<int>(b);
    }
  }
  for (int u = 0; u < n; ++u) {
    if (block_of_[u] == -1) {
      throw std::invalid_argument("element " + std::to_string(u) +
                                  " is in no block");
    }
  }
}

bool PartitionMatroid::IsIndependent(const ElementSet& s) const {
  std::vector<int> used(blocks_.size(), 0);
  bool ok = true;
  s.ForEach([&](ElementId u) {
    const int b = block_of_[u];
    if (++used[b] > capacities_[b]) ok = false;
  });
  return ok;
}

GraphicMatroid::GraphicMatroid(int vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

namespace {

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool GraphicMatroid::IsIndependent(const ElementSet& s) const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> rank(vertex_count_, 0);
  bool acyclic = true;
  s.ForEach([&](ElementId e) {
    if (!acyclic) return;
    int a = Find(parent, edges_[e].first);
    int b = Find(parent, edges_[e].second);
    if (a == b) {
      acyclic = false;
      return;
    }
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
  });
  return acyclic;
}

ExplicitMatroid::ExplicitMatroid(
    int n, const std::vector<std::vector<ElementId>>& family,
    Validation validation)
    : n_(n) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("explicit matroid supports n <= 20");
  }
  for (const auto& members : family) {
    family_.insert(Mask(ElementSet(n, members)));
  }
  if (validation == Validation::kSkip) return;

  if (!family_.contains(0)) {
    throw std::invalid_argument("independent family must contain the empty set");
  }
  for (std::uint32_t s : family_) {
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      const std::uint32_t lowest = bits & (~bits + 1);
      if (!family_.contains(s & ~lowest)) {
        throw std::invalid_argument("independent family is not down-closed");
      }
    }
  }
  // With down-closure, exchange between sizes k and k+1 implies the general
  // axiom.
  for (std::uint32_t s : family_) {
    for (std::uint32_t t : family_) {
      if (std::popcount(t) != std::popcount(s) + 1) continue;
      bool found = false;
      for (std::uint32_t bits = t & ~s; bits != 0 && !found; bits &= bits - 1) {
        const std::uint32_t lowest = bits & (~bits + 1);
        found = family_.contains(s | lowest);
      }
      if (!found) {
        throw std::invalid_argument(
            "independent family violates the exchange axiom");
      }
    }
  }
}

std::uint32_t ExplicitMatroid::Mask(const ElementSet& s) {
  return s.words().empty() ? 0u : static_cast<std::uint32_t>(s.words()[0]);
}

bool ExplicitMatroid::IsIndependent(const ElementSet& s) const {
  return family_.contains(Mask(s));
}

std::vector<std::vector<ElementId>> ExplicitMatroid::Family() const {
  std::vector<std::uint32_t> masks(family_.begin(), family_.end());
  std::sort(masks.begin(), masks.end());
  std::vector<std::vector<ElementId>> out;
  for (std::uint32_t m : masks) {
    std::vector<ElementId> members;
    for (int u = 0; u < n_; ++u) {
      if ((m >> u) & 1u) members.push_back(u);
    }
    out.push_back(std::move(members));
  }
  return out;
}

LiftedMatroid::LiftedMatroid(const MatroidOracle& base, int levels)
    : base_(base), indexer_(base.ground_size(), levels) {}

bool LiftedMatroid::IsIndependent(const ElementSet& s) const {
  ElementSet projection(indexer_.base_size());
  bool parallel_pair = false;
  const int levels = indexer_.levels();
  s.ForEach([&](ElementId id) {
    const ElementId u = id / levels;
    if (projection.contains(u)) parallel_pair = true;
    projection.insert(u);
  });
  if (parallel_pair) return false;
  return base_.IsIndependent(projection);
}

}  // namespace nols
