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

#ifndef NOLS_CORE_LIFTED_H_
#define NOLS_CORE_LIFTED_H_

#include <cstdint>
#include <stdexcept>

#include "core/element_set.h"

namespace nols {

// Pair (base element, level) of the lifted ground set N x [levels], flattened
// to base * levels + (level - 1). Levels are 1-based.
struct LiftedElement {
  ElementId base = 0;
  int level = 1;

  friend bool operator==(const LiftedElement&, const LiftedElement&) = default;
};

// Bitmask over levels: bit (i - 1) stands for level i.
using LevelMask = std::uint32_t;

class LiftedIndexer {
 public:
  LiftedIndexer(int base_size, int levels)
      : base_size_(base_size), levels_(levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  }

  int base_size() const { return base_size_; }
  int levels() const { return levels_; }
  int lifted_size() const { return base_size_ * levels_; }

  ElementId Flatten(LiftedElement x) const {
    return x.base * levels_ + (x.level - 1);
  }
  LiftedElement Unflatten(ElementId id) const {
    return {id / levels_, id % levels_ + 1};
  }

  // Base elements present at any level in `mask`.
  ElementSet Project(const ElementSet& lifted, LevelMask mask) const {
    ElementSet out(base_size_);
    lifted.ForEach([&](ElementId id) {
      if ((mask >> (id % levels_)) & 1u) out.insert(id / levels_);
    });
    return out;
  }

  ElementSet ProjectAll(const ElementSet& lifted) const {
    return Project(lifted, AllLevels());
  }

  LevelMask AllLevels() const {
    return levels_ >= 32 ? ~LevelMask{0} : (LevelMask{1} << levels_) - 1;
  }

  // T x {level}.
  ElementSet AtLevel(const ElementSet& base_set, int level) const {
    ElementSet out(lifted_size());
    base_set.ForEach([&](ElementId u) { out.insert(Flatten({u, level})); });
    return out;
  }

 private:
  int base_size_;
  int levels_;
};

}  // namespace nols

#endif  // NOLS_CORE_LIFTED_H_
