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

#ifndef NOLS_CORE_ELEMENT_SET_H_
#define NOLS_CORE_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nols {

// Index of an element of the ground set [0, n).
using ElementId = int;

// Subset of a ground set of fixed size, stored as a bit vector.
//
// Sets over the same universe compare extensionally. Mixing universes in a
// binary operation throws std::invalid_argument.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe_size);
  ElementSet(int universe_size, std::initializer_list<ElementId> members);
  ElementSet(int universe_size, const std::vector<ElementId>& members);

  static ElementSet Full(int universe_size);

  int universe_size() const { return universe_size_; }
  int size() const;
  bool empty() const;
  bool contains(ElementId u) const {
    return (words_[u >> 6] >> (u & 63)) & 1u;
  }

  void insert(ElementId u);
  void erase(ElementId u);
  void clear();

  // S + u and S - u.
  ElementSet With(ElementId u) const;
  ElementSet Without(ElementId u) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }

  bool IsSubsetOf(const ElementSet& other) const;
  bool Intersects(const ElementSet& other) const;

  // Members in ascending order.
  std::vector<ElementId> ToVector() const;

  // Calls fn(u) for each member in ascending order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<ElementId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

 private:
  void CheckMember(ElementId u) const;
  void CheckSameUniverse(const ElementSet& other) const;

  int universe_size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nols

#endif  // NOLS_CORE_ELEMENT_SET_H_
