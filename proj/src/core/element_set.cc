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

#include "core/element_set.h"

#include <stdexcept>
#include <string>

namespace nols {

ElementSet::ElementSet(int universe_size) : universe_size_(universe_size) {
  if (universe_size < 0) {
    throw std::invalid_argument("negative universe size");
  }
  words_.assign((universe_size + 63) / 64, 0);
}

ElementSet::ElementSet(int universe_size,
                       std::initializer_list<ElementId> members)
    : ElementSet(universe_size) {
  for (ElementId u : members) insert(u);
}

ElementSet::ElementSet(int universe_size,
                       const std::vector<ElementId>& members)
    : ElementSet(universe_size) {
  for (ElementId u : members) insert(u);
}

ElementSet ElementSet::Full(int universe_size) {
  ElementSet s(universe_size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe_size % 64 != 0) {
    s.words_.back() = (std::uint64_t{1} << (universe_size % 64)) - 1;
  }
  return s;
}

int ElementSet::size() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool ElementSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void ElementSet::CheckMember(ElementId u) const {
  if (u < 0 || u >= universe_size_) {
    throw std::invalid_argument("element " + std::to_string(u) +
                                " outside universe of size " +
                                std::to_string(universe_size_));
  }
}

void ElementSet::CheckSameUniverse(const ElementSet& other) const {
  if (other.universe_size_ != universe_size_) {
    throw std::invalid_argument("element sets over different universes");
  }
}

void ElementSet::insert(ElementId u) {
  CheckMember(u);
  words_[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void ElementSet::erase(ElementId u) {
  CheckMember(u);
  words_[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

void ElementSet::clear() {
  for (auto& w : words_) w = 0;
}

ElementSet ElementSet::With(ElementId u) const {
  ElementSet s = *this;
  s.insert(u);
  return s;
}

ElementSet ElementSet::Without(ElementId u) const {
  ElementSet s = *this;
  s.erase(u);
  return s;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= ~other.words_[i];
  }
  return *this;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::Intersects(const ElementSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<ElementId> ElementSet::ToVector() const {
  std::vector<ElementId> out;
  out.reserve(size());
  ForEach([&](ElementId u) { out.push_back(u); });
  return out;
}

}  // namespace nols
