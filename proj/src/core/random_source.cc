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

#include "core/random_source.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace nols {
namespace {

std::uint64_t SplitMix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& s : state_) s = SplitMix64(x);
}

std::uint64_t RandomSource::Next() {
  const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

std::uint64_t RandomSource::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  unsigned __int128 m = static_cast<unsigned __int128>(Next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(Next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t RandomSource::Between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + static_cast<std::int64_t>(
                  Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

ElementSet SampleWithoutReplacement(RandomSource& rng, const ElementSet& pool,
                                    int k) {
  const std::vector<ElementId> members = pool.ToVector();
  const int m = static_cast<int>(members.size());
  if (k < 0 || k > m) {
    throw std::invalid_argument("sample size " + std::to_string(k) +
                                " exceeds pool of size " + std::to_string(m));
  }
  ElementSet out(pool.universe_size());
  if (k == m) return pool;
  // Floyd: for j in [m-k, m), pick t in [0, j]; take t unless already taken,
  // in which case take j.
  std::vector<bool> taken(m, false);
  for (int j = m - k; j < m; ++j) {
    const int t = static_cast<int>(rng.Below(static_cast<std::uint64_t>(j) + 1));
    const int pick = taken[t] ? j : t;
    taken[pick] = true;
    out.insert(members[pick]);
  }
  return out;
}

}  // namespace nols
