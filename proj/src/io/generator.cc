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

#include "io/generator.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "core/random_source.h"

namespace nols {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxPointsPerElement = 4;
constexpr int kMaxPointWeight = 5;

template <typename T>
void Shuffle(std::vector<T>& items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.Below(i)]);
  }
}

Json CoverageObjective(int n, RandomSource& rng) {
  const int points = 2 * n;
  Json universe = Json::array();
  Json weights = Json::array();
  for (int p = 0; p < points; ++p) {
    universe.push_back("p" + std::to_string(p));
    weights.push_back(rng.Between(1, kMaxPointWeight));
  }
  Json covers = Json::array();
  for (int u = 0; u < n; ++u) {
    const int count =
        static_cast<int>(rng.Between(1, std::min(kMaxPointsPerElement, points)));
    const ElementSet chosen =
        SampleWithoutReplacement(rng, ElementSet::Full(points), count);
    Json list = Json::array();
    chosen.ForEach([&](ElementId p) { list.push_back(universe[p]); });
    covers.push_back(std::move(list));
  }
  Json objective;
  objective["kind"] = "coverage";
  objective["universe"] = std::move(universe);
  objective["universe_weights"] = std::move(weights);
  objective["covers"] = std::move(covers);
  return objective;
}

Json PartitionSpec(int n, int blocks, int cap, RandomSource& rng, int* rank) {
  if (blocks < 1 || blocks > n) {
    throw std::invalid_argument("partition needs 1 <= blocks <= n");
  }
  if (cap < 0) throw std::invalid_argument("partition capacity must be >= 0");
  std::vector<int> order(n);
  for (int u = 0; u < n; ++u) order[u] = u;
  Shuffle(order, rng);
  std::vector<std::vector<int>> parts(blocks);
  for (int i = 0; i < n; ++i) parts[i % blocks].push_back(order[i]);
  *rank = 0;
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    *rank += std::min<int>(cap, static_cast<int>(p.size()));
  }
  Json spec;
  spec["kind"] = "partition";
  spec["blocks"] = parts;
  spec["capacities"] = std::vector<int>(blocks, cap);
  return spec;
}

Json GraphicSpec(int n, int r, RandomSource& rng) {
  if (r < 1 || n < r) {
    throw std::invalid_argument("graphic needs 1 <= r <= n");
  }
  const int vertices = r + 1;
  std::vector<int> label(vertices);
  for (int v = 0; v < vertices; ++v) label[v] = v;
  Shuffle(label, rng);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < vertices; ++v) {
    const int parent = static_cast<int>(rng.Below(v));
    edges.emplace_back(label[parent], label[v]);
  }
  while (static_cast<int>(edges.size()) < n) {
    const int a = static_cast<int>(rng.Below(vertices));
    int b = static_cast<int>(rng.Below(vertices - 1));
    if (b >= a) ++b;
    edges.emplace_back(a, b);
  }
  Shuffle(edges, rng);
  Json list = Json::array();
  for (const auto& [a, b] : edges) list.push_back(Json::array({a, b}));
  Json spec;
  spec["kind"] = "graphic";
  spec["vertices"] = vertices;
  spec["edges"] = std::move(list);
  return spec;
}

}  // namespace

Instance GenerateInstance(const GeneratorOptions& options) {
  const int n = options.n;
  const int r = options.r;
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (r < 1 || r > n) throw std::invalid_argument("r must lie in [1, n]");
  RandomSource rng(options.seed);

  Json matroid;
  int rank = r;
  if (options.family == "coverage") {
    matroid["kind"] = "uniform";
    matroid["k"] = r;
  } else if (options.family == "partition") {
    matroid = PartitionSpec(n, options.blocks.value_or(r),
                            options.cap.value_or(1), rng, &rank);
  } else if (options.family == "graphic") {
    matroid = GraphicSpec(n, r, rng);
  } else {
    throw std::invalid_argument("unknown family '" + options.family + "'");
  }
  Json objective = CoverageObjective(n, rng);

  Json doc;
  doc["format_version"] = kInstanceFormatVersion;
  doc["name"] = options.family + "-n" + std::to_string(n) + "-r" +
                std::to_string(r) + "-s" + std::to_string(options.seed);
  doc["n"] = n;
  doc["expected_rank"] = rank;
  doc["objective"] = std::move(objective);
  doc["matroid"] = std::move(matroid);
  return InstanceFromJson(doc);
}

}  // namespace nols
