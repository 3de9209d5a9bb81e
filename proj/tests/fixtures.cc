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

#include "fixtures.h"

#include <utility>

#include "core/random_source.h"
#include "io/generator.h"
#include "matroids/matroids.h"

namespace nols::testing {
namespace {

Fixture FromInstance(Instance instance) {
  Fixture fixture;
  fixture.name = instance.name;
  fixture.f = std::move(instance.objective);
  fixture.matroid = std::move(instance.matroid);
  fixture.regularizer = std::move(instance.regularizer);
  return fixture;
}

std::vector<double> IntegerWeights(int n, int max_weight, RandomSource& rng) {
  std::vector<double> weights(n);
  for (auto& w : weights) w = static_cast<double>(rng.Between(0, max_weight));
  return weights;
}

std::unique_ptr<MatroidOracle> TwoBlockPartition(int n) {
  std::vector<std::vector<ElementId>> blocks(2);
  for (int u = 0; u < n; ++u) blocks[u % 2].push_back(u);
  return std::make_unique<PartitionMatroid>(n, std::move(blocks),
                                            std::vector<int>{2, 1});
}

std::unique_ptr<MatroidOracle> CycleGraph(int n) {
  // n edges on a 4-vertex multigraph; rank 3.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i % 4, (i + 1 + i / 4) % 4);
  for (auto& e : edges) {
    if (e.first == e.second) e.second = (e.second + 1) % 4;
  }
  return std::make_unique<GraphicMatroid>(4, std::move(edges));
}

}  // namespace

std::unique_ptr<CoverageFunction> SmallCoverage() {
  // a=0, b=1, c=2, d=3, e=4
  return std::make_unique<CoverageFunction>(
      5, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {3}, {0, 3, 4}},
      std::vector<double>(5, 1.0));
}

std::vector<Fixture> SmallSuite() {
  std::vector<Fixture> suite;
  std::uint64_t seed = 1;
  for (const char* family : {"coverage", "partition", "graphic"}) {
    for (int n : {8, 10, 12, 14}) {
      for (int r : {2, 3, 4}) {
        GeneratorOptions options;
        options.family = family;
        options.n = n;
        options.r = r;
        options.seed = seed++;
        suite.push_back(FromInstance(GenerateInstance(options)));
      }
    }
  }
  {
    Fixture small;
    small.name = "small-coverage-k2";
    small.f = SmallCoverage();
    small.matroid = std::make_unique<UniformMatroid>(4, 2);
    suite.push_back(std::move(small));
  }
  RandomSource rng(2026);
  for (int n : {6, 9, 12}) {
    Fixture modular;
    modular.name = "modular-uniform-n" + std::to_string(n);
    modular.f = std::make_unique<ModularFunction>(IntegerWeights(n, 9, rng));
    modular.matroid = std::make_unique<UniformMatroid>(n, 3);
    suite.push_back(std::move(modular));

    Fixture partition;
    partition.name = "modular-partition-n" + std::to_string(n);
    partition.f = std::make_unique<ModularFunction>(IntegerWeights(n, 9, rng));
    partition.matroid = TwoBlockPartition(n);
    suite.push_back(std::move(partition));

    Fixture graphic;
    graphic.name = "capped-graphic-n" + std::to_string(n);
    graphic.f = std::make_unique<ConcaveOfModular>(
        IntegerWeights(n, 6, rng), ConcaveOfModular::Shape::kMinCap, 10);
    graphic.matroid = CycleGraph(n);
    suite.push_back(std::move(graphic));
  }
  return suite;
}

std::vector<Fixture> RegularizedSuite() {
  std::vector<Fixture> suite;
  {
    Fixture small;
    small.name = "small-coverage-regularized";
    small.f = SmallCoverage();
    small.matroid = std::make_unique<UniformMatroid>(4, 2);
    small.regularizer = LinearRegularizer({1, 0, 0, 2});
    suite.push_back(std::move(small));
  }
  RandomSource rng(77);
  std::uint64_t seed = 100;
  for (const char* family : {"coverage", "partition", "graphic"}) {
    for (int n : {6, 8, 10}) {
      GeneratorOptions options;
      options.family = family;
      options.n = n;
      options.r = 3;
      options.seed = seed++;
      Fixture fixture = FromInstance(GenerateInstance(options));
      fixture.name += "-regularized";
      fixture.regularizer = LinearRegularizer(IntegerWeights(n, 4, rng));
      suite.push_back(std::move(fixture));
    }
  }
  {
    Fixture zero_f;
    zero_f.name = "zero-objective-regularized";
    zero_f.f = std::make_unique<ModularFunction>(std::vector<double>(7, 0.0));
    zero_f.matroid = TwoBlockPartition(7);
    zero_f.regularizer = LinearRegularizer(IntegerWeights(7, 5, rng));
    suite.push_back(std::move(zero_f));
  }
  return suite;
}

std::unique_ptr<ValueOracle> SquaredCardinality(int n) {
  return std::make_unique<FunctionOracle>(n, [](const ElementSet& s) {
    const double k = s.size();
    return k * k;
  });
}

}  // namespace nols::testing
