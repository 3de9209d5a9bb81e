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

#include "io/instance.h"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroids/matroids.h"
#include "matroids/operations.h"

namespace nols {
namespace {

using Json = nlohmann::ordered_json;

const Json& Field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw FormatError(where + ": missing field '" + key + "'");
  }
  return object.at(key);
}

std::vector<double> Numbers(const Json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array");
  std::vector<double> out;
  for (const auto& x : value) {
    if (!x.is_number()) throw FormatError(where + ": expected numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<int> Ints(const Json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array");
  std::vector<int> out;
  for (const auto& x : value) {
    if (!x.is_number_integer()) throw FormatError(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::unique_ptr<ValueOracle> BuildObjective(const Json& spec) {
  const std::string kind = Field(spec, "kind", "objective").get<std::string>();
  if (kind == "coverage") {
    const Json& universe = Field(spec, "universe", "objective");
    if (!universe.is_array()) throw FormatError("objective: universe must be a list");
    std::unordered_map<std::string, int> index;
    for (const auto& name : universe) {
      if (!name.is_string()) throw FormatError("objective: universe names must be strings");
      if (!index.emplace(name.get<std::string>(), static_cast<int>(index.size())).second) {
        throw FormatError("objective: duplicate universe name '" +
                          name.get<std::string>() + "'");
      }
    }
    std::vector<double> weights(index.size(), 1.0);
    if (spec.contains("universe_weights")) {
      weights = Numbers(spec.at("universe_weights"), "objective.universe_weights");
      if (weights.size() != index.size()) {
        throw FormatError("objective: universe_weights length differs from universe");
      }
    }
    const Json& covers = Field(spec, "covers", "objective");
    if (!covers.is_array()) throw FormatError("objective: covers must be a list");
    std::vector<std::vector<int>> sets;
    for (const auto& list : covers) {
      if (!list.is_array()) throw FormatError("objective: each cover must be a list");
      std::vector<int> points;
      for (const auto& name : list) {
        auto it = name.is_string() ? index.find(name.get<std::string>()) : index.end();
        if (it == index.end()) {
          throw FormatError("objective: cover names an unknown point " + name.dump());
        }
        points.push_back(it->second);
      }
      sets.push_back(std::move(points));
    }
    return std::make_unique<CoverageFunction>(static_cast<int>(index.size()),
                                              std::move(sets), std::move(weights));
  }
  if (kind == "modular") {
    return std::make_unique<ModularFunction>(
        Numbers(Field(spec, "weights", "objective"), "objective.weights"));
  }
  if (kind == "concave_of_modular") {
    const std::string shape = Field(spec, "shape", "objective").get<std::string>();
    auto weights = Numbers(Field(spec, "weights", "objective"), "objective.weights");
    if (shape == "sqrt") {
      return std::make_unique<ConcaveOfModular>(std::move(weights),
                                                ConcaveOfModular::Shape::kSqrt);
    }
    if (shape == "min_cap") {
      const Json& cap = Field(spec, "cap", "objective");
      if (!cap.is_number()) throw FormatError("objective: cap must be a number");
      return std::make_unique<ConcaveOfModular>(
          std::move(weights), ConcaveOfModular::Shape::kMinCap, cap.get<double>());
    }
    throw FormatError("objective: unknown shape '" + shape + "'");
  }
  throw FormatError("objective: unknown kind '" + kind + "'");
}

std::unique_ptr<MatroidOracle> BuildMatroid(const Json& spec, int n) {
  const std::string kind = Field(spec, "kind", "matroid").get<std::string>();
  if (kind == "uniform") {
    const Json& k = Field(spec, "k", "matroid");
    if (!k.is_number_integer()) throw FormatError("matroid: k must be an integer");
    return std::make_unique<UniformMatroid>(n, k.get<int>());
  }
  if (kind == "partition") {
    const Json& blocks = Field(spec, "blocks", "matroid");
    if (!blocks.is_array()) throw FormatError("matroid: blocks must be a list");
    std::vector<std::vector<ElementId>> parts;
    for (const auto& b : blocks) parts.push_back(Ints(b, "matroid.blocks"));
    return std::make_unique<PartitionMatroid>(
        n, std::move(parts),
        Ints(Field(spec, "capacities", "matroid"), "matroid.capacities"));
  }
  if (kind == "graphic") {
    const Json& vertices = Field(spec, "vertices", "matroid");
    if (!vertices.is_number_integer()) {
      throw FormatError("matroid: vertices must be an integer");
    }
    const Json& edges = Field(spec, "edges", "matroid");
    if (!edges.is_array()) throw FormatError("matroid: edges must be a list");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
      const auto ends = Ints(e, "matroid.edges");
      if (ends.size() != 2) throw FormatError("matroid: an edge has two endpoints");
      list.emplace_back(ends[0], ends[1]);
    }
    return std::make_unique<GraphicMatroid>(vertices.get<int>(), std::move(list));
  }
  if (kind == "explicit") {
    const Json& family = Field(spec, "independent_sets", "matroid");
    if (!family.is_array()) throw FormatError("matroid: independent_sets must be a list");
    std::vector<std::vector<ElementId>> sets;
    for (const auto& s : family) sets.push_back(Ints(s, "matroid.independent_sets"));
    return std::make_unique<ExplicitMatroid>(n, sets);
  }
  throw FormatError("matroid: unknown kind '" + kind + "'");
}

}  // namespace

Instance InstanceFromJson(const Json& document) {
  if (!document.is_object()) throw FormatError("instance: expected an object");
  const Json& version = Field(document, "format_version", "instance");
  if (!version.is_number_integer() || version.get<int>() != kInstanceFormatVersion) {
    throw FormatError("instance: unsupported format_version " + version.dump());
  }
  Instance instance;
  const Json& n = Field(document, "n", "instance");
  if (!n.is_number_integer() || n.get<int>() < 0) {
    throw FormatError("instance: n must be a non-negative integer");
  }
  instance.n = n.get<int>();
  if (document.contains("name")) {
    instance.name = document.at("name").get<std::string>();
  }
  if (document.contains("expected_rank")) {
    instance.expected_rank = document.at("expected_rank").get<int>();
  }
  try {
    instance.objective = BuildObjective(Field(document, "objective", "instance"));
    instance.matroid =
        BuildMatroid(Field(document, "matroid", "instance"), instance.n);
    if (document.contains("regularizer")) {
      instance.regularizer = LinearRegularizer(Numbers(
          Field(document.at("regularizer"), "weights", "regularizer"),
          "regularizer.weights"));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
  if (instance.objective->ground_size() != instance.n) {
    throw FormatError("instance: objective has " +
                      std::to_string(instance.objective->ground_size()) +
                      " elements but n = " + std::to_string(instance.n));
  }
  if (instance.matroid->ground_size() != instance.n) {
    throw FormatError("instance: matroid has " +
                      std::to_string(instance.matroid->ground_size()) +
                      " elements but n = " + std::to_string(instance.n));
  }
  if (instance.regularizer && instance.regularizer->ground_size() != instance.n) {
    throw FormatError("instance: regularizer length differs from n");
  }
  if (instance.expected_rank &&
      Rank(*instance.matroid) != *instance.expected_rank) {
    throw FormatError("instance: matroid rank differs from expected_rank");
  }
  instance.document = document;
  return instance;
}

Instance ParseInstance(const std::string& text) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
  return InstanceFromJson(document);
}

std::string SerializeInstance(const Instance& instance) {
  return instance.document.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

void SaveInstance(const Instance& instance, const std::string& path) {
  WriteFile(path, SerializeInstance(instance));
}

}  // namespace nols
