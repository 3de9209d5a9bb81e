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

#ifndef NOLS_IO_INSTANCE_H_
#define NOLS_IO_INSTANCE_H_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "core/oracles.h"
#include "objectives/objectives.h"

namespace nols {

inline constexpr int kInstanceFormatVersion = 1;

// Malformed or inconsistent instance/report text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parsed instance. `document` is the normalized JSON the oracles were built
// from; serializing it reproduces the file byte for byte when the input was
// itself written by SerializeInstance.
struct Instance {
  std::string name;
  int n = 0;
  std::optional<int> expected_rank;
  std::unique_ptr<ValueOracle> objective;
  std::unique_ptr<MatroidOracle> matroid;
  std::optional<LinearRegularizer> regularizer;
  nlohmann::ordered_json document;
};

Instance ParseInstance(const std::string& text);
Instance InstanceFromJson(const nlohmann::ordered_json& document);
std::string SerializeInstance(const Instance& instance);

Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace nols

#endif  // NOLS_IO_INSTANCE_H_
