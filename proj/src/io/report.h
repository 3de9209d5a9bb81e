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

#ifndef NOLS_IO_REPORT_H_
#define NOLS_IO_REPORT_H_

#include <string>

#include "json.hpp"

#include "solvers/non_oblivious.h"

namespace nols {

inline constexpr int kReportFormatVersion = 1;

// A run report together with the name of the instance it was produced on.
struct StoredReport {
  std::string instance;
  int n = 0;
  RunReport run;
};

// Field order is fixed; equal inputs give byte-identical text.
nlohmann::ordered_json ReportToJson(const StoredReport& report);
std::string SerializeReport(const StoredReport& report);

// Throws FormatError on malformed text.
StoredReport ParseReport(const std::string& text);

}  // namespace nols

#endif  // NOLS_IO_REPORT_H_
