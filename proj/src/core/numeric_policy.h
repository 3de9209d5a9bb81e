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

#ifndef NOLS_CORE_NUMERIC_POLICY_H_
#define NOLS_CORE_NUMERIC_POLICY_H_

#include <algorithm>
#include <cmath>

namespace nols {

// Threshold comparisons used by every solver. With relative_slack = 0 the
// comparisons are exact; floating-point guides use kFloatingSlack.
struct NumericPolicy {
  static constexpr double kFloatingSlack = 1e-9;

  double relative_slack = 0.0;

  static NumericPolicy Exact() { return {}; }
  static NumericPolicy Floating() { return {kFloatingSlack}; }

  double Tolerance(double lhs, double rhs) const {
    return relative_slack *
           std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  }

  // lhs >= rhs.
  bool AtLeast(double lhs, double rhs) const {
    return lhs >= rhs - Tolerance(lhs, rhs);
  }

  // lhs > rhs, beyond the slack.
  bool Exceeds(double lhs, double rhs) const {
    return lhs > rhs + Tolerance(lhs, rhs);
  }

  // Loop-guard test "gain >= threshold". A non-positive threshold demands a
  // strictly positive gain so that local search always terminates.
  bool MeetsThreshold(double gain, double threshold) const {
    if (threshold > 0) return AtLeast(gain, threshold);
    return Exceeds(gain, 0.0);
  }
};

}  // namespace nols

#endif  // NOLS_CORE_NUMERIC_POLICY_H_
