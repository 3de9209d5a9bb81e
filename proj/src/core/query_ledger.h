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

#ifndef NOLS_CORE_QUERY_LEDGER_H_
#define NOLS_CORE_QUERY_LEDGER_H_

#include <atomic>
#include <cstdint>

namespace nols {

struct QueryCounts {
  std::uint64_t value_queries = 0;
  std::uint64_t independence_queries = 0;

  std::uint64_t total() const { return value_queries + independence_queries; }

  friend QueryCounts operator-(const QueryCounts& a, const QueryCounts& b) {
    return {a.value_queries - b.value_queries,
            a.independence_queries - b.independence_queries};
  }
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

// Oracle invocation counters. Only ever incremented; take a Snapshot() and
// subtract to measure a phase.
class QueryLedger {
 public:
  QueryLedger() = default;
  QueryLedger(const QueryLedger&) = delete;
  QueryLedger& operator=(const QueryLedger&) = delete;

  void RecordValueQuery() {
    value_queries_.fetch_add(1, std::memory_order_relaxed);
  }
  void RecordIndependenceQuery() {
    independence_queries_.fetch_add(1, std::memory_order_relaxed);
  }

  std::uint64_t value_queries() const {
    return value_queries_.load(std::memory_order_relaxed);
  }
  std::uint64_t independence_queries() const {
    return independence_queries_.load(std::memory_order_relaxed);
  }

  QueryCounts Snapshot() const {
    return {value_queries(), independence_queries()};
  }

 private:
  std::atomic<std::uint64_t> value_queries_{0};
  std::atomic<std::uint64_t> independence_queries_{0};
};

}  // namespace nols

#endif  // NOLS_CORE_QUERY_LEDGER_H_
