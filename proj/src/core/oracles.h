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

#ifndef NOLS_CORE_ORACLES_H_
#define NOLS_CORE_ORACLES_H_

#include "core/element_set.h"
#include "core/query_ledger.h"

namespace nols {

// Set function f: 2^N -> R over a ground set of ground_size() elements.
// Implementations are immutable after construction and may be queried from
// several threads at once.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;
  virtual int ground_size() const = 0;
  virtual double Evaluate(const ElementSet& s) const = 0;
};

// Independence oracle of a matroid (or, for test fixtures, of an arbitrary
// independence system). Same threading contract as ValueOracle.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual int ground_size() const = 0;
  virtual bool IsIndependent(const ElementSet& s) const = 0;
};

// Forwards to a wrapped oracle and records one value query per call.
class CountingValueOracle final : public ValueOracle {
 public:
  CountingValueOracle(const ValueOracle& inner, QueryLedger& ledger)
      : inner_(inner), ledger_(ledger) {}

  int ground_size() const override { return inner_.ground_size(); }
  double Evaluate(const ElementSet& s) const override {
    ledger_.RecordValueQuery();
    return inner_.Evaluate(s);
  }

 private:
  const ValueOracle& inner_;
  QueryLedger& ledger_;
};

// Forwards to a wrapped oracle and records one independence query per call.
class CountingMatroidOracle final : public MatroidOracle {
 public:
  CountingMatroidOracle(const MatroidOracle& inner, QueryLedger& ledger)
      : inner_(inner), ledger_(ledger) {}

  int ground_size() const override { return inner_.ground_size(); }
  bool IsIndependent(const ElementSet& s) const override {
    ledger_.RecordIndependenceQuery();
    return inner_.IsIndependent(s);
  }

 private:
  const MatroidOracle& inner_;
  QueryLedger& ledger_;
};

inline CountingValueOracle WithCounting(const ValueOracle& oracle,
                                        QueryLedger& ledger) {
  return CountingValueOracle(oracle, ledger);
}

inline CountingMatroidOracle WithCounting(const MatroidOracle& oracle,
                                          QueryLedger& ledger) {
  return CountingMatroidOracle(oracle, ledger);
}

}  // namespace nols

#endif  // NOLS_CORE_ORACLES_H_
