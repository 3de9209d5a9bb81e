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

#include "io/report.h"

#include "core/lifted.h"
#include "io/instance.h"

namespace nols {
namespace {

using Json = nlohmann::ordered_json;

Json LiftedPairs(const ElementSet& lifted, const LiftedIndexer& indexer) {
  Json pairs = Json::array();
  lifted.ForEach([&](ElementId x) {
    const LiftedElement e = indexer.Unflatten(x);
    pairs.push_back(Json::array({e.base, e.level}));
  });
  return pairs;
}

ElementSet ParseLifted(const Json& pairs, const LiftedIndexer& indexer) {
  ElementSet out(indexer.lifted_size());
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) {
      throw FormatError("report: lifted entries are [element, level] pairs");
    }
    const int base = p[0].get<int>();
    const int level = p[1].get<int>();
    if (base < 0 || base >= indexer.base_size() || level < 1 ||
        level > indexer.levels()) {
      throw FormatError("report: lifted entry out of range");
    }
    out.insert(indexer.Flatten({base, level}));
  }
  return out;
}

}  // namespace

Json ReportToJson(const StoredReport& stored) {
  const RunReport& run = stored.run;
  const LiftedIndexer indexer(stored.n, run.levels);
  Json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["instance"] = stored.instance;
  doc["n"] = stored.n;
  doc["variant"] = VariantName(run.variant);
  doc["epsilon"] = run.epsilon;
  doc["epsilon_prime"] = run.epsilon_prime;
  doc["levels"] = run.levels;
  doc["seed"] = run.seed;
  doc["output_set"] = run.output_set.ToVector();
  doc["lifted_solution"] = LiftedPairs(run.lifted_solution, indexer);
  doc["objective_value"] = run.objective_value;
  doc["regularized"] = run.regularized;
  doc["regularizer_value"] = run.regularizer_value;
  doc["value_queries"] = run.queries.value_queries;
  doc["independence_queries"] = run.queries.independence_queries;
  doc["iterations"] = run.iterations;
  doc["repetitions"] = run.repetitions;
  doc["failed"] = run.failed;
  if (run.certificate.has_value()) {
    Json cert;
    cert["gap"] = run.certificate->gap;
    cert["bound"] = run.certificate->bound;
    cert["start_value"] = run.guide_start_value;
    cert["passes"] = run.certificate->passes;
    cert["witness"] = LiftedPairs(run.certificate->witness, indexer);
    doc["certificate"] = std::move(cert);
  } else {
    doc["certificate"] = nullptr;
  }
  return doc;
}

std::string SerializeReport(const StoredReport& report) {
  return ReportToJson(report).dump(2) + "\n";
}

StoredReport ParseReport(const std::string& text) {
  StoredReport stored;
  try {
    const Json doc = Json::parse(text);
    if (doc.at("format_version").get<int>() != kReportFormatVersion) {
      throw FormatError("report: unsupported format_version");
    }
    RunReport& run = stored.run;
    stored.instance = doc.at("instance").get<std::string>();
    stored.n = doc.at("n").get<int>();
    run.variant = ParseVariant(doc.at("variant").get<std::string>());
    run.epsilon = doc.at("epsilon").get<double>();
    run.epsilon_prime = doc.at("epsilon_prime").get<double>();
    run.levels = doc.at("levels").get<int>();
    if (stored.n < 0 || run.levels < 1) {
      throw FormatError("report: bad n or levels");
    }
    run.seed = doc.at("seed").get<std::uint64_t>();
    run.output_set =
        ElementSet(stored.n, doc.at("output_set").get<std::vector<int>>());
    const LiftedIndexer indexer(stored.n, run.levels);
    run.lifted_solution = ParseLifted(doc.at("lifted_solution"), indexer);
    run.objective_value = doc.at("objective_value").get<double>();
    run.regularized = doc.at("regularized").get<bool>();
    run.regularizer_value = doc.at("regularizer_value").get<double>();
    run.queries.value_queries = doc.at("value_queries").get<std::uint64_t>();
    run.queries.independence_queries =
        doc.at("independence_queries").get<std::uint64_t>();
    run.iterations = doc.at("iterations").get<long>();
    run.repetitions = doc.at("repetitions").get<int>();
    run.failed = doc.at("failed").get<bool>();
    const Json& cert = doc.at("certificate");
    if (!cert.is_null()) {
      LocalOptCertificate c;
      c.gap = cert.at("gap").get<double>();
      c.bound = cert.at("bound").get<double>();
      c.passes = cert.at("passes").get<bool>();
      c.witness = ParseLifted(cert.at("witness"), indexer);
      run.guide_start_value = cert.at("start_value").get<double>();
      run.certificate = std::move(c);
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  return stored;
}

}  // namespace nols
