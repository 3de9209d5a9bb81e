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

#include "nols/nols.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "io/generator.h"
#include "io/instance.h"
#include "io/report.h"
#include "matroids/matroids.h"
#include "matroids/operations.h"
#include "objectives/guide.h"
#include "objectives/incremental.h"
#include "verify/verify.h"

struct nols_instance {
  nols::Instance instance;
};

struct nols_report {
  nols::StoredReport stored;
};

namespace {

thread_local std::string last_error;

nols_status Fail(nols_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, mapping exceptions to status codes.
template <typename Fn>
nols_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const nols::FormatError& e) {
    return Fail(NOLS_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(NOLS_ERR_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return Fail(NOLS_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return Fail(NOLS_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void SetMessage(nols_verify_result* result, const std::string& message) {
  if (result->message[0] != '\0') return;
  std::snprintf(result->message, sizeof(result->message), "%s",
                message.c_str());
}

bool Close(double a, double b) {
  const nols::NumericPolicy policy = nols::NumericPolicy::Floating();
  return policy.AtLeast(a, b) && policy.AtLeast(b, a);
}

// Checks that the report describes a feasible run on this instance.
bool CheckConsistency(const nols::Instance& instance,
                      const nols::StoredReport& stored,
                      nols_verify_result* result) {
  const nols::RunReport& run = stored.run;
  if (stored.n != instance.n) {
    SetMessage(result, "report and instance sizes differ");
    return false;
  }
  if (run.levels < 1 || run.levels > nols::kMaxLevels) {
    SetMessage(result, "report level count out of range");
    return false;
  }
  const nols::LiftedMatroid lifted(*instance.matroid, run.levels);
  if (!(lifted.indexer().ProjectAll(run.lifted_solution) == run.output_set)) {
    SetMessage(result, "output set is not the projection of the lifted solution");
    return false;
  }
  if (!lifted.IsIndependent(run.lifted_solution)) {
    SetMessage(result, "lifted solution is not independent");
    return false;
  }
  if (!Close(instance.objective->Evaluate(run.output_set), run.objective_value)) {
    SetMessage(result, "objective value does not match the output set");
    return false;
  }
  if (instance.regularizer.has_value() &&
      !Close(instance.regularizer->Evaluate(run.output_set),
             run.regularizer_value)) {
    SetMessage(result, "regularizer value does not match the output set");
    return false;
  }
  if (run.failed && (!run.output_set.empty() || run.certificate.has_value())) {
    SetMessage(result, "failed run must have an empty output and no certificate");
    return false;
  }
  if (!run.failed && !run.certificate.has_value()) {
    SetMessage(result, "certificate missing");
    return false;
  }
  return true;
}

}  // namespace

extern "C" {

const char* nols_last_error(void) { return last_error.c_str(); }

void nols_string_free(char* s) { std::free(s); }

void nols_default_config(nols_solve_config* config) {
  if (config == nullptr) return;
  config->epsilon = 0.2;
  config->variant = NOLS_DETERMINISTIC;
  config->seed = 0;
  config->levels_override = 0;
  config->warm_start = NOLS_WARM_THRESHOLD_GREEDY;
  config->max_repetitions = -1;
}

nols_status nols_instance_load(const char* path, nols_instance** out) {
  if (path == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    std::string text;
    try {
      text = nols::ReadFile(path);
    } catch (const std::runtime_error& e) {
      return Fail(NOLS_ERR_IO, e.what());
    }
    *out = new nols_instance{nols::ParseInstance(text)};
    return NOLS_OK;
  });
}

nols_status nols_instance_parse(const char* text, nols_instance** out) {
  if (text == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = new nols_instance{nols::ParseInstance(text)};
    return NOLS_OK;
  });
}

nols_status nols_instance_generate(const char* family, int n, int r,
                                   uint64_t seed, int blocks, int cap,
                                   nols_instance** out) {
  if (family == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    nols::GeneratorOptions options;
    options.family = family;
    options.n = n;
    options.r = r;
    options.seed = seed;
    if (blocks > 0) options.blocks = blocks;
    if (cap >= 0) options.cap = cap;
    *out = new nols_instance{nols::GenerateInstance(options)};
    return NOLS_OK;
  });
}

nols_status nols_instance_save(const nols_instance* instance, const char* path) {
  if (instance == nullptr || path == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    nols::SaveInstance(instance->instance, path);
    return NOLS_OK;
  });
}

nols_status nols_instance_to_json(const nols_instance* instance, char** out) {
  if (instance == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = CopyString(nols::SerializeInstance(instance->instance));
    return NOLS_OK;
  });
}

int nols_instance_size(const nols_instance* instance) {
  return instance == nullptr ? -1 : instance->instance.n;
}

int nols_instance_rank(const nols_instance* instance) {
  return instance == nullptr ? -1 : nols::Rank(*instance->instance.matroid);
}

const char* nols_instance_name(const nols_instance* instance) {
  return instance == nullptr ? "" : instance->instance.name.c_str();
}

int nols_instance_has_regularizer(const nols_instance* instance) {
  return instance != nullptr && instance->instance.regularizer.has_value();
}

void nols_instance_free(nols_instance* instance) { delete instance; }

nols_status nols_solve(const nols_instance* instance,
                       const nols_solve_config* config, nols_report** out) {
  if (instance == nullptr || config == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    if (config->variant != NOLS_DETERMINISTIC &&
        config->variant != NOLS_RANDOMIZED) {
      return Fail(NOLS_ERR_ARGUMENT, "unknown variant");
    }
    if (config->warm_start != NOLS_WARM_THRESHOLD_GREEDY &&
        config->warm_start != NOLS_WARM_PLAIN_GREEDY) {
      return Fail(NOLS_ERR_ARGUMENT, "unknown warm start");
    }
    nols::SolverConfig solver;
    solver.epsilon = config->epsilon;
    solver.variant = config->variant == NOLS_RANDOMIZED
                         ? nols::Variant::kRandomized
                         : nols::Variant::kDeterministic;
    solver.seed = config->seed;
    if (config->levels_override > 0) {
      solver.levels_override = config->levels_override;
    }
    solver.warm_start = config->warm_start == NOLS_WARM_PLAIN_GREEDY
                            ? nols::WarmStartKind::kPlainGreedy
                            : nols::WarmStartKind::kThresholdGreedy;
    solver.max_repetitions = config->max_repetitions;

    const nols::Instance& in = instance->instance;
    auto report = std::make_unique<nols_report>();
    report->stored.instance = in.name;
    report->stored.n = in.n;
    report->stored.run =
        in.regularizer.has_value()
            ? nols::RegularizedSolve(*in.objective, *in.regularizer,
                                     *in.matroid, solver)
            : nols::NonObliviousSolve(*in.objective, *in.matroid, solver);
    *out = report.release();
    return NOLS_OK;
  });
}

nols_status nols_report_save(const nols_report* report, const char* path) {
  if (report == nullptr || path == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    nols::WriteFile(path, nols::SerializeReport(report->stored));
    return NOLS_OK;
  });
}

nols_status nols_report_parse(const char* text, nols_report** out) {
  if (text == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = new nols_report{nols::ParseReport(text)};
    return NOLS_OK;
  });
}

nols_status nols_report_load(const char* path, nols_report** out) {
  if (path == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    std::string text;
    try {
      text = nols::ReadFile(path);
    } catch (const std::runtime_error& e) {
      return Fail(NOLS_ERR_IO, e.what());
    }
    *out = new nols_report{nols::ParseReport(text)};
    return NOLS_OK;
  });
}

nols_status nols_report_to_json(const nols_report* report, char** out) {
  if (report == nullptr || out == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out = CopyString(nols::SerializeReport(report->stored));
    return NOLS_OK;
  });
}

void nols_report_free(nols_report* report) { delete report; }

int nols_report_failed(const nols_report* report) {
  return report != nullptr && report->stored.run.failed;
}

double nols_report_objective_value(const nols_report* report) {
  return report == nullptr ? 0.0 : report->stored.run.objective_value;
}

int nols_report_levels(const nols_report* report) {
  return report == nullptr ? 0 : report->stored.run.levels;
}

uint64_t nols_report_value_queries(const nols_report* report) {
  return report == nullptr ? 0 : report->stored.run.queries.value_queries;
}

uint64_t nols_report_independence_queries(const nols_report* report) {
  return report == nullptr ? 0
                           : report->stored.run.queries.independence_queries;
}

long nols_report_iterations(const nols_report* report) {
  return report == nullptr ? 0 : report->stored.run.iterations;
}

int nols_report_output(const nols_report* report, int* ids, int capacity) {
  if (report == nullptr) return 0;
  const auto members = report->stored.run.output_set.ToVector();
  for (int i = 0; i < capacity && i < static_cast<int>(members.size()); ++i) {
    ids[i] = members[i];
  }
  return static_cast<int>(members.size());
}

nols_status nols_verify(const nols_instance* instance,
                        const nols_report* report, int certificate_only,
                        nols_verify_result* result) {
  if (instance == nullptr || report == nullptr || result == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *result = nols_verify_result{};
    const nols::Instance& in = instance->instance;
    const nols::StoredReport& stored = report->stored;
    const nols::RunReport& run = stored.run;
    if (!certificate_only && in.n > nols::kBruteForceMaxGround) {
      return Fail(NOLS_ERR_SCALE,
                  "brute force needs n <= 22; pass --certificate-only");
    }
    result->consistent = CheckConsistency(in, stored, result);
    bool ok = result->consistent;

    if (result->consistent && run.certificate.has_value()) {
      const nols::AlphaSchedule alpha =
          nols::AlphaSchedule::ForLevels(run.levels);
      const nols::LinearRegularizer* reg =
          in.regularizer ? &*in.regularizer : nullptr;
      nols::LiftedIncremental guide(*in.objective, alpha, reg);
      const nols::LiftedMatroid lifted(*in.matroid, run.levels);
      const double bound = run.epsilon_prime * run.guide_start_value;
      const nols::LocalOptCertificate recomputed =
          nols::ComputeLocalOptCertificate(guide, lifted, run.lifted_solution,
                                           bound);
      result->certificate_checked = 1;
      result->recomputed_gap = recomputed.gap;
      result->reported_gap = run.certificate->gap;
      result->bound = bound;
      result->certificate_ok = recomputed.passes &&
                               Close(recomputed.gap, run.certificate->gap) &&
                               Close(bound, run.certificate->bound);
      if (!result->certificate_ok) {
        SetMessage(result, recomputed.passes
                               ? "recomputed certificate does not match the report"
                               : "certificate gap exceeds its bound");
      }
      ok = ok && result->certificate_ok;
    }

    if (!certificate_only) {
      const nols::BruteForceResult truth =
          nols::BruteForceOpt(*in.objective, *in.matroid);
      result->brute_forced = 1;
      result->opt_value = truth.opt_value;
      const nols::ApproximationReport approx = nols::MakeApproximationReport(
          run, truth, run.epsilon, run.levels);
      result->ratio = approx.ratio;
      result->target = approx.target;
      if (in.regularizer.has_value()) {
        result->ratio_ok = nols::CheckRegularizedGuarantee(
                               *in.objective, *in.regularizer, *in.matroid,
                               run.output_set, run.epsilon)
                               .ok;
      } else {
        result->ratio_ok = approx.pass;
      }
      if (!result->ratio_ok) SetMessage(result, "approximation target missed");
      ok = ok && result->ratio_ok;
    }
    result->passed = ok;
    return NOLS_OK;
  });
}

nols_status nols_brute_force(const nols_instance* instance, double* opt_value) {
  if (instance == nullptr || opt_value == nullptr) {
    return Fail(NOLS_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    if (instance->instance.n > nols::kBruteForceMaxGround) {
      return Fail(NOLS_ERR_SCALE, "brute force needs n <= 22");
    }
    *opt_value = nols::BruteForceOpt(*instance->instance.objective,
                                     *instance->instance.matroid)
                     .opt_value;
    return NOLS_OK;
  });
}

}  // extern "C"
