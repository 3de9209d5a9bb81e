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

/* Non-oblivious local search for monotone submodular maximization under a
 * matroid constraint. Plain C interface over opaque handles.
 *
 * Every function returning nols_status leaves a description of the last
 * failure in nols_last_error() (per thread). Strings handed out through
 * char** must be released with nols_string_free. */
#ifndef NOLS_NOLS_H_
#define NOLS_NOLS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(NOLS_BUILDING_LIBRARY)
#define NOLS_API __attribute__((visibility("default")))
#else
#define NOLS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nols_instance nols_instance;
typedef struct nols_report nols_report;

typedef enum {
  NOLS_OK = 0,
  NOLS_ERR_ARGUMENT = 1, /* invalid parameter or inconsistent inputs */
  NOLS_ERR_PARSE = 2,    /* malformed instance or report text */
  NOLS_ERR_IO = 3,       /* unreadable or unwritable file */
  NOLS_ERR_SCALE = 4,    /* exact check requested beyond its size limit */
  NOLS_ERR_INTERNAL = 5
} nols_status;

typedef enum { NOLS_DETERMINISTIC = 0, NOLS_RANDOMIZED = 1 } nols_variant;

typedef enum {
  NOLS_WARM_THRESHOLD_GREEDY = 0,
  NOLS_WARM_PLAIN_GREEDY = 1
} nols_warm_start;

typedef struct {
  double epsilon;
  int variant;         /* nols_variant */
  uint64_t seed;
  int levels_override; /* 0 means 1 + ceil(1 / epsilon) */
  int warm_start;      /* nols_warm_start */
  int max_repetitions; /* randomized attempt budget; negative means default */
} nols_solve_config;

typedef struct {
  int passed;               /* all checks below that ran succeeded */
  int consistent;           /* report matches the instance */
  int certificate_checked;
  int certificate_ok;       /* recomputed gap equals the reported gap and
                               stays within the bound */
  double recomputed_gap;
  double reported_gap;
  double bound;
  int brute_forced;
  double opt_value;
  double ratio;
  double target;
  int ratio_ok;
  char message[256];        /* first failure, empty when passed */
} nols_verify_result;

NOLS_API const char* nols_last_error(void);
NOLS_API void nols_string_free(char* s);

NOLS_API void nols_default_config(nols_solve_config* config);

NOLS_API nols_status nols_instance_load(const char* path, nols_instance** out);
NOLS_API nols_status nols_instance_parse(const char* text, nols_instance** out);
/* family: "coverage", "partition" or "graphic". blocks <= 0 and cap < 0
 * select the defaults (r blocks, capacity 1). */
NOLS_API nols_status nols_instance_generate(const char* family, int n, int r,
                                            uint64_t seed, int blocks, int cap,
                                            nols_instance** out);
NOLS_API nols_status nols_instance_save(const nols_instance* instance,
                                        const char* path);
NOLS_API nols_status nols_instance_to_json(const nols_instance* instance,
                                           char** out);
NOLS_API int nols_instance_size(const nols_instance* instance);
NOLS_API int nols_instance_rank(const nols_instance* instance);
NOLS_API const char* nols_instance_name(const nols_instance* instance);
NOLS_API int nols_instance_has_regularizer(const nols_instance* instance);
NOLS_API void nols_instance_free(nols_instance* instance);

/* Runs the solver; instances with a regularizer maximize f + l. A randomized
 * run whose attempts all fail still returns NOLS_OK with a failed report. */
NOLS_API nols_status nols_solve(const nols_instance* instance,
                                const nols_solve_config* config,
                                nols_report** out);

NOLS_API nols_status nols_report_save(const nols_report* report,
                                      const char* path);
NOLS_API nols_status nols_report_load(const char* path, nols_report** out);
NOLS_API nols_status nols_report_parse(const char* text, nols_report** out);
NOLS_API nols_status nols_report_to_json(const nols_report* report, char** out);
NOLS_API void nols_report_free(nols_report* report);

NOLS_API int nols_report_failed(const nols_report* report);
NOLS_API double nols_report_objective_value(const nols_report* report);
NOLS_API int nols_report_levels(const nols_report* report);
NOLS_API uint64_t nols_report_value_queries(const nols_report* report);
NOLS_API uint64_t nols_report_independence_queries(const nols_report* report);
NOLS_API long nols_report_iterations(const nols_report* report);
/* Writes up to capacity ids of the output set; returns its size. */
NOLS_API int nols_report_output(const nols_report* report, int* ids,
                                int capacity);

/* Recomputes the certificate and, unless certificate_only or n > 22, the
 * brute-force ratio (NOLS_ERR_SCALE in that case). Check outcomes land in
 * *result; the status only reports errors. */
NOLS_API nols_status nols_verify(const nols_instance* instance,
                                 const nols_report* report,
                                 int certificate_only,
                                 nols_verify_result* result);

NOLS_API nols_status nols_brute_force(const nols_instance* instance,
                                      double* opt_value);

#ifdef __cplusplus
}
#endif

#endif /* NOLS_NOLS_H_ */
