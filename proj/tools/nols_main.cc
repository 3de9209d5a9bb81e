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

// Command-line front end: gen, solve, verify and bench.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "nols/nols.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitSolverFailed = 2;

const char kCsvHeader[] =
    "instance,n,r,epsilon,variant,seed,value,opt_value,ratio,value_queries,"
    "independence_queries,iterations,wall_time_ms,failed";

struct InstanceDeleter {
  void operator()(nols_instance* p) const { nols_instance_free(p); }
};
struct ReportDeleter {
  void operator()(nols_report* p) const { nols_report_free(p); }
};
using InstancePtr = std::unique_ptr<nols_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<nols_report, ReportDeleter>;

std::string FormatDouble(double x) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(x);
}

int ReportError(const std::string& what) {
  std::cerr << "error: " << what << ": " << nols_last_error() << "\n";
  return kExitError;
}

int ParseVariant(const std::string& name) {
  if (name == "deterministic" || name == "det") return NOLS_DETERMINISTIC;
  if (name == "randomized" || name == "rand") return NOLS_RANDOMIZED;
  return -1;
}

struct GenArgs {
  std::string family = "coverage";
  int n = 12;
  int r = 3;
  std::uint64_t seed = 0;
  int blocks = 0;
  int cap = -1;
  std::string out;
};

int RunGen(const GenArgs& args) {
  nols_instance* raw = nullptr;
  if (nols_instance_generate(args.family.c_str(), args.n, args.r, args.seed,
                             args.blocks, args.cap, &raw) != NOLS_OK) {
    return ReportError("gen");
  }
  InstancePtr instance(raw);
  if (nols_instance_save(instance.get(), args.out.c_str()) != NOLS_OK) {
    return ReportError("gen");
  }
  std::cout << "wrote " << args.out << " (n=" << nols_instance_size(raw)
            << ", rank=" << nols_instance_rank(raw) << ")\n";
  return kExitOk;
}

struct SolveArgs {
  std::string instance;
  double epsilon = 0.2;
  std::string variant = "deterministic";
  std::uint64_t seed = 0;
  int levels = 0;
  std::string warm_start = "threshold";
  std::string out;
  int max_repetitions = -1;
};

int RunSolve(const SolveArgs& args) {
  nols_instance* raw = nullptr;
  if (nols_instance_load(args.instance.c_str(), &raw) != NOLS_OK) {
    return ReportError("solve");
  }
  InstancePtr instance(raw);
  nols_solve_config config;
  nols_default_config(&config);
  config.epsilon = args.epsilon;
  config.variant = ParseVariant(args.variant);
  config.seed = args.seed;
  config.levels_override = args.levels;
  config.warm_start = args.warm_start == "plain" ? NOLS_WARM_PLAIN_GREEDY
                                                 : NOLS_WARM_THRESHOLD_GREEDY;
  config.max_repetitions = args.max_repetitions;
  nols_report* report_raw = nullptr;
  if (nols_solve(instance.get(), &config, &report_raw) != NOLS_OK) {
    return ReportError("solve");
  }
  ReportPtr report(report_raw);
  if (!args.out.empty()) {
    if (nols_report_save(report.get(), args.out.c_str()) != NOLS_OK) {
      return ReportError("solve");
    }
  } else {
    char* text = nullptr;
    if (nols_report_to_json(report.get(), &text) != NOLS_OK) {
      return ReportError("solve");
    }
    std::cout << text;
    nols_string_free(text);
  }
  if (nols_report_failed(report.get())) {
    std::cerr << "randomized search failed on every attempt; output is empty\n";
    return kExitSolverFailed;
  }
  if (!args.out.empty()) {
    std::cout << "value " << FormatDouble(nols_report_objective_value(report.get()))
              << ", value queries " << nols_report_value_queries(report.get())
              << ", independence queries "
              << nols_report_independence_queries(report.get()) << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string instance;
  std::string report;
  bool certificate_only = false;
};

int RunVerify(const VerifyArgs& args) {
  nols_instance* instance_raw = nullptr;
  if (nols_instance_load(args.instance.c_str(), &instance_raw) != NOLS_OK) {
    return ReportError("verify");
  }
  InstancePtr instance(instance_raw);
  nols_report* report_raw = nullptr;
  if (nols_report_load(args.report.c_str(), &report_raw) != NOLS_OK) {
    return ReportError("verify");
  }
  ReportPtr report(report_raw);
  nols_verify_result result;
  if (nols_verify(instance.get(), report.get(), args.certificate_only,
                  &result) != NOLS_OK) {
    return ReportError("verify");
  }
  std::cout << "consistent: " << (result.consistent ? "yes" : "no") << "\n";
  if (result.certificate_checked) {
    std::cout << "certificate: gap " << FormatDouble(result.recomputed_gap)
              << " (reported " << FormatDouble(result.reported_gap)
              << "), bound " << FormatDouble(result.bound) << ", "
              << (result.certificate_ok ? "ok" : "FAILED") << "\n";
  } else {
    std::cout << "certificate: none\n";
  }
  if (result.brute_forced) {
    std::cout << "ratio: " << FormatDouble(result.ratio) << " (opt "
              << FormatDouble(result.opt_value) << ", target "
              << FormatDouble(result.target) << "), "
              << (result.ratio_ok ? "ok" : "FAILED") << "\n";
  } else {
    std::cout << "ratio: skipped\n";
  }
  if (!result.passed) {
    std::cerr << "verification failed: " << result.message << "\n";
    return kExitError;
  }
  std::cout << "verified\n";
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> families{"coverage"};
  std::vector<int> n;
  std::vector<std::string> r{"sqrt"};
  std::vector<double> epsilon{0.5};
  std::vector<std::uint64_t> seeds{0};
  std::vector<std::string> variants{"deterministic"};
  std::string out;
  int brute_force_max_n = 16;
  bool wall_time = true;
};

// Normalizers for the query summary.
double Log2Factor(int r) { return 1.0 + std::log2(static_cast<double>(r)); }

double Normalizer(int variant, int n, int r) {
  if (variant == NOLS_DETERMINISTIC) {
    return static_cast<double>(n) * r * Log2Factor(r);
  }
  const double root = std::ceil(std::sqrt(static_cast<double>(n)));
  return (n + r * root) * Log2Factor(r);
}

int RunBench(const BenchArgs& args) {
  std::ofstream csv(args.out, std::ios::trunc);
  if (!csv) {
    std::cerr << "error: bench: cannot write '" << args.out << "'\n";
    return kExitError;
  }
  csv << kCsvHeader << "\n" << std::flush;

  // (variant, epsilon) -> max normalized query count.
  std::map<std::pair<std::string, double>, double> summary;
  long rows = 0;
  long errors = 0;
  for (const auto& family : args.families) {
    for (int n : args.n) {
      for (const auto& r_spec : args.r) {
        const int r = r_spec == "sqrt"
                          ? static_cast<int>(std::ceil(std::sqrt(n)))
                          : std::stoi(r_spec);
        for (std::uint64_t seed : args.seeds) {
          nols_instance* raw = nullptr;
          const bool generated =
              nols_instance_generate(family.c_str(), n, r, seed, 0, -1, &raw) ==
              NOLS_OK;
          InstancePtr instance(raw);
          const std::string name =
              generated ? nols_instance_name(raw)
                        : family + "-n" + std::to_string(n) + "-r" +
                              std::to_string(r) + "-s" + std::to_string(seed);
          double opt = -1;
          if (generated && n <= args.brute_force_max_n &&
              nols_brute_force(raw, &opt) != NOLS_OK) {
            opt = -1;
          }
          for (double eps : args.epsilon) {
            for (const auto& variant_name : args.variants) {
              ++rows;
              const std::string prefix =
                  name + "," + std::to_string(n) + "," + std::to_string(r) +
                  "," + FormatDouble(eps) + "," + variant_name + "," +
                  std::to_string(seed) + ",";
              const int variant = ParseVariant(variant_name);
              nols_solve_config config;
              nols_default_config(&config);
              config.epsilon = eps;
              config.variant = variant;
              config.seed = seed;
              nols_report* report_raw = nullptr;
              const auto start = std::chrono::steady_clock::now();
              const bool solved = generated && variant >= 0 &&
                                  nols_solve(raw, &config, &report_raw) == NOLS_OK;
              const auto stop = std::chrono::steady_clock::now();
              ReportPtr report(report_raw);
              if (!solved) {
                ++errors;
                csv << prefix << ",,,,,,,error\n" << std::flush;
                std::cerr << "row " << name << " failed: " << nols_last_error()
                          << "\n";
                continue;
              }
              const double value = nols_report_objective_value(report_raw);
              const auto vq = nols_report_value_queries(report_raw);
              const auto iq = nols_report_independence_queries(report_raw);
              const double ms =
                  args.wall_time
                      ? std::chrono::duration<double, std::milli>(stop - start)
                            .count()
                      : 0.0;
              std::string opt_text;
              std::string ratio_text;
              if (opt >= 0) {
                opt_text = FormatDouble(opt);
                ratio_text = FormatDouble(opt == 0 ? 1.0 : value / opt);
              }
              csv << prefix << FormatDouble(value) << "," << opt_text << ","
                  << ratio_text << "," << vq << "," << iq << ","
                  << nols_report_iterations(report_raw) << ","
                  << FormatDouble(std::round(ms * 1000) / 1000) << ","
                  << (nols_report_failed(report_raw) ? "true" : "false")
                  << "\n"
                  << std::flush;
              const double normalized =
                  static_cast<double>(vq + iq) / Normalizer(variant, n, r);
              auto& slot = summary[{variant == NOLS_DETERMINISTIC
                                        ? "deterministic"
                                        : "randomized",
                                    eps}];
              slot = std::max(slot, normalized);
            }
          }
        }
      }
    }
  }

  std::cout << "rows: " << rows << ", errors: " << errors << "\n";
  for (const auto& [key, value] : summary) {
    std::cout << "max normalized queries [" << key.first << ", epsilon "
              << FormatDouble(key.second) << "]: " << FormatDouble(value)
              << "\n";
  }
  return rows > 0 && errors == rows ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-oblivious local search for submodular maximization"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("--family", gen.family, "coverage, partition or graphic")
      ->check(CLI::IsMember({"coverage", "partition", "graphic"}));
  gen_cmd->add_option("--n", gen.n, "Ground set size");
  gen_cmd->add_option("--r", gen.r, "Matroid rank");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--blocks", gen.blocks, "Partition blocks (default r)");
  gen_cmd->add_option("--cap", gen.cap, "Partition block capacity (default 1)");
  gen_cmd->add_option("--out", gen.out, "Output path")->required();

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the solver");
  solve_cmd->add_option("--instance", solve.instance, "Instance file")
      ->required();
  solve_cmd->add_option("--epsilon", solve.epsilon, "Precision in (0, 1)");
  solve_cmd->add_option("--variant", solve.variant, "deterministic or randomized")
      ->check(CLI::IsMember({"deterministic", "det", "randomized", "rand"}));
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("--levels", solve.levels,
                        "Level count override (default 1 + ceil(1/epsilon))");
  solve_cmd->add_option("--warm-start", solve.warm_start, "threshold or plain")
      ->check(CLI::IsMember({"threshold", "plain"}));
  solve_cmd->add_option("--out", solve.out, "Report path (stdout if omitted)");
  solve_cmd->add_option("--debug-max-repetitions", solve.max_repetitions)
      ->group("");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a report against its instance");
  verify_cmd->add_option("--instance", verify.instance, "Instance file")
      ->required();
  verify_cmd->add_option("--report", verify.report, "Report file")->required();
  verify_cmd->add_flag("--certificate-only", verify.certificate_only,
                       "Skip the brute-force ratio");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark sweep to CSV");
  bench_cmd->add_option("--families", bench.families, "Instance families")
      ->check(CLI::IsMember({"coverage", "partition", "graphic"}));
  bench_cmd->add_option("--n", bench.n, "Ground set sizes (none: empty grid)");
  bench_cmd->add_option("--r", bench.r, "Ranks, or 'sqrt' for ceil(sqrt(n))");
  bench_cmd->add_option("--epsilon", bench.epsilon, "Precisions");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds");
  bench_cmd->add_option("--variants", bench.variants, "Variants")
      ->check(CLI::IsMember({"deterministic", "det", "randomized", "rand"}));
  bench_cmd->add_option("--brute-force-max-n", bench.brute_force_max_n,
                        "Largest n for which f(OPT) is computed");
  bench_cmd->add_flag("!--no-wall-time", bench.wall_time,
                      "Write 0 in the wall_time_ms column");
  bench_cmd->add_option("--out", bench.out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  if (*gen_cmd) return RunGen(gen);
  if (*solve_cmd) return RunSolve(solve);
  if (*verify_cmd) return RunVerify(verify);
  if (*bench_cmd) {
    for (const auto& r : bench.r) {
      if (r == "sqrt") continue;
      int value = 0;
      auto [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), value);
      if (ec != std::errc() || ptr != r.data() + r.size() || value < 1) {
        std::cerr << "error: bench: --r takes positive integers or 'sqrt'\n";
        return kExitError;
      }
    }
    return RunBench(bench);
  }
  return kExitError;
}
