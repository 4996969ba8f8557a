// Copyright 2026 The ASQ Authors
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

// Benchmark sweeps over (algorithm, distribution, d, s, m, seed).

#ifndef ASQ_SWEEP_HPP_
#define ASQ_SWEEP_HPP_

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asq/core.hpp"
#include "asq/distributions.hpp"

namespace asq {

// Method names accepted by run_method() and the CLI:
// baseline, quiver, accq, approx, weighted, cp-uniform, cp-quantile,
// exhaustive.
const std::vector<std::string>& method_names();
bool is_known_method(std::string_view name);
// Methods that take a grid size m (approx, cp-uniform, cp-quantile).
bool uses_bins(std::string_view name);

struct MethodRun {
  SolveReport report;
  std::chrono::nanoseconds sort_time{0};
};

// Solves on unsorted input. Methods that need sorted input sort first and
// report that time separately; approx and cp-uniform never sort.
MethodRun run_method(std::string_view name, std::span<const double> raw, int s,
                     Index m);

struct SweepConfig {
  std::vector<std::string> algorithms;
  std::vector<std::size_t> dims;
  std::vector<int> levels;
  std::vector<Index> bins;
  std::vector<Distribution> distributions;
  std::vector<std::uint64_t> seeds;  // empty: 0 .. repetitions - 1
  int repetitions = 5;
  int timing_runs = 3;
  int threads = 1;
  std::string output_path;
};

// JSON object with keys algorithms, dims, levels, bins, distributions
// (spec strings), seeds, repetitions, timing_runs, threads, output.
SweepConfig parse_sweep_config(const std::string& json_text);

// Throws Error(kBadParameters) on empty lists or unknown algorithms.
void validate(const SweepConfig& config);

struct ResultRecord {
  std::string algorithm;
  std::string distribution;
  std::size_t d = 0;
  int s = 0;
  Index m = 0;
  std::uint64_t seed = 0;
  double vnmse = 0.0;
  double solve_time = 0.0;         // seconds, mean over timing runs
  double sort_time = 0.0;          // seconds
  double expected_mse = 0.0;
  double solve_time_median = 0.0;  // seconds
  bool ok = true;
  std::string error;
};

std::string csv_header();
std::string to_csv_row(const ResultRecord& record);
ResultRecord parse_csv_row(const std::string& line);

// Runs the Cartesian product of the config. Rows are appended to `csv` (if
// given) as cells finish, one flushed line each. Failed cells become rows with
// ok = false and the sweep continues. Worker threads: config.threads, capped
// by the ASQ_THREADS environment variable.
std::vector<ResultRecord> run_sweep(const SweepConfig& config,
                                    std::ostream* csv = nullptr);

}  // namespace asq

#endif  // ASQ_SWEEP_HPP_
