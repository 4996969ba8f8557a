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

#include "asq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "asq/quantizer.hpp"
#include "asq/solvers.hpp"
#include "json.hpp"

namespace asq {
namespace {

using Clock = std::chrono::steady_clock;

double seconds(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double>(ns).count();
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

int worker_count(int requested) {
  int n = std::max(1, requested);
  if (const char* env = std::getenv("ASQ_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

struct Group {
  Distribution dist;
  std::size_t d;
  std::uint64_t seed;
};

}  // namespace

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names{
      "baseline", "quiver",      "accq",        "approx",
      "weighted", "cp-uniform",  "cp-quantile", "exhaustive"};
  return names;
}

bool is_known_method(std::string_view name) {
  const auto& n = method_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

bool uses_bins(std::string_view name) {
  return name == "approx" || name == "cp-uniform" || name == "cp-quantile";
}

MethodRun run_method(std::string_view name, std::span<const double> raw, int s,
                     Index m) {
  MethodRun run;
  if (name == "approx") {
    run.report = approx_quiver(raw, s, m);
    return run;
  }
  if (name == "cp-uniform") {
    const auto cands = uniform_candidates(raw, m);
    run.report = solve_on_candidates(raw, cands, s);
    return run;
  }

  const auto t0 = Clock::now();
  const SortedInput sorted =
      validate_and_sort(std::vector<double>(raw.begin(), raw.end()));
  run.sort_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - t0);

  if (name == "cp-quantile") {
    const auto cands = quantile_candidates(sorted, m);
    run.report = solve_on_candidates(sorted.values(), cands, s);
  } else if (name == "baseline") {
    run.report = solve(Algorithm::kBaselineDP, sorted, s);
  } else if (name == "quiver") {
    run.report = solve(Algorithm::kQuiver, sorted, s);
  } else if (name == "accq") {
    run.report = solve(Algorithm::kAcceleratedQuiver, sorted, s);
  } else if (name == "weighted") {
    run.report = solve(Algorithm::kWeightedQuiver, sorted, s);
  } else if (name == "exhaustive") {
    run.report = solve(Algorithm::kExhaustive, sorted, s);
  } else {
    throw Error(ErrorCode::kBadParameters,
                "unknown algorithm '" + std::string(name) + "'");
  }
  return run;
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  SweepConfig c;
  try {
    const auto j = nlohmann::json::parse(json_text);
    c.algorithms = j.value("algorithms", std::vector<std::string>{});
    c.dims = j.value("dims", std::vector<std::size_t>{});
    c.levels = j.value("levels", std::vector<int>{});
    c.bins = j.value("bins", std::vector<Index>{});
    for (const auto& spec :
         j.value("distributions", std::vector<std::string>{"lognormal"})) {
      c.distributions.push_back(parse_distribution(spec));
    }
    c.seeds = j.value("seeds", std::vector<std::uint64_t>{});
    c.repetitions = j.value("repetitions", 5);
    c.timing_runs = j.value("timing_runs", 3);
    c.threads = j.value("threads", 1);
    c.output_path = j.value("output", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadParameters,
                std::string("malformed sweep config: ") + e.what());
  }
  validate(c);
  return c;
}

void validate(const SweepConfig& c) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::kBadParameters, what);
  };
  if (c.algorithms.empty()) bad("sweep needs at least one algorithm");
  if (c.dims.empty()) bad("sweep needs at least one dimension");
  if (c.levels.empty()) bad("sweep needs at least one level count");
  if (c.distributions.empty()) bad("sweep needs at least one distribution");
  if (c.seeds.empty() && c.repetitions < 1) bad("repetitions must be >= 1");
  if (c.timing_runs < 1) bad("timing_runs must be >= 1");
  bool any_binned = false;
  for (const auto& a : c.algorithms) {
    if (!is_known_method(a)) bad("unknown algorithm '" + a + "'");
    any_binned |= uses_bins(a);
  }
  if (any_binned && c.bins.empty()) bad("grid algorithms need 'bins'");
  for (std::size_t d : c.dims) {
    if (d < 1) bad("dimensions must be positive");
  }
  for (int s : c.levels) {
    if (s < 2) bad("level counts must be >= 2");
  }
}

std::string csv_header() {
  return "algorithm,distribution,d,s,m,seed,vnmse,solve_time,sort_time,"
         "expected_mse,solve_time_median,status,error";
}

std::string to_csv_row(const ResultRecord& r) {
  std::ostringstream os;
  os << r.algorithm << ',' << r.distribution << ',' << r.d << ',' << r.s << ','
     << r.m << ',' << r.seed << ',' << num(r.vnmse) << ','
     << num(r.solve_time) << ',' << num(r.sort_time) << ','
     << num(r.expected_mse) << ',' << num(r.solve_time_median) << ','
     << (r.ok ? "ok" : "error") << ',' << sanitize(r.error);
  return os.str();
}

ResultRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> f;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) f.push_back(cell);
  if (!line.empty() && line.back() == ',') f.emplace_back();
  if (f.size() != 13) {
    throw Error(ErrorCode::kBadParameters, "CSV row needs 13 fields");
  }
  ResultRecord r;
  try {
    r.algorithm = f[0];
    r.distribution = f[1];
    r.d = std::stoull(f[2]);
    r.s = std::stoi(f[3]);
    r.m = static_cast<Index>(std::stoul(f[4]));
    r.seed = std::stoull(f[5]);
    r.vnmse = std::stod(f[6]);
    r.solve_time = std::stod(f[7]);
    r.sort_time = std::stod(f[8]);
    r.expected_mse = std::stod(f[9]);
    r.solve_time_median = std::stod(f[10]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadParameters, "bad numeric field in CSV row");
  }
  r.ok = f[11] == "ok";
  r.error = f[12];
  return r;
}

std::vector<ResultRecord> run_sweep(const SweepConfig& config,
                                    std::ostream* csv) {
  validate(config);
  std::vector<std::uint64_t> seeds = config.seeds;
  if (seeds.empty()) {
    for (int i = 0; i < config.repetitions; ++i) seeds.push_back(i);
  }
  std::vector<Group> groups;
  for (const auto& dist : config.distributions) {
    for (std::size_t d : config.dims) {
      for (std::uint64_t seed : seeds) groups.push_back({dist, d, seed});
    }
  }

  std::vector<std::vector<ResultRecord>> per_group(groups.size());
  std::mutex out_mu;
  if (csv) {
    *csv << csv_header() << '\n';
    csv->flush();
  }

  auto run_group = [&](std::size_t gi) {
    const Group& g = groups[gi];
    const std::string dist_name = format_distribution(g.dist);
    std::vector<double> x;
    double norm2 = 0.0;
    std::string sample_error;
    try {
      x = sample(g.dist, g.d, g.seed);
      for (double v : x) norm2 += v * v;
    } catch (const std::exception& e) {
      sample_error = e.what();
    }

    for (const auto& algo : config.algorithms) {
      for (int s : config.levels) {
        std::vector<Index> ms{0};
        if (uses_bins(algo)) ms = config.bins;
        for (Index m : ms) {
          ResultRecord r;
          r.algorithm = algo;
          r.distribution = dist_name;
          r.d = g.d;
          r.s = s;
          r.m = m;
          r.seed = g.seed;
          try {
            if (!sample_error.empty()) throw std::runtime_error(sample_error);
            std::vector<double> times;
            MethodRun run;
            for (int t = 0; t < config.timing_runs; ++t) {
              run = run_method(algo, x, s, m);
              times.push_back(seconds(run.report.wall_time));
            }
            r.expected_mse = run.report.codebook.expected_mse;
            if (!(norm2 > 0.0)) {
              throw Error(ErrorCode::kZeroNorm, "zero vector");
            }
            r.vnmse = r.expected_mse / norm2;
            r.sort_time = seconds(run.sort_time);
            double sum = 0.0;
            for (double t : times) sum += t;
            r.solve_time = sum / static_cast<double>(times.size());
            std::sort(times.begin(), times.end());
            r.solve_time_median = times[times.size() / 2];
          } catch (const std::exception& e) {
            r.ok = false;
            r.error = e.what();
          }
          if (csv) {
            std::lock_guard<std::mutex> lock(out_mu);
            *csv << to_csv_row(r) << '\n';
            csv->flush();
          }
          per_group[gi].push_back(std::move(r));
        }
      }
    }
  };

  const int workers =
      std::min<int>(worker_count(config.threads), static_cast<int>(groups.size()));
  if (workers <= 1) {
    for (std::size_t gi = 0; gi < groups.size(); ++gi) run_group(gi);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t gi = next++; gi < groups.size(); gi = next++) {
          run_group(gi);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<ResultRecord> out;
  for (auto& g : per_group) {
    for (auto& r : g) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace asq
