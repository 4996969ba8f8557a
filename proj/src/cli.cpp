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

#include "asq/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "asq/distributions.hpp"
#include "asq/quantizer.hpp"
#include "asq/solvers.hpp"
#include "asq/sweep.hpp"
#include "asq/vector_io.hpp"
#include "asq/verify.hpp"

namespace asq {
namespace {

struct GenArgs {
  std::string dist = "lognormal";
  std::size_t d = 4096;
  std::uint64_t seed = 0;
  std::string output;
};

struct SolveArgs {
  std::string input;
  std::string output;
  std::string algo = "quiver";
  std::string weights;
  int s = 16;
  Index m = 0;
  std::uint64_t seed = 0;
};

struct QuantizeArgs {
  std::string input;
  std::string codebook;
  std::string output;
  std::uint64_t seed = 0;
};

struct DequantizeArgs {
  std::string indices;
  std::string codebook;
  std::string output;
};

struct BenchArgs {
  std::string config;
  std::string output;
};

struct VerifyArgs {
  std::string input;
  int s_max = 8;
  Index m = 64;
  std::uint64_t seed = 1;
};

double seconds(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double>(ns).count();
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const Distribution dist = parse_distribution(a.dist);
  const auto x = sample(dist, a.d, a.seed);
  write_vector(a.output, x);
  out << "wrote " << x.size() << " samples of " << format_distribution(dist)
      << " to " << a.output << '\n';
  return kExitOk;
}

// True for a text file whose first data line holds two fields.
bool two_columns(const std::string& path) {
  if (vector_format(path) != VectorFormat::kText) return false;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b;
    return static_cast<bool>(fields >> a >> b);
  }
  return false;
}

int run_solve(const SolveArgs& a, std::ostream& out) {
  SolveReport report;
  std::size_t d = 0;
  if (a.algo == "weighted" && !a.weights.empty()) {
    auto values = read_vector(a.input);
    auto weights = read_vector(a.weights);
    d = values.size();
    report = weighted_quiver(
        WeightedInput::make(std::move(values), std::move(weights)), a.s);
  } else if (a.algo == "weighted" && two_columns(a.input)) {
    auto cols = read_weighted_text(a.input);
    d = cols.values.size();
    report = weighted_quiver(
        WeightedInput::make(std::move(cols.values), std::move(cols.weights)),
        a.s);
  } else {
    const auto x = read_vector(a.input);
    d = x.size();
    report = run_method(a.algo, x, a.s, a.m).report;
  }

  CodebookFile file;
  file.codebook = report.codebook;
  file.algorithm = a.algo;
  file.d = d;
  file.s = a.s;
  file.m = uses_bins(a.algo) ? a.m : 0;
  file.seed = a.seed;
  file.dp_objective = report.dp_objective;
  file.solve_time = seconds(report.wall_time);
  write_codebook(a.output, file);
  out << a.algo << ": " << report.codebook.size() << " levels, expected_mse "
      << report.codebook.expected_mse << ", solve " << file.solve_time
      << " s\n";
  return kExitOk;
}

int run_quantize(const QuantizeArgs& a, std::ostream& out) {
  const auto x = read_vector(a.input);
  validate_finite(x);
  const CodebookFile cb = read_codebook(a.codebook);
  const QuantizedVector q = encode(x, cb.codebook, RandomSource(a.seed));
  write_indices(a.output, q.indices);
  out << "encoded " << q.indices.size() << " entries with "
      << cb.codebook.size() << " levels\n";
  return kExitOk;
}

int run_dequantize(const DequantizeArgs& a, std::ostream& out) {
  QuantizedVector q;
  q.indices = read_indices(a.indices);
  q.codebook = read_codebook(a.codebook).codebook;
  for (std::size_t i = 0; i < q.indices.size(); ++i) {
    if (q.indices[i] >= q.codebook.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "level index " + std::to_string(q.indices[i]) +
                      " outside the codebook",
                  i);
    }
  }
  const auto y = decode(q);
  write_vector(a.output, y);
  out << "decoded " << y.size() << " entries\n";
  return kExitOk;
}

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.config);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + a.config);
  std::stringstream text;
  text << in.rdbuf();
  SweepConfig config = parse_sweep_config(text.str());
  if (!a.output.empty()) config.output_path = a.output;

  std::vector<ResultRecord> rows;
  if (config.output_path.empty()) {
    rows = run_sweep(config, &out);
  } else {
    std::ofstream csv(config.output_path);
    if (!csv) throw Error(ErrorCode::kIo, "cannot write " + config.output_path);
    rows = run_sweep(config, &csv);
    if (!csv) throw Error(ErrorCode::kIo, "write failed: " + config.output_path);
  }
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.ok ? 0 : 1;
  err << rows.size() << " cells, " << failed << " failed\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opt;
  opt.max_levels = a.s_max;
  opt.bins = a.m;
  opt.seed = a.seed;
  const auto x = read_vector(a.input);
  const VerifyReport report = verify_vector(x, opt);
  for (const auto& c : report.checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  return report.ok() ? kExitOk : kExitRuntime;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Optimal level sets for unbiased stochastic quantization",
               "asq"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a synthetic vector");
  gen_cmd->add_option("--dist", gen.dist,
                      "lognormal|normal|exponential|truncnorm|weibull[:p...]")
      ->capture_default_str();
  gen_cmd->add_option("--d", gen.d, "Dimension")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output (.f64/.f32/.txt)")
      ->required();

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a codebook");
  solve_cmd->add_option("input", solve_args.input)->required();
  solve_cmd->add_option("-o,--output", solve_args.output, "Codebook JSON")
      ->required();
  solve_cmd->add_option("--algo", solve_args.algo)
      ->check(CLI::IsMember(method_names()))
      ->capture_default_str();
  solve_cmd->add_option("--s", solve_args.s, "Number of levels")
      ->capture_default_str();
  solve_cmd->add_option("--m", solve_args.m, "Grid size for grid methods");
  solve_cmd->add_option("--seed", solve_args.seed, "Recorded in the output");
  solve_cmd->add_option("--weights", solve_args.weights,
                        "Weights vector for --algo weighted");

  QuantizeArgs quant;
  auto* quant_cmd = app.add_subcommand("quantize", "Stochastically round");
  quant_cmd->add_option("input", quant.input)->required();
  quant_cmd->add_option("codebook", quant.codebook)->required();
  quant_cmd->add_option("-o,--output", quant.output, "Indices (.u32/.txt)")
      ->required();
  quant_cmd->add_option("--seed", quant.seed)->capture_default_str();

  DequantizeArgs deq;
  auto* deq_cmd = app.add_subcommand("dequantize", "Map indices to levels");
  deq_cmd->add_option("indices", deq.indices)->required();
  deq_cmd->add_option("codebook", deq.codebook)->required();
  deq_cmd->add_option("-o,--output", deq.output)->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a sweep to CSV");
  bench_cmd->add_option("config", bench.config)->required();
  bench_cmd->add_option("-o,--output", bench.output,
                        "CSV path (overrides the config)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Oracle self-check on a file");
  ver_cmd->add_option("input", ver.input)->required();
  ver_cmd->add_option("--s-max", ver.s_max)->capture_default_str();
  ver_cmd->add_option("--m", ver.m)->capture_default_str();
  ver_cmd->add_option("--seed", ver.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*solve_cmd) return run_solve(solve_args, out);
    if (*quant_cmd) return run_quantize(quant, out);
    if (*deq_cmd) return run_dequantize(deq, out);
    if (*bench_cmd) return run_bench(bench, out, err);
    if (*ver_cmd) return run_verify(ver, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.is_validation() ? kExitValidation : kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitValidation;
}

}  // namespace asq
