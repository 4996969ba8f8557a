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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "asq/cli.hpp"
#include "asq/distributions.hpp"
#include "asq/quantizer.hpp"
#include "asq/sweep.hpp"
#include "asq/vector_io.hpp"
#include "asq/verify.hpp"

namespace asq {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("asq_test_" + std::to_string(::testing::UnitTest::GetInstance()
                                              ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()
                       ->current_test_info()
                       ->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "asq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Distributions, ParseAndFormatRoundTrip) {
  for (const char* spec : {"lognormal", "normal:1:4", "exponential:2.5",
                           "truncnorm:0:1:-1:1", "weibull:1.5:2"}) {
    const auto d = parse_distribution(spec);
    EXPECT_EQ(parse_distribution(format_distribution(d)), d) << spec;
  }
  EXPECT_EQ(parse_distribution("normal:3"), Distribution(Normal{3.0, 1.0}));
  for (const char* bad : {"cauchy", "normal:0:0", "exponential:-1",
                          "truncnorm:0:1:1:-1", "weibull:0", "normal:x",
                          "exponential:1:2"}) {
    try {
      parse_distribution(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadParameters);
    }
  }
}

TEST(Distributions, SampleProperties) {
  const std::size_t d = 200000;
  const auto e = sample(Exponential{1.0}, d, 3);
  double mean = 0.0;
  for (double v : e) mean += v;
  mean /= d;
  EXPECT_NEAR(mean, 1.0, 5.0 / std::sqrt(static_cast<double>(d)));

  for (const auto& t : {TruncNorm{}, TruncNorm{0, 1, 4, 4.5}}) {
    for (double v : sample(t, 20000, 4)) {
      ASSERT_GE(v, t.a);
      ASSERT_LE(v, t.b);
    }
  }
  for (double v : sample(LogNormal{}, 1000, 5)) ASSERT_GT(v, 0.0);
  for (double v : sample(Weibull{2, 3}, 1000, 5)) ASSERT_GE(v, 0.0);

  EXPECT_EQ(sample(Normal{}, 100, 9), sample(Normal{}, 100, 9));
  EXPECT_NE(sample(Normal{}, 100, 9), sample(Normal{}, 100, 10));
}

TEST(VectorIo, RoundTrips) {
  TempDir dir;
  const std::vector<double> x{1.5, -2.25, 1e-300, 3.141592653589793, 0.1};
  write_vector(dir / "a.f64", x);
  EXPECT_EQ(read_vector(dir / "a.f64"), x);
  EXPECT_EQ(fs::file_size(dir / "a.f64"), 8 * x.size());

  write_vector(dir / "a.txt", x);
  EXPECT_EQ(read_vector(dir / "a.txt"), x);

  write_vector(dir / "a.f32", x);
  const auto y = read_vector(dir / "a.f32");
  ASSERT_EQ(y.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(y[i], static_cast<double>(static_cast<float>(x[i])));
  }

  // Little-endian layout of 1.0.
  write_vector(dir / "one.f64", std::vector<double>{1.0});
  std::ifstream one(dir / "one.f64", std::ios::binary);
  unsigned char bytes[8];
  one.read(reinterpret_cast<char*>(bytes), 8);
  EXPECT_EQ(bytes[7], 0x3f);
  EXPECT_EQ(bytes[6], 0xf0);
  EXPECT_EQ(bytes[0], 0x00);

  const std::vector<Index> idx{0, 3, 1, 4000000000u};
  write_indices(dir / "i.u32", idx);
  EXPECT_EQ(read_indices(dir / "i.u32"), idx);
  write_indices(dir / "i.txt", idx);
  EXPECT_EQ(read_indices(dir / "i.txt"), idx);
}

TEST(VectorIo, TextCommentsAndWeights) {
  TempDir dir;
  {
    std::ofstream f(dir / "v.txt");
    f << "# header\n1\n\n2.5\n  -3\n";
  }
  EXPECT_EQ(read_vector(dir / "v.txt"), (std::vector<double>{1, 2.5, -3}));
  {
    std::ofstream f(dir / "w.txt");
    f << "# value weight\n0 1\n3 100\n10 2.5\n";
  }
  const auto w = read_weighted_text(dir / "w.txt");
  EXPECT_EQ(w.values, (std::vector<double>{0, 3, 10}));
  EXPECT_EQ(w.weights, (std::vector<double>{1, 100, 2.5}));
}

TEST(VectorIo, Errors) {
  TempDir dir;
  try {
    read_vector(dir / "missing.f64");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
  try {
    write_vector(dir / "x.dat", std::vector<double>{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadParameters);
  }
  {
    std::ofstream f(dir / "odd.f64", std::ios::binary);
    f << "abc";
  }
  EXPECT_THROW(read_vector(dir / "odd.f64"), Error);
  {
    std::ofstream f(dir / "bad.txt");
    f << "1\nhello\n";
  }
  EXPECT_THROW(read_vector(dir / "bad.txt"), Error);
  EXPECT_THROW(codebook_from_json("{\"levels\": 3}"), Error);
  EXPECT_THROW(codebook_from_json("not json"), Error);
}

TEST(VectorIo, CodebookJson) {
  CodebookFile f;
  f.codebook = Codebook::make({0, 0.1, 10}, 4.25);
  f.algorithm = "approx";
  f.d = 5;
  f.s = 3;
  f.m = 400;
  f.seed = 12;
  f.dp_objective = 4.25;
  f.solve_time = 0.5;
  const auto g = codebook_from_json(codebook_to_json(f));
  EXPECT_EQ(g.codebook.levels, f.codebook.levels);
  EXPECT_EQ(g.codebook.expected_mse, 4.25);
  EXPECT_EQ(g.algorithm, "approx");
  EXPECT_EQ(g.d, 5u);
  EXPECT_EQ(g.s, 3);
  EXPECT_EQ(g.m, 400u);
  EXPECT_EQ(g.seed, 12u);
  EXPECT_EQ(g.solve_time, 0.5);
}

TEST(Sweep, ConfigValidation) {
  EXPECT_THROW(parse_sweep_config(R"({"algorithms": [], "dims": [8],
                                      "levels": [4]})"),
               Error);
  EXPECT_THROW(parse_sweep_config(R"({"algorithms": ["nope"], "dims": [8],
                                      "levels": [4]})"),
               Error);
  EXPECT_THROW(parse_sweep_config(R"({"algorithms": ["approx"], "dims": [8],
                                      "levels": [4]})"),
               Error);
  EXPECT_THROW(parse_sweep_config("[1, 2]"), Error);
  const auto c = parse_sweep_config(R"({"algorithms": ["quiver", "approx"],
      "dims": [64], "levels": [4, 8], "bins": [16],
      "distributions": ["normal:0:2", "weibull"], "repetitions": 2,
      "timing_runs": 1, "threads": 3, "output": "x.csv"})");
  EXPECT_EQ(c.algorithms.size(), 2u);
  EXPECT_EQ(c.distributions[0], Distribution(Normal{0, 2}));
  EXPECT_EQ(c.repetitions, 2);
  EXPECT_EQ(c.threads, 3);
  EXPECT_EQ(c.output_path, "x.csv");
}

TEST(Sweep, RowsRevalidateAgainstRegeneratedVectors) {
  SweepConfig c;
  c.algorithms = {"baseline", "quiver", "accq", "approx", "weighted",
                  "cp-uniform", "cp-quantile", "exhaustive"};
  c.dims = {12, 300};
  c.levels = {3, 6};
  c.bins = {8, 32};
  c.distributions = {LogNormal{}, TruncNorm{}};
  c.repetitions = 2;
  c.timing_runs = 3;
  c.threads = 4;
  std::ostringstream csv;
  const auto rows = run_sweep(c, &csv);
  // 2 dists * 2 dims * 2 seeds * (5 exact + 3 gridded * 2 bins) * 2 levels
  EXPECT_EQ(rows.size(), 2u * 2 * 2 * (5 + 3 * 2) * 2);

  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, csv_header());
  std::size_t n = 0, failed = 0;
  while (std::getline(in, line)) {
    const ResultRecord r = parse_csv_row(line);
    ++n;
    if (!r.ok) {
      // Only the brute-force search may refuse, and only for d > 16.
      EXPECT_EQ(r.algorithm, "exhaustive");
      EXPECT_GT(r.d, 16u);
      EXPECT_NE(r.error.find("exhaustive"), std::string::npos);
      ++failed;
      continue;
    }
    const auto x = sample(parse_distribution(r.distribution), r.d, r.seed);
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    EXPECT_NEAR(r.vnmse, r.expected_mse / norm2, 1e-9 * r.vnmse);
    EXPECT_LE(r.solve_time_median, 10.0);
    if (r.algorithm == "approx" || r.algorithm == "cp-uniform") {
      EXPECT_EQ(r.sort_time, 0.0);
    }
    EXPECT_EQ(r.m != 0, uses_bins(r.algorithm));
  }
  EXPECT_EQ(n, rows.size());
  EXPECT_EQ(failed, 2u * 2 * 2);
}

TEST(Sweep, CsvRowRoundTrip) {
  ResultRecord r;
  r.algorithm = "accq";
  r.distribution = "weibull:1:1";
  r.d = 4096;
  r.s = 16;
  r.m = 0;
  r.seed = 3;
  r.vnmse = 0.0123456789012345;
  r.solve_time = 1e-3;
  r.sort_time = 2e-4;
  r.expected_mse = 17.5;
  r.solve_time_median = 9e-4;
  const auto back = parse_csv_row(to_csv_row(r));
  EXPECT_EQ(back.vnmse, r.vnmse);
  EXPECT_EQ(back.distribution, r.distribution);
  EXPECT_EQ(back.d, r.d);
  EXPECT_TRUE(back.ok);
  r.ok = false;
  r.error = "bad, really\nbad";
  const auto failed = parse_csv_row(to_csv_row(r));
  EXPECT_FALSE(failed.ok);
  EXPECT_EQ(failed.error, "bad; really;bad");
  EXPECT_THROW(parse_csv_row("a,b,c"), Error);
}

TEST(Sweep, VnmseDecreasesWithLevels) {
  SweepConfig c;
  c.algorithms = {"quiver", "accq"};
  c.dims = {4096};
  for (int s = 4; s <= 16; ++s) c.levels.push_back(s);
  c.distributions = {LogNormal{}};
  c.repetitions = 5;
  c.timing_runs = 1;
  const auto rows = run_sweep(c);
  for (const char* algo : {"quiver", "accq"}) {
    double prev = 1e300;
    for (int s = 4; s <= 16; ++s) {
      double sum = 0.0;
      int n = 0;
      for (const auto& r : rows) {
        if (r.algorithm == algo && r.s == s) {
          ASSERT_TRUE(r.ok);
          sum += r.vnmse;
          ++n;
        }
      }
      ASSERT_EQ(n, 5);
      EXPECT_LT(sum / n, prev) << algo << " s=" << s;
      prev = sum / n;
    }
  }
}

TEST(RunMethod, ApproxSkipsSorting) {
  const auto x = sample(LogNormal{}, 10000, 1);
  const auto a = run_method("approx", x, 16, 400);
  EXPECT_EQ(a.sort_time.count(), 0);
  EXPECT_EQ(a.report.codebook.size(), 16u);
  const auto q = run_method("quiver", x, 16, 0);
  EXPECT_GT(q.sort_time.count(), 0);
  EXPECT_THROW(run_method("nope", x, 4, 0), Error);
}

TEST(Cli, RoundTrip) {
  TempDir dir;
  const std::string vec = (dir / "x.f64").string();
  const std::string book = (dir / "cb.json").string();
  const std::string idx = (dir / "i.u32").string();
  const std::string dec = (dir / "y.f64").string();

  auto r = run_cli({"gen", "--dist", "lognormal", "--d", "3000", "--seed",
                    "4", "-o", vec});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run_cli({"solve", "--algo", "quiver", "--s", "16", vec, "-o", book});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cb = read_codebook(book);
  EXPECT_EQ(cb.codebook.size(), 16u);
  EXPECT_EQ(cb.algorithm, "quiver");
  EXPECT_EQ(cb.d, 3000u);

  const auto x = read_vector(vec);
  const int trials = 200;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    r = run_cli({"quantize", vec, book, "-o", idx, "--seed",
                 std::to_string(t)});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run_cli({"dequantize", idx, book, "-o", dec});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto y = read_vector(dec);
    ASSERT_EQ(y.size(), x.size());
    double sq = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      ASSERT_TRUE(std::binary_search(cb.codebook.levels.begin(),
                                     cb.codebook.levels.end(), y[i]));
      sq += (x[i] - y[i]) * (x[i] - y[i]);
    }
    total += sq;
  }
  double var = 0.0;
  for (double v : x) {
    const auto br = bracket(v, cb.codebook);
    const double p = rounding_probabilities(v, br.lower, br.upper).lower;
    const double e0 = (v - br.lower) * (v - br.lower);
    const double e1 = (br.upper - v) * (br.upper - v);
    const double mean = p * e0 + (1 - p) * e1;
    var += p * e0 * e0 + (1 - p) * e1 * e1 - mean * mean;
  }
  EXPECT_NEAR(total / trials, cb.codebook.expected_mse,
              4 * std::sqrt(var / trials));
}

TEST(Cli, SolveVariants) {
  TempDir dir;
  const std::string vec = (dir / "x.txt").string();
  write_vector(vec, sample(Normal{}, 2000, 2));
  for (const char* algo :
       {"baseline", "accq", "weighted", "cp-uniform", "cp-quantile"}) {
    const auto r = run_cli({"solve", "--algo", algo, "--s", "8", "--m", "64",
                            vec, "-o", (dir / "cb.json").string()});
    EXPECT_EQ(r.code, 0) << algo << ": " << r.err;
  }
  const auto r = run_cli({"solve", "--algo", "approx", "--s", "16", "--m",
                          "400", vec, "-o", (dir / "a.json").string()});
  EXPECT_EQ(r.code, 0);
  const auto cb = read_codebook(dir / "a.json");
  EXPECT_EQ(cb.m, 400u);
  EXPECT_LE(cb.codebook.size(), 16u);

  {
    std::ofstream f(dir / "w.txt");
    f << "0 1\n1 1\n2 1\n3 100\n10 1\n";
  }
  const auto w = run_cli({"solve", "--algo", "weighted", "--s", "3",
                          (dir / "w.txt").string(), "-o",
                          (dir / "w.json").string()});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(read_codebook(dir / "w.json").codebook.levels,
            (std::vector<double>{0, 3, 10}));
}

TEST(Cli, BenchWritesCsv) {
  TempDir dir;
  const std::string cfg = (dir / "cfg.json").string();
  const std::string out = (dir / "out.csv").string();
  {
    std::ofstream f(cfg);
    f << R"({"algorithms": ["quiver", "approx"], "dims": [256],
             "levels": [4], "bins": [32], "repetitions": 2,
             "timing_runs": 1})";
  }
  const auto r = run_cli({"bench", cfg, "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, csv_header());
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 4u);
}

TEST(Cli, Verify) {
  TempDir dir;
  const std::string vec = (dir / "x.f64").string();
  write_vector(vec, sample(Exponential{}, 14, 5));
  const auto r = run_cli({"verify", vec, "--s-max", "6", "--m", "32"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS s=4 exhaustive vs quiver"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const std::string vec = (dir / "x.f64").string();
  write_vector(vec, std::vector<double>{0, 1, 2, 3, 10});

  EXPECT_EQ(run_cli({}).code, kExitValidation);
  const auto usage = run_cli({"solve"});
  EXPECT_EQ(usage.code, kExitValidation);
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({"solve", "--algo", "magic", vec, "-o", "c.json"}).code,
            kExitValidation);
  EXPECT_EQ(run_cli({"solve", "--s", "1", vec, "-o",
                     (dir / "c.json").string()})
                .code,
            kExitValidation);
  EXPECT_EQ(run_cli({"solve", "--algo", "approx", "--s", "4", "--m", "2", vec,
                     "-o", (dir / "c.json").string()})
                .code,
            kExitValidation);
  EXPECT_EQ(run_cli({"solve", (dir / "none.f64").string(), "-o",
                     (dir / "c.json").string()})
                .code,
            kExitRuntime);
  EXPECT_EQ(run_cli({"solve", vec, "-o", (dir / "no/such/dir/c.json").string()})
                .code,
            kExitRuntime);
  EXPECT_EQ(run_cli({"gen", "--dist", "normal:0:-1", "-o", vec}).code,
            kExitValidation);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

}  // namespace
}  // namespace asq
