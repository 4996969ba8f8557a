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

#include "asq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "asq/interval_cost.hpp"
#include "asq/quantizer.hpp"
#include "asq/solvers.hpp"

namespace asq {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class Collector {
 public:
  explicit Collector(VerifyReport& r) : report_(r) {}

  void add(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void same(const std::string& name, double a, double b, double floor) {
    add(name, nearly_equal(a, b, 1e-9, floor),
        fmt(a) + " vs " + fmt(b));
  }

 private:
  VerifyReport& report_;
};

template <class Cost>
std::size_t quadrangle_violations(std::size_t n, std::size_t samples,
                                  std::mt19937_64& gen, double tol,
                                  Cost cost) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    std::size_t q[4] = {pick(gen), pick(gen), pick(gen), pick(gen)};
    std::sort(q, q + 4);
    const auto a = static_cast<Index>(q[0]);
    const auto b = static_cast<Index>(q[1]);
    const auto c = static_cast<Index>(q[2]);
    const auto e = static_cast<Index>(q[3]);
    if (cost(a, c) + cost(b, e) > cost(a, e) + cost(b, c) + tol) ++bad;
  }
  return bad;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.ok; });
}

VerifyReport verify_vector(std::span<const double> raw,
                           const VerifyOptions& options) {
  VerifyReport report;
  Collector out(report);
  const SortedInput input =
      validate_and_sort(std::vector<double>(raw.begin(), raw.end()));
  const std::size_t d = input.size();
  if (d < 2) {
    throw Error(ErrorCode::kDimensionTooSmall, "verify needs at least 2 entries");
  }
  const double range = input.back() - input.front();
  double scale = 0.0;
  double mean = 0.0;
  for (double v : input.values()) mean += v;
  mean /= static_cast<double>(d);
  for (double v : input.values()) scale += (v - mean) * (v - mean);
  const double floor = scale;

  for (int s = 2; s <= options.max_levels; ++s) {
    const std::string tag = "s=" + std::to_string(s) + " ";
    const SolveReport q = solve(Algorithm::kQuiver, input, s);
    const double opt = q.codebook.expected_mse;
    out.add(tag + "quiver level count", q.codebook.size() <= std::size_t(s),
            std::to_string(q.codebook.size()));
    out.same(tag + "quiver objective vs recomputed", q.dp_objective, opt,
             floor);

    const SolveReport acc = solve(Algorithm::kAcceleratedQuiver, input, s);
    out.same(tag + "accq vs quiver", acc.codebook.expected_mse, opt, floor);

    const SolveReport w = solve(Algorithm::kWeightedQuiver, input, s);
    out.same(tag + "weighted(unit) vs quiver", w.codebook.expected_mse, opt,
             floor);

    if (d <= options.baseline_limit) {
      const SolveReport b = solve(Algorithm::kBaselineDP, input, s);
      out.same(tag + "baseline vs quiver", b.codebook.expected_mse, opt,
               floor);
    }
    if (d <= 16 && s <= 6) {
      const SolveReport ex = solve(Algorithm::kExhaustive, input, s);
      out.same(tag + "exhaustive vs quiver", ex.codebook.expected_mse, opt,
               floor);
    }

    const int s_grid = 2 * s - 2;
    if (range > 0.0 && options.bins + 1 >= static_cast<Index>(s_grid)) {
      const SolveReport aq = approx_quiver(raw, s_grid, options.bins);
      const double m = static_cast<double>(options.bins);
      const double bound =
          opt + static_cast<double>(d) * range * range / (4.0 * m * m);
      out.add(tag + "grid bound m=" + std::to_string(options.bins),
              aq.codebook.expected_mse <= bound + 1e-9 * floor,
              fmt(aq.codebook.expected_mse) + " <= " + fmt(bound));
    }
  }

  std::mt19937_64 gen(options.seed);
  const PrefixSums p(input.values(), mean);
  const double tol = 1e-9 * std::max(scale, 1e-300);
  const std::size_t bad1 = quadrangle_violations(
      d, options.quadruples, gen, tol,
      [&](Index k, Index j) { return p.cost(k, j); });
  out.add("quadrangle inequality C", bad1 == 0,
          std::to_string(bad1) + " violations");
  const std::size_t bad2 = quadrangle_violations(
      d, options.quadruples, gen, tol,
      [&](Index k, Index j) { return p.cost2(k, j); });
  out.add("quadrangle inequality C2", bad2 == 0,
          std::to_string(bad2) + " violations");
  return report;
}

}  // namespace asq
