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

#include "asq/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <string>

#include "asq/interval_cost.hpp"
#include "asq/quantizer.hpp"
#include "asq/smawk.hpp"

namespace asq {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_levels(int s) {
  if (s < 2) {
    throw Error(ErrorCode::kSTooSmall, "need at least two levels (s >= 2)");
  }
}

void check_dimension(std::size_t d) {
  if (d < 2) {
    throw Error(ErrorCode::kDimensionTooSmall,
                "exact solvers need at least two entries");
  }
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

// Backpointers of a monotone dynamic program: `passes` rows of n entries.
struct Backpointers {
  std::size_t n = 0;
  std::vector<Index> k;

  Index at(std::size_t pass, Index j) const { return k[pass * n + j]; }
  std::span<Index> row(std::size_t pass) {
    return std::span<Index>(k).subspan(pass * n, n);
  }
};

// Applies row[j] <- min_{k <= j} row[k] + step(k, j) `passes` times through
// SMAWK on the transposed matrix (rows j, columns k, +inf above the diagonal).
template <class Step>
Backpointers smawk_passes(std::vector<double>& row, std::size_t passes,
                          const Step& step) {
  const std::size_t n = row.size();
  Backpointers bp;
  bp.n = n;
  bp.k.resize(passes * n);
  std::vector<double> next(n);
  SmawkWorkspace ws;
  for (std::size_t pass = 0; pass < passes; ++pass) {
    const double* prev = row.data();
    auto eval = [prev, &step](Index j, Index k) {
      return k <= j ? prev[k] + step(k, j) : kInf;
    };
    row_minima_into(n, n, eval, bp.row(pass), next, ws);
    row.swap(next);
  }
  return bp;
}

// Walks the backpointers from the last position; returns the positions of
// the levels added by each pass (last pass first).
std::vector<Index> walk_back(const Backpointers& bp, std::size_t passes) {
  std::vector<Index> out;
  Index j = static_cast<Index>(bp.n - 1);
  for (std::size_t pass = passes; pass-- > 0;) {
    j = bp.at(pass, j);
    out.push_back(j);
  }
  return out;
}

template <class Fill>
SolveReport finish(Algorithm algorithm, Clock::time_point start,
                   std::vector<double> levels, double objective,
                   std::size_t backpointers, std::size_t smawk_calls,
                   const Fill& recompute) {
  SolveReport r;
  r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
  r.algorithm = algorithm;
  r.dp_objective = objective;
  r.backpointers_used = backpointers;
  r.smawk_calls = smawk_calls;
  r.codebook = Codebook::make(std::move(levels));
  r.codebook.expected_mse = recompute(r.codebook);
  return r;
}

// Plain quiver recurrence over a grid histogram restricted to its occupied
// indices; shared by the approximate and candidate-point solvers.
SolveReport solve_on_grid(const Histogram& h, std::span<const double> raw,
                          int s, Algorithm algorithm, Clock::time_point start) {
  const auto pos = h.occupied();
  const std::size_t n = pos.size();
  auto step = [&h, pos](Index k, Index j) { return h.cost(pos[k], pos[j]); };

  std::vector<double> row(n);
  for (std::size_t j = 0; j < n; ++j) row[j] = step(0, static_cast<Index>(j));
  const std::size_t passes = static_cast<std::size_t>(s) - 2;
  const Backpointers bp = smawk_passes(row, passes, step);

  const auto points = h.points();
  std::vector<double> levels{points[pos.front()], points[pos.back()]};
  for (Index p : walk_back(bp, passes)) levels.push_back(points[pos[p]]);
  return finish(algorithm, start, std::move(levels), row.back(), bp.k.size(),
                passes, [&](const Codebook& cb) { return expected_mse(raw, cb); });
}

std::vector<std::vector<double>> run_baseline_table(const PrefixSums& p, int s,
                                                    std::vector<Index>* back) {
  const std::size_t n = p.size();
  std::vector<std::vector<double>> table;
  table.emplace_back(n);
  for (Index j = 0; j < n; ++j) table[0][j] = p.cost(0, j);
  if (back) back->assign((static_cast<std::size_t>(s) - 2) * n, 0);
  for (int i = 3; i <= s; ++i) {
    const auto& prev = table.back();
    std::vector<double> cur(n);
    const std::size_t pass = static_cast<std::size_t>(i) - 3;
    for (Index j = 0; j < n; ++j) {
      double best = kInf;
      Index arg = 0;
      for (Index k = 0; k <= j; ++k) {
        const double v = prev[k] + p.cost(k, j);
        if (v < best) {
          best = v;
          arg = k;
        }
      }
      cur[j] = best;
      if (back) (*back)[pass * n + j] = arg;
    }
    table.push_back(std::move(cur));
  }
  return table;
}

}  // namespace

SolveReport baseline_dp(const SortedInput& input, int s) {
  check_levels(s);
  check_dimension(input.size());
  const auto start = Clock::now();
  const auto x = input.values();
  const PrefixSums p(x, mean_of(x));

  Backpointers bp;
  bp.n = x.size();
  const auto table = run_baseline_table(p, s, &bp.k);
  const std::size_t passes = static_cast<std::size_t>(s) - 2;

  std::vector<double> levels{x.front(), x.back()};
  for (Index j : walk_back(bp, passes)) levels.push_back(x[j]);
  return finish(Algorithm::kBaselineDP, start, std::move(levels),
                table.back().back(), bp.k.size(), 0,
                [&](const Codebook& cb) { return expected_mse(x, cb); });
}

SolveReport quiver(const SortedInput& input, int s) {
  check_levels(s);
  check_dimension(input.size());
  const auto start = Clock::now();
  const auto x = input.values();
  const PrefixSums p(x, mean_of(x));
  const std::size_t n = x.size();

  std::vector<double> row(n);
  for (Index j = 0; j < n; ++j) row[j] = p.cost(0, j);
  const std::size_t passes = static_cast<std::size_t>(s) - 2;
  const Backpointers bp = smawk_passes(
      row, passes, [&p](Index k, Index j) { return p.cost(k, j); });

  std::vector<double> levels{x.front(), x.back()};
  for (Index j : walk_back(bp, passes)) levels.push_back(x[j]);
  return finish(Algorithm::kQuiver, start, std::move(levels), row.back(),
                bp.k.size(), passes,
                [&](const Codebook& cb) { return expected_mse(x, cb); });
}

SolveReport accelerated_quiver(const SortedInput& input, int s) {
  check_levels(s);
  check_dimension(input.size());
  const auto start = Clock::now();
  const auto x = input.values();
  const PrefixSums p(x, mean_of(x));
  const std::size_t n = x.size();
  const bool odd = s % 2 == 1;

  // Even s starts from two levels, odd s from three (one closed-form middle).
  std::vector<double> row(n);
  for (Index j = 0; j < n; ++j) row[j] = odd ? p.cost2_fast(0, j) : p.cost(0, j);
  const std::size_t passes = static_cast<std::size_t>(s / 2) - 1;
  const Backpointers bp = smawk_passes(
      row, passes, [&p](Index k, Index j) { return p.cost2_fast(k, j); });

  std::vector<double> levels{x.front(), x.back()};
  Index j = static_cast<Index>(n - 1);
  for (std::size_t pass = passes; pass-- > 0;) {
    const Index k = bp.at(pass, j);
    levels.push_back(x[p.best_mid(k, j)]);
    levels.push_back(x[k]);
    j = k;
  }
  if (odd) levels.push_back(x[p.best_mid(0, j)]);
  return finish(Algorithm::kAcceleratedQuiver, start, std::move(levels),
                row.back(), bp.k.size(), passes,
                [&](const Codebook& cb) { return expected_mse(x, cb); });
}

SolveReport approx_quiver(std::span<const double> raw, int s, Index m,
                          bool compact) {
  check_levels(s);
  if (static_cast<std::size_t>(m) + 1 < static_cast<std::size_t>(s)) {
    throw Error(ErrorCode::kBinsTooFew,
                "grid of " + std::to_string(m) + " bins has fewer than s = " +
                    std::to_string(s) + " points");
  }
  const auto start = Clock::now();
  validate_finite(raw);
  Histogram h;
  try {
    h = histogram_preprocess(raw, m, compact, std::nullopt);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateRange) throw;
    return finish(Algorithm::kApproxQuiver, start, {raw.front()}, 0.0, 0, 0,
                  [&](const Codebook& cb) { return expected_mse(raw, cb); });
  }
  return solve_on_grid(h, raw, s, Algorithm::kApproxQuiver, start);
}

SolveReport weighted_quiver(const WeightedInput& input, int s) {
  check_levels(s);
  check_dimension(input.size());
  const auto start = Clock::now();
  const auto x = input.values();
  const auto w = input.weights();
  double wsum = 0.0, wxsum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    wsum += w[i];
    wxsum += w[i] * x[i];
  }
  const WeightedPrefix p(x, w, wxsum / wsum);
  const std::size_t n = x.size();

  std::vector<double> row(n);
  for (Index j = 0; j < n; ++j) row[j] = p.cost(0, j);
  const std::size_t passes = static_cast<std::size_t>(s) - 2;
  const Backpointers bp = smawk_passes(
      row, passes, [&p](Index k, Index j) { return p.cost(k, j); });

  std::vector<double> levels{x.front(), x.back()};
  for (Index j : walk_back(bp, passes)) levels.push_back(x[j]);
  return finish(Algorithm::kWeightedQuiver, start, std::move(levels),
                row.back(), bp.k.size(), passes,
                [&](const Codebook& cb) { return expected_mse(x, w, cb); });
}

SolveReport solve_on_candidates(std::span<const double> raw,
                                std::span<const double> candidates, int s) {
  check_levels(s);
  const auto start = Clock::now();
  validate_finite(raw);
  Histogram h;
  try {
    h = candidate_histogram(raw, candidates, true, std::nullopt);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateRange) throw;
    return finish(Algorithm::kCandidatePoints, start, {raw.front()}, 0.0, 0, 0,
                  [&](const Codebook& cb) { return expected_mse(raw, cb); });
  }
  return solve_on_grid(h, raw, s, Algorithm::kCandidatePoints, start);
}

std::vector<double> uniform_candidates(std::span<const double> raw, Index m) {
  validate_finite(raw);
  if (m < 1) throw Error(ErrorCode::kBadParameters, "need at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *lo_it, hi = *hi_it;
  const double delta = (hi - lo) / m;
  std::vector<double> out(std::size_t{m} + 1);
  for (Index l = 0; l < m; ++l) out[l] = lo + l * delta;
  out[m] = hi;
  return out;
}

std::vector<double> quantile_candidates(const SortedInput& input, Index m) {
  if (m < 1) throw Error(ErrorCode::kBadParameters, "need at least one bin");
  const std::size_t d = input.size();
  std::vector<double> out(std::size_t{m} + 1);
  for (Index l = 0; l <= m; ++l) {
    const std::size_t idx = static_cast<std::size_t>(l) * (d - 1) / m;
    out[l] = input[idx];
  }
  return out;
}

SolveReport exhaustive_opt(const SortedInput& input, int s) {
  check_levels(s);
  check_dimension(input.size());
  if (input.size() > 16 || s > 6) {
    throw Error(ErrorCode::kTooLargeForExhaustive,
                "exhaustive search limited to d <= 16 and s <= 6");
  }
  const auto start = Clock::now();
  const auto x = input.values();
  std::vector<double> interior;
  for (double v : x) {
    if (v != x.front() && v != x.back() &&
        (interior.empty() || interior.back() != v)) {
      interior.push_back(v);
    }
  }

  // Direct per-entry variance against a sorted level list.
  auto objective = [&](const std::vector<double>& q) {
    double total = 0.0;
    for (double v : x) {
      std::size_t hi = 0;
      while (q[hi] < v) ++hi;
      if (q[hi] == v) continue;
      total += (q[hi] - v) * (v - q[hi - 1]);
    }
    return total;
  };

  std::vector<double> best_levels{x.front(), x.back()};
  double best = objective(best_levels);
  const std::size_t max_extra =
      std::min(interior.size(), static_cast<std::size_t>(s) - 2);
  // Subsets in order of size, then lexicographically; keeps the first optimum.
  for (std::size_t r = 1; r <= max_extra; ++r) {
    std::vector<std::size_t> pick(r);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      std::vector<double> q{x.front()};
      for (std::size_t i : pick) q.push_back(interior[i]);
      q.push_back(x.back());
      const double v = objective(q);
      if (v < best) {
        best = v;
        best_levels = q;
      }
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == interior.size() - r + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < r; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return finish(Algorithm::kExhaustive, start, std::move(best_levels), best, 0,
                0, [&](const Codebook& cb) { return expected_mse(x, cb); });
}

std::vector<std::vector<double>> quiver_mse_table(const SortedInput& input,
                                                  int s) {
  check_levels(s);
  check_dimension(input.size());
  const auto x = input.values();
  const PrefixSums p(x, mean_of(x));
  std::vector<double> row(x.size());
  for (Index j = 0; j < x.size(); ++j) row[j] = p.cost(0, j);
  std::vector<std::vector<double>> table{row};
  for (int i = 3; i <= s; ++i) {
    smawk_passes(row, 1, [&p](Index k, Index j) { return p.cost(k, j); });
    table.push_back(row);
  }
  return table;
}

std::vector<std::vector<double>> baseline_mse_table(const SortedInput& input,
                                                    int s) {
  check_levels(s);
  check_dimension(input.size());
  const auto x = input.values();
  return run_baseline_table(PrefixSums(x, mean_of(x)), s, nullptr);
}

SolveReport solve(Algorithm algorithm, const SortedInput& input, int s,
                  Index m) {
  if (algorithm != Algorithm::kApproxQuiver &&
      algorithm != Algorithm::kCandidatePoints) {
    if (auto cb = degenerate_solve(input, s)) {
      SolveReport r;
      r.algorithm = algorithm;
      r.codebook = std::move(*cb);
      return r;
    }
  }
  switch (algorithm) {
    case Algorithm::kBaselineDP: return baseline_dp(input, s);
    case Algorithm::kQuiver: return quiver(input, s);
    case Algorithm::kAcceleratedQuiver: return accelerated_quiver(input, s);
    case Algorithm::kApproxQuiver: return approx_quiver(input.values(), s, m);
    case Algorithm::kWeightedQuiver: {
      const auto x = input.values();
      return weighted_quiver(
          WeightedInput::make({x.begin(), x.end()},
                              std::vector<double>(x.size(), 1.0)),
          s);
    }
    case Algorithm::kCandidatePoints:
      return solve_on_candidates(input.values(),
                                 uniform_candidates(input.values(), m), s);
    case Algorithm::kExhaustive: return exhaustive_opt(input, s);
  }
  throw Error(ErrorCode::kBadParameters, "unknown algorithm");
}

}  // namespace asq
