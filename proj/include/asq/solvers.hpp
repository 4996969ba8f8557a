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

// Codebook construction for unbiased stochastic quantization.
//
// All exact solvers minimize sum over x of (b_x - x)(x - a_x) over level sets
// Q that contain min(X) and max(X) and have at most s elements. The dynamic
// program keeps
//
//   MSE[i][j] = min over k <= j of MSE[i-1][k] + C(k, j),  MSE[2][j] = C(0, j)
//
// where MSE[i][j] is the best error of x_0..x_j using at most i levels that
// include x_j. k == j is allowed, so a row never exceeds the previous one and
// codebooks shorter than s fall out naturally. Ties go to the smallest k.

#ifndef ASQ_SOLVERS_HPP_
#define ASQ_SOLVERS_HPP_

#include <span>
#include <vector>

#include "asq/core.hpp"

namespace asq {

// O(s * d^2) reference dynamic program. Throws kSTooSmall (s < 2) and
// kDimensionTooSmall (d < 2).
SolveReport baseline_dp(const SortedInput& input, int s);

// O(s * d): one SMAWK column-minima pass per level, s - 2 passes in total.
SolveReport quiver(const SortedInput& input, int s);

// Adds two levels per SMAWK pass using the closed-form middle level, so it
// makes floor(s / 2) - 1 passes. Same optimum as quiver().
SolveReport accelerated_quiver(const SortedInput& input, int s);

// Levels restricted to the uniform grid of m + 1 points over [min, max] of
// the unsorted input; optimal among grid subsets, O(d + s * m). All-equal
// input yields the single level. Throws kBinsTooFew if m + 1 < s.
SolveReport approx_quiver(std::span<const double> raw, int s, Index m,
                          bool compact = true);

// Minimizes sum of w_i (b - x_i)(x_i - a) with the quiver() recurrence.
SolveReport weighted_quiver(const WeightedInput& input, int s);

// Optimal codebook restricted to `candidates`, evaluated exactly on `raw`.
// Throws kCandidatesMissingExtremes if min(raw) or max(raw) is absent.
SolveReport solve_on_candidates(std::span<const double> raw,
                                std::span<const double> candidates, int s);

// {x_min + l * (x_max - x_min) / m : l = 0..m}
std::vector<double> uniform_candidates(std::span<const double> raw, Index m);
// {x_(floor(l * (d - 1) / m)) : l = 0..m} over the sorted input (0-based).
std::vector<double> quantile_candidates(const SortedInput& input, Index m);

// Enumerates every level subset; limited to d <= 16 and s <= 6
// (kTooLargeForExhaustive). The objective is summed entry by entry without
// prefix arrays.
SolveReport exhaustive_opt(const SortedInput& input, int s);

// Full MSE tables (row r holds MSE[r + 2][*]) of the quiver() and
// baseline_dp() recurrences, for inspection and tests.
std::vector<std::vector<double>> quiver_mse_table(const SortedInput& input,
                                                  int s);
std::vector<std::vector<double>> baseline_mse_table(const SortedInput& input,
                                                    int s);

// Dispatch by algorithm after handling inputs with at most s distinct values
// (returned as a zero-error codebook). kApproxQuiver and kCandidatePoints use
// `m` as the grid size (uniform candidates for the latter). kWeightedQuiver
// runs with unit weights here.
SolveReport solve(Algorithm algorithm, const SortedInput& input, int s,
                  Index m = 0);

}  // namespace asq

#endif  // ASQ_SOLVERS_HPP_
