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

// Constant-time interval variance costs.
//
// Positions are 0-based throughout: level position k refers to values[k].
// The 1-based C[k, j] of the textbook recurrence is cost(k - 1, j - 1) here.
//
// cost(k, j) is the total stochastic-rounding variance of the entries lying in
// the half-open value range (x_k, x_j] when x_k and x_j are consecutive
// levels, i.e. sum of (x_j - x)(x - x_k). Entries equal to x_k contribute zero
// variance, which is why the left end is open.
//
// Every structure accepts an `origin` that is subtracted from all values before
// accumulating. Costs are translation invariant, so this only reduces
// cancellation in the prefix differences; stored sums refer to shifted values.

#ifndef ASQ_INTERVAL_COST_HPP_
#define ASQ_INTERVAL_COST_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "asq/core.hpp"

namespace asq {

class PrefixSums {
 public:
  PrefixSums() = default;
  explicit PrefixSums(std::span<const double> sorted, double origin = 0.0);

  std::size_t size() const noexcept { return x_.size(); }
  double origin() const noexcept { return origin_; }
  // beta[j] = sum of the first j (shifted) values; beta[0] = 0.
  std::span<const double> beta() const noexcept { return beta_; }
  std::span<const double> gamma() const noexcept { return gamma_; }

  // Unchecked hot-path queries; require k <= j < size(). Zero-width
  // intervals cost exactly 0.
  double cost(Index k, Index j) const noexcept {
    const double xk = x_[k];
    const double xj = x_[j];
    if (!(xj > xk)) return 0.0;
    const double v = -xj * xk * static_cast<double>(j - k) +
                     (xj + xk) * (beta_[j + 1] - beta_[k + 1]) -
                     (gamma_[j + 1] - gamma_[k + 1]);
    return v > 0.0 ? v : 0.0;
  }

  // Closed-form middle level: the smallest b in [k, j] at which the slope of
  // the three-level variance becomes non-negative. May be off by one position
  // when the ratio lands within rounding of an integer (the two candidates
  // then tie up to rounding).
  Index mid_estimate(Index k, Index j) const noexcept {
    const double xk = x_[k];
    const double xj = x_[j];
    if (!(xj > xk)) return k;
    const double n = static_cast<double>(j - k);
    const double num = n * xj - (beta_[j + 1] - beta_[k + 1]);
    double t = std::ceil(num / (xj - xk));
    t = std::clamp(t, 0.0, n);
    return k + static_cast<Index>(t);
  }

  // mid_estimate() refined by a local search on the exact pair cost, so the
  // result is the smallest-index minimizer of cost(k, b) + cost(b, j).
  Index best_mid(Index k, Index j) const noexcept;

  double cost2(Index k, Index j) const noexcept {
    const Index b = best_mid(k, j);
    return cost(k, b) + cost(b, j);
  }

  // cost2 using the unrefined estimate; used inside the accelerated solver.
  double cost2_fast(Index k, Index j) const noexcept {
    const Index b = mid_estimate(k, j);
    return cost(k, b) + cost(b, j);
  }

 private:
  std::vector<double> x_;
  std::vector<double> beta_;
  std::vector<double> gamma_;
  double origin_ = 0.0;
};

// Cumulative count/sum/sum-of-squares over a sorted grid of candidate levels.
// Bin l holds the entries x with points[l-1] < x <= points[l]; bin 0 holds the
// entries equal to points[0]. alpha[l] is the number of entries <= points[l].
class Histogram {
 public:
  std::size_t bins() const noexcept { return points_.size() - 1; }  // m
  double grid_min() const noexcept { return points_.front(); }
  double grid_max() const noexcept { return points_.back(); }
  // Spacing of a uniform grid; 0 for an arbitrary candidate grid.
  double delta() const noexcept { return delta_; }
  double origin() const noexcept { return origin_; }

  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> alpha() const noexcept { return alpha_; }
  std::span<const double> beta() const noexcept { return beta_; }
  std::span<const double> gamma() const noexcept { return gamma_; }

  // Grid indices that can appear in an optimal codebook: both endpoints of
  // every non-empty bin, plus 0 and m. With compaction disabled, 0..m.
  std::span<const Index> occupied() const noexcept { return occupied_; }

  // C_m[k, j] for grid indices k <= j <= m (unchecked).
  double cost(Index k, Index j) const noexcept {
    const double sk = shifted_[k];
    const double sj = shifted_[j];
    const double v = -sj * sk * (alpha_[j] - alpha_[k]) +
                     (sj + sk) * (beta_[j] - beta_[k]) -
                     (gamma_[j] - gamma_[k]);
    return v > 0.0 ? v : 0.0;
  }

 private:
  friend Histogram histogram_preprocess(std::span<const double>, Index, bool,
                                        std::optional<double>);
  friend Histogram candidate_histogram(std::span<const double>,
                                       std::span<const double>, bool,
                                       std::optional<double>);

  template <class BinOf>
  void accumulate(std::span<const double> raw, BinOf bin_of, bool compact);

  std::vector<double> points_;
  std::vector<double> shifted_;
  std::vector<double> alpha_, beta_, gamma_;
  std::vector<Index> occupied_;
  double delta_ = 0.0;
  double origin_ = 0.0;
};

// Single O(d) pass over unsorted input onto the uniform grid
// x_min + l * (x_max - x_min) / m, l = 0..m. Throws kDegenerateRange when all
// entries are equal. An empty `origin` selects the mean of the input.
Histogram histogram_preprocess(std::span<const double> raw, Index m,
                               bool compact = true,
                               std::optional<double> origin = 0.0);

// Same arrays over an arbitrary sorted candidate grid (duplicates removed).
// The candidates must contain min(raw) and max(raw).
Histogram candidate_histogram(std::span<const double> raw,
                              std::span<const double> candidates,
                              bool compact = true,
                              std::optional<double> origin = 0.0);

class WeightedPrefix {
 public:
  WeightedPrefix() = default;
  WeightedPrefix(std::span<const double> sorted,
                 std::span<const double> weights, double origin = 0.0);

  std::size_t size() const noexcept { return x_.size(); }
  std::span<const double> alpha() const noexcept { return alpha_; }
  std::span<const double> beta() const noexcept { return beta_; }
  std::span<const double> gamma() const noexcept { return gamma_; }

  double cost(Index k, Index j) const noexcept {
    const double xk = x_[k];
    const double xj = x_[j];
    if (!(xj > xk)) return 0.0;
    const double v = -xj * xk * (alpha_[j + 1] - alpha_[k + 1]) +
                     (xj + xk) * (beta_[j + 1] - beta_[k + 1]) -
                     (gamma_[j + 1] - gamma_[k + 1]);
    return v > 0.0 ? v : 0.0;
  }

 private:
  std::vector<double> x_;
  std::vector<double> alpha_, beta_, gamma_;
};

// Checked entry points. All throw kIndexOutOfRange unless k <= j < size.

PrefixSums preprocess(const SortedInput& input, double origin = 0.0);
double cost(const PrefixSums& p, Index k, Index j);
Index best_mid(const PrefixSums& p, Index k, Index j);
double cost2(const PrefixSums& p, Index k, Index j);

double grid_cost(const Histogram& h, Index k, Index j);

// Throws kNonPositiveWeight if any weight is not strictly positive.
WeightedPrefix weighted_preprocess(const WeightedInput& input,
                                   double origin = 0.0);
WeightedPrefix weighted_preprocess(std::span<const double> sorted,
                                   std::span<const double> weights,
                                   double origin = 0.0);
double weighted_cost(const WeightedPrefix& p, Index k, Index j);

}  // namespace asq

#endif  // ASQ_INTERVAL_COST_HPP_
