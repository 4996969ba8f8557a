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

#include "asq/interval_cost.hpp"

#include <string>

namespace asq {
namespace {

void check_pair(std::size_t size, Index k, Index j) {
  if (k > j || j >= size) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "interval (" + std::to_string(k) + ", " + std::to_string(j) +
                    ") outside [0, " + std::to_string(size) + ")");
  }
}

double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

PrefixSums::PrefixSums(std::span<const double> sorted, double origin)
    : x_(sorted.size()),
      beta_(sorted.size() + 1, 0.0),
      gamma_(sorted.size() + 1, 0.0),
      origin_(origin) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double x = sorted[i] - origin;
    x_[i] = x;
    beta_[i + 1] = beta_[i] + x;
    gamma_[i + 1] = gamma_[i] + x * x;
  }
}

Index PrefixSums::best_mid(Index k, Index j) const noexcept {
  Index b = mid_estimate(k, j);
  if (!(x_[j] > x_[k])) return k;
  auto pair = [&](Index m) { return cost(k, m) + cost(m, j); };
  double here = pair(b);
  while (b > k) {
    const double left = pair(b - 1);
    if (left > here) break;
    --b;
    here = left;
  }
  while (b < j) {
    const double right = pair(b + 1);
    if (!(right < here)) break;
    ++b;
    here = right;
  }
  // Positions holding the same value give the same pair cost up to rounding;
  // settle on the leftmost rounded minimum of the whole run.
  Index lo = b, hi = b;
  while (lo > k && x_[lo - 1] == x_[b]) --lo;
  while (hi < j && x_[hi + 1] == x_[b]) ++hi;
  if (lo == hi) return b;
  b = lo;
  here = pair(lo);
  for (Index m = lo + 1; m <= hi; ++m) {
    const double v = pair(m);
    if (v < here) {
      here = v;
      b = m;
    }
  }
  return b;
}

PrefixSums preprocess(const SortedInput& input, double origin) {
  return PrefixSums(input.values(), origin);
}

double cost(const PrefixSums& p, Index k, Index j) {
  check_pair(p.size(), k, j);
  return p.cost(k, j);
}

Index best_mid(const PrefixSums& p, Index k, Index j) {
  check_pair(p.size(), k, j);
  return p.best_mid(k, j);
}

double cost2(const PrefixSums& p, Index k, Index j) {
  check_pair(p.size(), k, j);
  return p.cost2(k, j);
}

template <class BinOf>
void Histogram::accumulate(std::span<const double> raw, BinOf bin_of,
                           bool compact) {
  const std::size_t m = bins();
  shifted_.resize(m + 1);
  for (std::size_t l = 0; l <= m; ++l) shifted_[l] = points_[l] - origin_;

  alpha_.assign(m + 1, 0.0);
  beta_.assign(m + 1, 0.0);
  gamma_.assign(m + 1, 0.0);
  for (double x : raw) {
    const Index l = bin_of(x);
    const double y = x - origin_;
    alpha_[l] += 1.0;
    beta_[l] += y;
    gamma_[l] += y * y;
  }

  occupied_.clear();
  for (std::size_t l = 0; l <= m; ++l) {
    const bool keep = !compact || l == 0 || l == m || alpha_[l] > 0.0 ||
                      alpha_[l + 1] > 0.0;
    if (keep) occupied_.push_back(static_cast<Index>(l));
  }

  for (std::size_t l = 1; l <= m; ++l) {
    alpha_[l] += alpha_[l - 1];
    beta_[l] += beta_[l - 1];
    gamma_[l] += gamma_[l - 1];
  }
}

Histogram histogram_preprocess(std::span<const double> raw, Index m,
                               bool compact, std::optional<double> origin) {
  validate_finite(raw);
  if (m < 1) throw Error(ErrorCode::kBadParameters, "need at least one bin");

  double lo = raw[0], hi = raw[0], sum = 0.0;
  for (double x : raw) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    sum += x;
  }
  if (!(hi > lo)) {
    throw Error(ErrorCode::kDegenerateRange, "all entries are equal");
  }

  Histogram h;
  h.origin_ = origin ? *origin : sum / static_cast<double>(raw.size());
  h.delta_ = (hi - lo) / m;
  h.points_.resize(std::size_t{m} + 1);
  for (Index l = 0; l < m; ++l) h.points_[l] = lo + l * h.delta_;
  h.points_[m] = hi;
  for (Index l = 1; l <= m; ++l) {
    if (!(h.points_[l] > h.points_[l - 1])) {
      throw Error(ErrorCode::kBadParameters,
                  "grid spacing below floating-point resolution");
    }
  }

  const double inv_delta = 1.0 / h.delta_;
  const auto& pts = h.points_;
  auto bin_of = [&](double x) -> Index {
    double t = std::ceil((x - lo) * inv_delta);
    t = std::clamp(t, 0.0, static_cast<double>(m));
    auto l = static_cast<Index>(t);
    // Snap against the stored grid so that pts[l-1] < x <= pts[l] holds
    // exactly, whatever the rounding of the division above.
    while (l > 0 && x <= pts[l - 1]) --l;
    while (l < m && x > pts[l]) ++l;
    return l;
  };
  h.accumulate(raw, bin_of, compact);
  return h;
}

Histogram candidate_histogram(std::span<const double> raw,
                              std::span<const double> candidates, bool compact,
                              std::optional<double> origin) {
  validate_finite(raw);
  validate_finite(candidates);
  const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
  const double lo = *lo_it, hi = *hi_it;

  std::vector<double> pts(candidates.begin(), candidates.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::erase_if(pts, [&](double c) { return c < lo || c > hi; });
  if (pts.empty() || pts.front() != lo || pts.back() != hi) {
    throw Error(ErrorCode::kCandidatesMissingExtremes,
                "candidate set must contain min and max of the input");
  }
  if (pts.size() < 2) {
    throw Error(ErrorCode::kDegenerateRange, "all entries are equal");
  }

  Histogram h;
  h.origin_ = origin ? *origin : mean_of(raw);
  h.points_ = std::move(pts);
  const auto& p = h.points_;
  auto bin_of = [&](double x) -> Index {
    return static_cast<Index>(std::lower_bound(p.begin(), p.end(), x) -
                              p.begin());
  };
  h.accumulate(raw, bin_of, compact);
  return h;
}

double grid_cost(const Histogram& h, Index k, Index j) {
  check_pair(h.bins() + 1, k, j);
  return h.cost(k, j);
}

WeightedPrefix::WeightedPrefix(std::span<const double> sorted,
                               std::span<const double> weights, double origin)
    : x_(sorted.size()),
      alpha_(sorted.size() + 1, 0.0),
      beta_(sorted.size() + 1, 0.0),
      gamma_(sorted.size() + 1, 0.0) {
  if (sorted.size() != weights.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "values and weights differ in length");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double w = weights[i];
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "weight at index " + std::to_string(i) +
                      " is not a positive finite number",
                  i);
    }
    const double x = sorted[i] - origin;
    x_[i] = x;
    alpha_[i + 1] = alpha_[i] + w;
    beta_[i + 1] = beta_[i] + w * x;
    gamma_[i + 1] = gamma_[i] + w * x * x;
  }
}

WeightedPrefix weighted_preprocess(const WeightedInput& input, double origin) {
  return WeightedPrefix(input.values(), input.weights(), origin);
}

WeightedPrefix weighted_preprocess(std::span<const double> sorted,
                                   std::span<const double> weights,
                                   double origin) {
  return WeightedPrefix(sorted, weights, origin);
}

double weighted_cost(const WeightedPrefix& p, Index k, Index j) {
  check_pair(p.size(), k, j);
  return p.cost(k, j);
}

}  // namespace asq
