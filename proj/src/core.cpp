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

#include "asq/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace asq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kSTooSmall: return "STooSmall";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kBinsTooFew: return "BinsTooFew";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDegenerateRange: return "DegenerateRange";
    case ErrorCode::kCandidatesMissingExtremes:
      return "CandidatesMissingExtremes";
    case ErrorCode::kTooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::kOutOfCodebookRange: return "OutOfCodebookRange";
    case ErrorCode::kZeroNorm: return "ZeroNorm";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBaselineDP: return "baseline";
    case Algorithm::kQuiver: return "quiver";
    case Algorithm::kAcceleratedQuiver: return "accq";
    case Algorithm::kApproxQuiver: return "approx";
    case Algorithm::kWeightedQuiver: return "weighted";
    case Algorithm::kCandidatePoints: return "candidates";
    case Algorithm::kExhaustive: return "exhaustive";
  }
  return "unknown";
}

void validate_finite(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorCode::kEmpty, "input vector is empty");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw Error(ErrorCode::kNonFinite,
                  "non-finite value at index " + std::to_string(i), i);
    }
  }
}

SortedInput validate_and_sort(std::vector<double> raw) {
  validate_finite(raw);
  const bool sorted = std::is_sorted(raw.begin(), raw.end());
  if (!sorted) std::sort(raw.begin(), raw.end());
  return SortedInput(std::move(raw), sorted);
}

SortedInput SortedInput::from_sorted(std::vector<double> values) {
  validate_finite(values);
  auto it = std::is_sorted_until(values.begin(), values.end());
  if (it != values.end()) {
    const auto pos = static_cast<std::size_t>(it - values.begin());
    throw Error(ErrorCode::kNotSorted,
                "input is not sorted at index " + std::to_string(pos), pos);
  }
  return SortedInput(std::move(values), true);
}

WeightedInput WeightedInput::make(std::vector<double> values,
                                  std::vector<double> weights) {
  if (values.size() != weights.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "values and weights differ in length");
  }
  validate_finite(values);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      throw Error(ErrorCode::kNonFinite,
                  "non-finite weight at index " + std::to_string(i), i);
    }
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveWeight,
                  "non-positive weight at index " + std::to_string(i), i);
    }
  }
  if (!std::is_sorted(values.begin(), values.end())) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return values[a] < values[b];
                     });
    std::vector<double> v(values.size()), w(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      v[i] = values[order[i]];
      w[i] = weights[order[i]];
    }
    values = std::move(v);
    weights = std::move(w);
  }
  return WeightedInput(std::move(values), std::move(weights));
}

Codebook Codebook::make(std::vector<double> levels, double expected_mse) {
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return Codebook{std::move(levels), expected_mse};
}

std::optional<Codebook> degenerate_solve(const SortedInput& input, int s) {
  if (s < 2) {
    throw Error(ErrorCode::kSTooSmall, "need at least two levels (s >= 2)");
  }
  std::vector<double> distinct;
  for (double x : input.values()) {
    if (distinct.empty() || distinct.back() != x) {
      if (distinct.size() == static_cast<std::size_t>(s)) return std::nullopt;
      distinct.push_back(x);
    }
  }
  return Codebook{std::move(distinct), 0.0};
}

bool nearly_equal(double a, double b, double rel, double floor) {
  const double scale = std::max({std::fabs(a), std::fabs(b), floor});
  return std::fabs(a - b) <= rel * scale;
}

}  // namespace asq
