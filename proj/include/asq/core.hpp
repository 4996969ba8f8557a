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

#ifndef ASQ_CORE_HPP_
#define ASQ_CORE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asq {

using Index = std::uint32_t;

enum class ErrorCode {
  kEmpty,
  kNonFinite,
  kNotSorted,
  kSizeMismatch,
  kNonPositiveWeight,
  kSTooSmall,
  kDimensionTooSmall,
  kBinsTooFew,
  kIndexOutOfRange,
  kDegenerateRange,
  kCandidatesMissingExtremes,
  kTooLargeForExhaustive,
  kOutOfCodebookRange,
  kZeroNorm,
  kBadParameters,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. `index` carries
// the offending element position for kNonFinite / kNonPositiveWeight.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

  // Input/argument problems as opposed to environment failures (I/O).
  bool is_validation() const noexcept { return code_ != ErrorCode::kIo; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

// A finite, non-decreasing, non-empty vector. Only constructible through
// validate_and_sort() or from_sorted().
class SortedInput {
 public:
  // Validates an already sorted vector; throws kNotSorted otherwise.
  static SortedInput from_sorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double front() const noexcept { return values_.front(); }
  double back() const noexcept { return values_.back(); }

  // True if the raw input needed no reordering.
  bool was_sorted() const noexcept { return was_sorted_; }

 private:
  friend SortedInput validate_and_sort(std::vector<double> raw);
  SortedInput(std::vector<double> values, bool was_sorted)
      : values_(std::move(values)), was_sorted_(was_sorted) {}

  std::vector<double> values_;
  bool was_sorted_ = true;
};

// Sorted values paired with strictly positive finite weights.
class WeightedInput {
 public:
  // Sorts by value (stable, weights follow their values).
  static WeightedInput make(std::vector<double> values,
                            std::vector<double> weights);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  WeightedInput(std::vector<double> v, std::vector<double> w)
      : values_(std::move(v)), weights_(std::move(w)) {}

  std::vector<double> values_;
  std::vector<double> weights_;
};

// Ordered quantization levels. Levels are strictly increasing; equal values
// handed to make() are collapsed.
struct Codebook {
  std::vector<double> levels;
  double expected_mse = 0.0;

  static Codebook make(std::vector<double> levels, double expected_mse = 0.0);
  std::size_t size() const noexcept { return levels.size(); }
};

enum class Algorithm {
  kBaselineDP,
  kQuiver,
  kAcceleratedQuiver,
  kApproxQuiver,
  kWeightedQuiver,
  kCandidatePoints,
  kExhaustive,
};

std::string_view to_string(Algorithm algorithm);

struct SolveReport {
  Codebook codebook;         // expected_mse recomputed on the input
  double dp_objective = 0;   // the solver's internal objective
  std::size_t backpointers_used = 0;
  std::size_t smawk_calls = 0;
  std::chrono::nanoseconds wall_time{0};
  Algorithm algorithm = Algorithm::kQuiver;
};

// Throws kEmpty on an empty vector and kNonFinite(index) on NaN/inf.
SortedInput validate_and_sort(std::vector<double> raw);

// Throws kEmpty / kNonFinite as above without sorting.
void validate_finite(std::span<const double> raw);

// Returns the distinct values as a zero-error codebook when there are at most
// `s` of them, std::nullopt otherwise. Throws kSTooSmall if s < 2.
std::optional<Codebook> degenerate_solve(const SortedInput& input, int s);

// Relative comparison used for objective equality throughout the library:
// |a - b| <= rel * max(|a|, |b|, floor).
bool nearly_equal(double a, double b, double rel = 1e-9, double floor = 0.0);

}  // namespace asq

#endif  // ASQ_CORE_HPP_
