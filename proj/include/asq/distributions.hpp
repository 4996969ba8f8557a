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

// Synthetic i.i.d. input vectors for the benchmark harness.

#ifndef ASQ_DISTRIBUTIONS_HPP_
#define ASQ_DISTRIBUTIONS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace asq {

struct LogNormal {
  double mu = 0.0;
  double sigma2 = 1.0;
  bool operator==(const LogNormal&) const = default;
};
struct Normal {
  double mu = 0.0;
  double sigma2 = 1.0;
  bool operator==(const Normal&) const = default;
};
struct Exponential {
  double lambda = 1.0;
  bool operator==(const Exponential&) const = default;
};
// sigma2 is the variance of the parent normal before truncation to [a, b].
struct TruncNorm {
  double mu = 0.0;
  double sigma2 = 1.0;
  double a = -1.0;
  double b = 1.0;
  bool operator==(const TruncNorm&) const = default;
};
struct Weibull {
  double k = 1.0;
  double lambda = 1.0;
  bool operator==(const Weibull&) const = default;
};

using Distribution =
    std::variant<LogNormal, Normal, Exponential, TruncNorm, Weibull>;

// Parses "name[:p1[:p2...]]", e.g. "lognormal", "normal:0:4",
// "truncnorm:0:1:-1:1", "weibull:1.5:2". Missing parameters take the
// defaults above. Throws Error(kBadParameters) on unknown names or invalid
// parameters.
Distribution parse_distribution(std::string_view spec);

// Canonical spec string; parse_distribution(format_distribution(d)) == d.
std::string format_distribution(const Distribution& dist);

// Throws Error(kBadParameters) unless sigma2 > 0, lambda > 0, k > 0, a < b.
void validate(const Distribution& dist);

// d i.i.d. draws, deterministic for a given (dist, d, seed).
std::vector<double> sample(const Distribution& dist, std::size_t d,
                           std::uint64_t seed);

}  // namespace asq

#endif  // ASQ_DISTRIBUTIONS_HPP_
