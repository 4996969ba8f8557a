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

#ifndef ASQ_QUANTIZER_HPP_
#define ASQ_QUANTIZER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "asq/core.hpp"

namespace asq {

// Counter-based uniform source: the draw for entry i depends only on (seed, i),
// so encodes are reproducible regardless of how entries are partitioned.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  // Uniform double in [0, 1) for the given counter.
  double uniform(std::uint64_t counter) const noexcept;

  // Independent source for trial / stream `stream`.
  RandomSource fork(std::uint64_t stream) const noexcept;

 private:
  std::uint64_t seed_;
};

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  Index lower_index = 0;
  Index upper_index = 0;
};

struct RoundingProbabilities {
  double lower = 1.0;
  double upper = 0.0;
};

struct QuantizedVector {
  std::vector<Index> indices;
  Codebook codebook;
};

// Closest levels a <= x <= b; a == b when x is a level. Values outside the
// codebook by at most 1e-12 of its range are clamped to the nearest end,
// anything further throws kOutOfCodebookRange.
Bracket bracket(double x, const Codebook& codebook);

// P(a) = (b - x) / (b - a), P(b) = 1 - P(a); deterministic when a == b.
RoundingProbabilities rounding_probabilities(double x, double a, double b);

QuantizedVector encode(std::span<const double> x, const Codebook& codebook,
                       const RandomSource& rng);

std::vector<double> decode(const QuantizedVector& qv);

// Sum of (b_x - x)(x - a_x); the weighted form multiplies each term by w.
double expected_mse(std::span<const double> x, const Codebook& codebook);
double expected_mse(std::span<const double> x, std::span<const double> weights,
                    const Codebook& codebook);

// expected_mse / ||x||^2; throws kZeroNorm for the zero vector.
double vnmse(std::span<const double> x, const Codebook& codebook);

// Mean over `trials` independent encodes of ||x - decode(encode(x))||^2.
double empirical_mse(std::span<const double> x, const Codebook& codebook,
                     int trials, const RandomSource& rng);

}  // namespace asq

#endif  // ASQ_QUANTIZER_HPP_
