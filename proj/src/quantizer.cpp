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

#include "asq/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace asq {
namespace {

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr double kClampTolerance = 1e-12;

Index round_entry(double x, const Bracket& br, double u) {
  if (br.lower_index == br.upper_index) return br.lower_index;
  const RoundingProbabilities p = rounding_probabilities(x, br.lower, br.upper);
  return u < p.lower ? br.lower_index : br.upper_index;
}

}  // namespace

double RandomSource::uniform(std::uint64_t counter) const noexcept {
  const std::uint64_t h = mix64(seed_ ^ mix64(counter));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

RandomSource RandomSource::fork(std::uint64_t stream) const noexcept {
  return RandomSource(mix64(seed_ + 0x632be59bd9b4e019ULL * (stream + 1)));
}

Bracket bracket(double x, const Codebook& codebook) {
  const auto& q = codebook.levels;
  if (q.empty()) {
    throw Error(ErrorCode::kOutOfCodebookRange, "empty codebook");
  }
  const double lo = q.front();
  const double hi = q.back();
  const double slack = kClampTolerance * (hi - lo);
  if (x < lo || x > hi || std::isnan(x)) {
    if (x < lo && lo - x <= slack) {
      x = lo;
    } else if (x > hi && x - hi <= slack) {
      x = hi;
    } else {
      throw Error(ErrorCode::kOutOfCodebookRange,
                  "value " + std::to_string(x) + " outside codebook range [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
  // First level strictly greater than x; its predecessor is <= x.
  const auto it = std::upper_bound(q.begin(), q.end(), x);
  const auto lower = static_cast<Index>((it - q.begin()) - 1);
  Bracket br;
  br.lower_index = lower;
  br.lower = q[lower];
  if (q[lower] == x || it == q.end()) {
    br.upper_index = lower;
    br.upper = q[lower];
  } else {
    br.upper_index = lower + 1;
    br.upper = *it;
  }
  return br;
}

RoundingProbabilities rounding_probabilities(double x, double a, double b) {
  RoundingProbabilities p;
  const double width = b - a;
  if (!(width > 0.0)) return p;
  p.lower = std::clamp((b - x) / width, 0.0, 1.0);
  p.upper = 1.0 - p.lower;
  return p;
}

QuantizedVector encode(std::span<const double> x, const Codebook& codebook,
                       const RandomSource& rng) {
  QuantizedVector out;
  out.codebook = codebook;
  out.indices.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.indices[i] = round_entry(x[i], bracket(x[i], codebook), rng.uniform(i));
  }
  return out;
}

std::vector<double> decode(const QuantizedVector& qv) {
  std::vector<double> out(qv.indices.size());
  const auto& q = qv.codebook.levels;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.at(qv.indices[i]);
  return out;
}

double expected_mse(std::span<const double> x, const Codebook& codebook) {
  double total = 0.0;
  for (double v : x) {
    const Bracket br = bracket(v, codebook);
    const double y = std::clamp(v, br.lower, br.upper);
    total += (br.upper - y) * (y - br.lower);
  }
  return total;
}

double expected_mse(std::span<const double> x, std::span<const double> weights,
                    const Codebook& codebook) {
  if (x.size() != weights.size()) {
    throw Error(ErrorCode::kSizeMismatch, "values and weights differ in length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Bracket br = bracket(x[i], codebook);
    const double y = std::clamp(x[i], br.lower, br.upper);
    total += weights[i] * (br.upper - y) * (y - br.lower);
  }
  return total;
}

double vnmse(std::span<const double> x, const Codebook& codebook) {
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (!(norm2 > 0.0)) {
    throw Error(ErrorCode::kZeroNorm, "vNMSE undefined for the zero vector");
  }
  return expected_mse(x, codebook) / norm2;
}

double empirical_mse(std::span<const double> x, const Codebook& codebook,
                     int trials, const RandomSource& rng) {
  if (trials < 1) {
    throw Error(ErrorCode::kBadParameters, "trials must be positive");
  }
  std::vector<Bracket> brackets(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    brackets[i] = bracket(x[i], codebook);
  }
  const auto& q = codebook.levels;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    const RandomSource trial_rng = rng.fork(static_cast<std::uint64_t>(t));
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Index idx = round_entry(x[i], brackets[i], trial_rng.uniform(i));
      const double e = x[i] - q[idx];
      sq += e * e;
    }
    total += sq;
  }
  return total / trials;
}

}  // namespace asq
