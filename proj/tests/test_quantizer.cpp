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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "asq/distributions.hpp"
#include "asq/quantizer.hpp"
#include "asq/solvers.hpp"

namespace asq {
namespace {

Codebook cb(std::vector<double> levels) { return Codebook::make(std::move(levels)); }

TEST(Bracket, Examples) {
  auto b = bracket(0.25, cb({0, 1}));
  EXPECT_EQ(b.lower, 0.0);
  EXPECT_EQ(b.upper, 1.0);
  b = bracket(1, cb({0, 1, 2}));
  EXPECT_EQ(b.lower, 1.0);
  EXPECT_EQ(b.upper, 1.0);
  EXPECT_EQ(b.lower_index, 1u);
  EXPECT_EQ(b.upper_index, 1u);
  b = bracket(7, cb({0, 3, 10}));
  EXPECT_EQ(b.lower, 3.0);
  EXPECT_EQ(b.upper, 10.0);
  b = bracket(10, cb({0, 3, 10}));
  EXPECT_EQ(b.lower_index, 2u);
  EXPECT_EQ(b.upper_index, 2u);
}

TEST(Bracket, ClampsOnlyTinyExcursions) {
  const auto q = cb({0, 10});
  const auto b = bracket(10 + 1e-12, q);
  EXPECT_EQ(b.lower_index, 1u);
  EXPECT_EQ(b.upper_index, 1u);
  EXPECT_EQ(bracket(-5e-12, q).lower_index, 0u);
  try {
    bracket(10.001, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfCodebookRange);
  }
  EXPECT_THROW(bracket(-1, q), Error);
}

TEST(Bracket, IsTightOnRandomInputs) {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<double> levels{-5, 5};
  for (int i = 0; i < 20; ++i) levels.push_back(u(gen));
  const auto q = cb(levels);
  for (int t = 0; t < 10000; ++t) {
    const double x = u(gen);
    const auto b = bracket(x, q);
    ASSERT_LE(b.lower, x);
    ASSERT_GE(b.upper, x);
    for (double l : q.levels) {
      ASSERT_FALSE(l > b.lower && l < x);
      ASSERT_FALSE(l > x && l < b.upper);
    }
  }
}

TEST(RoundingProbabilities, Unbiased) {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int t = 0; t < 100000; ++t) {
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    const double x = a + (b - a) * std::uniform_real_distribution<double>()(gen);
    const auto p = rounding_probabilities(x, a, b);
    ASSERT_NEAR(p.lower + p.upper, 1.0, 1e-15);
    ASSERT_NEAR(p.lower * a + p.upper * b, x,
                1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)}));
  }
  const auto d = rounding_probabilities(3, 3, 3);
  EXPECT_EQ(d.lower, 1.0);
  EXPECT_EQ(d.upper, 0.0);
}

TEST(Encode, EmpiricalFrequencyMatchesProbability) {
  const std::vector<double> x(1000000, 0.25);
  const auto q = encode(x, cb({0, 1}), RandomSource(7));
  double mean = 0.0;
  for (double v : decode(q)) mean += v;
  mean /= static_cast<double>(x.size());
  const double sigma = std::sqrt(0.1875 / 1e6);
  EXPECT_NEAR(mean, 0.25, 4 * sigma);
}

TEST(Encode, ExactLevelsAreDeterministic) {
  const std::vector<double> x{0, 1};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto q = encode(x, cb({0, 1}), RandomSource(seed));
    EXPECT_EQ(q.indices, (std::vector<Index>{0, 1}));
    EXPECT_EQ(decode(q), x);
  }
  const std::vector<double> y(100, 2.0);
  const auto q = encode(y, cb({0, 2, 5}), RandomSource(3));
  for (Index i : q.indices) EXPECT_EQ(i, 1u);
}

TEST(Encode, ReproducibleAndBracketed) {
  const auto x = sample(LogNormal{}, 5000, 3);
  const auto book = quiver(validate_and_sort(x), 8).codebook;
  const auto a = encode(x, book, RandomSource(99));
  const auto b = encode(x, book, RandomSource(99));
  const auto c = encode(x, book, RandomSource(100));
  EXPECT_EQ(a.indices, b.indices);
  EXPECT_NE(a.indices, c.indices);
  const auto y = decode(a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto br = bracket(x[i], book);
    ASSERT_TRUE(y[i] == br.lower || y[i] == br.upper);
  }
  // Entry i consumes draw i of the source.
  const RandomSource rng(99);
  for (std::size_t i = 0; i < 100; ++i) {
    const auto br = bracket(x[i], book);
    const auto p = rounding_probabilities(x[i], br.lower, br.upper);
    const bool low =
        br.lower_index == br.upper_index || rng.uniform(i) < p.lower;
    const Index want = low ? br.lower_index : br.upper_index;
    ASSERT_EQ(a.indices[i], want);
  }
}

TEST(RandomSource, UniformInUnitInterval) {
  const RandomSource rng(5);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = rng.uniform(i);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 1e5, 0.5, 4 * std::sqrt(1.0 / 12 / 1e5));
  EXPECT_NE(rng.fork(0).seed(), rng.fork(1).seed());
  EXPECT_EQ(rng.fork(3).seed(), RandomSource(5).fork(3).seed());
}

TEST(ExpectedMse, Examples) {
  EXPECT_DOUBLE_EQ(expected_mse(std::vector<double>{0, 1, 2}, cb({0, 2})), 1.0);
  EXPECT_DOUBLE_EQ(
      expected_mse(std::vector<double>{0, 1, 2, 3, 10}, cb({0, 3, 10})), 4.0);
  EXPECT_EQ(expected_mse(std::vector<double>{0, 3, 3, 10}, cb({0, 3, 10})), 0.0);
  EXPECT_DOUBLE_EQ(expected_mse(std::vector<double>{0, 1, 2},
                                std::vector<double>{1, 5, 1}, cb({0, 2})),
                   5.0);
  EXPECT_THROW(expected_mse(std::vector<double>{0, 1},
                            std::vector<double>{1}, cb({0, 1})),
               Error);
}

TEST(Vnmse, ExamplesAndHomogeneity) {
  EXPECT_DOUBLE_EQ(vnmse(std::vector<double>{0, 1, 2}, cb({0, 2})), 0.2);
  EXPECT_EQ(vnmse(std::vector<double>{0, 1, 2}, cb({0, 1, 2})), 0.0);
  std::vector<double> x{0.3, 1.7, 2.2, 4.0};
  std::vector<double> q{0.3, 2.0, 4.0};
  const double base = vnmse(x, cb(q));
  for (double& v : x) v *= 3.5;
  for (double& v : q) v *= 3.5;
  EXPECT_NEAR(vnmse(x, cb(q)), base, 1e-14);
  try {
    vnmse(std::vector<double>{0, 0}, cb({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroNorm);
  }
}

TEST(EmpiricalMse, AgreesWithExpected) {
  EXPECT_EQ(empirical_mse(std::vector<double>{0, 1, 2}, cb({0, 1, 2}), 50,
                          RandomSource(1)),
            0.0);
  const double half =
      empirical_mse(std::vector<double>{0.5}, cb({0, 1}), 100000, RandomSource(2));
  EXPECT_NEAR(half, 0.25, 1e-12);  // |x - q| is always 0.5

  const auto x = sample(Normal{}, 2000, 8);
  const auto book = quiver(validate_and_sort(x), 6).codebook;
  const int trials = 400;
  const RandomSource rng(77);
  // Standard error from the per-entry Bernoulli variances.
  double var = 0.0;
  for (double v : x) {
    const auto br = bracket(v, book);
    const double p = rounding_probabilities(v, br.lower, br.upper).lower;
    const double e0 = (v - br.lower) * (v - br.lower);
    const double e1 = (br.upper - v) * (br.upper - v);
    const double mean = p * e0 + (1 - p) * e1;
    var += p * e0 * e0 + (1 - p) * e1 * e1 - mean * mean;
  }
  const double se = std::sqrt(var / trials);
  EXPECT_NEAR(empirical_mse(x, book, trials, rng), book.expected_mse, 4 * se);
  EXPECT_THROW(empirical_mse(x, book, 0, rng), Error);
}

}  // namespace
}  // namespace asq
