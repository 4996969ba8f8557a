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

#include <limits>
#include <random>
#include <vector>

#include "asq/smawk.hpp"
#include "oracles.hpp"

namespace asq {
namespace {

TEST(RowMinima, TwoByTwo) {
  const double m[2][2] = {{3, 5}, {4, 4}};
  const auto r = row_minima(2, 2, [&](Index i, Index j) { return m[i][j]; });
  // Row 1 ties; the smallest column wins.
  EXPECT_EQ(r.argmin, (std::vector<Index>{0, 0}));
  EXPECT_EQ(r.min_value, (std::vector<double>{3, 4}));

  const auto c =
      column_minima(2, 2, [&](Index i, Index j) { return m[i][j]; });
  EXPECT_EQ(c.argmin, (std::vector<Index>{0, 1}));
  EXPECT_EQ(c.min_value, (std::vector<double>{3, 4}));
}

TEST(RowMinima, DegenerateShapes) {
  const std::vector<double> row{4, 2, 7, 2, 9};
  const auto a =
      row_minima(1, row.size(), [&](Index, Index j) { return row[j]; });
  EXPECT_EQ(a.argmin, (std::vector<Index>{1}));
  const auto b =
      row_minima(row.size(), 1, [&](Index i, Index) { return row[i]; });
  EXPECT_EQ(b.argmin, (std::vector<Index>(5, 0)));
  const auto c =
      column_minima(row.size(), 1, [&](Index i, Index) { return row[i]; });
  EXPECT_EQ(c.argmin, (std::vector<Index>{1}));
  EXPECT_EQ(c.min_value, (std::vector<double>{2}));
}

TEST(ColumnMinima, DiagonalDominant) {
  const std::size_t n = 37;
  const auto c = column_minima(n, n, [](Index i, Index j) {
    const double d = static_cast<double>(i) - static_cast<double>(j);
    return d * d;
  });
  for (Index j = 0; j < n; ++j) {
    EXPECT_EQ(c.argmin[j], j);
    EXPECT_EQ(c.min_value[j], 0.0);
  }
}

TEST(RowMinima, MatchesLinearScanOnRandomMonge) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + gen() % 96;
    const std::size_t cols = 1 + gen() % 96;
    const auto m = asq_test::random_monge(rows, cols, gen);
    ASSERT_TRUE(asq_test::is_monge(m));
    std::size_t evals = 0;
    auto eval = [&](Index i, Index j) {
      ++evals;
      return m[i][j];
    };
    const auto got = row_minima(rows, cols, eval);
    const auto want = asq_test::linear_row_minima(
        rows, cols, [&](std::size_t i, std::size_t j) { return m[i][j]; });
    for (std::size_t i = 0; i < rows; ++i) {
      ASSERT_EQ(got.argmin[i], want.argmin[i]) << rows << "x" << cols;
      ASSERT_EQ(got.min_value[i], want.value[i]);
      if (i > 0) ASSERT_LE(got.argmin[i - 1], got.argmin[i]);
    }
    ASSERT_LE(evals, 8 * (rows + cols));
  }
}

TEST(RowMinima, StaircaseOfInfinities) {
  // Transposed dynamic-programming matrix: row j, column k, +inf for k > j.
  std::mt19937_64 gen(22);
  const double inf = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen() % 80;
    const auto m = asq_test::random_monge(n, n, gen);
    auto eval = [&](Index j, Index k) { return k <= j ? m[j][k] : inf; };
    const auto got = row_minima(n, n, eval);
    const auto want = asq_test::linear_row_minima(
        n, n, [&](std::size_t j, std::size_t k) { return eval(j, k); });
    for (std::size_t j = 0; j < n; ++j) {
      ASSERT_EQ(got.argmin[j], want.argmin[j]);
      ASSERT_LE(got.argmin[j], j);
    }
  }
}

TEST(RowMinima, WorkspaceIsReusable) {
  std::mt19937_64 gen(23);
  SmawkWorkspace ws;
  for (std::size_t n : {50u, 7u, 120u, 3u}) {
    const auto m = asq_test::random_monge(n, n + 5, gen);
    std::vector<Index> arg(n);
    std::vector<double> val(n);
    row_minima_into(
        n, n + 5, [&](Index i, Index j) { return m[i][j]; }, arg, val, ws);
    const auto want = asq_test::linear_row_minima(
        n, n + 5, [&](std::size_t i, std::size_t j) { return m[i][j]; });
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(arg[i], want.argmin[i]);
  }
}

}  // namespace
}  // namespace asq
