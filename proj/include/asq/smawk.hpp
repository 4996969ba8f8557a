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

// SMAWK row minima for implicitly defined totally monotone matrices.
//
// The matrix is given by a callable eval(row, col) -> double. Entries may be
// +infinity provided total monotonicity still holds, e.g. a staircase of
// infinities in the upper right corner. Ties resolve to the smallest column.
//
// Each recursion level handles the rows row0 + i * stride, so row sets are
// never materialized. Surviving columns of every level live in one workspace
// buffer of at most 2 * n_rows entries; recursion depth is ceil(log2 rows).

#ifndef ASQ_SMAWK_HPP_
#define ASQ_SMAWK_HPP_

#include <cassert>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "asq/core.hpp"

namespace asq {

struct MinimaResult {
  std::vector<Index> argmin;
  std::vector<double> min_value;
};

class SmawkWorkspace {
 public:
  void reserve(std::size_t n_rows, std::size_t n_cols) {
    const std::size_t need = 2 * n_rows + 2;
    if (cols_.size() < need) {
      cols_.resize(need);
      vals_.resize(need);
    }
    if (all_cols_.size() < n_cols) {
      const std::size_t old = all_cols_.size();
      all_cols_.resize(n_cols);
      std::iota(all_cols_.begin() + static_cast<std::ptrdiff_t>(old),
                all_cols_.end(), static_cast<Index>(old));
    }
  }

 private:
  template <class Eval>
  friend void row_minima_into(std::size_t, std::size_t, Eval&&,
                              std::span<Index>, std::span<double>,
                              SmawkWorkspace&);
  std::vector<Index> cols_;
  std::vector<double> vals_;
  std::vector<Index> all_cols_;
};

template <class Eval>
struct detail_smawk {
  Eval& eval;
  Index* argmin;
  double* min_value;
  Index* col_buf;
  double* val_buf;

  void scan(Index row, const Index* cols, std::size_t n_cols) const {
    Index best = cols[0];
    double best_v = eval(row, best);
    for (std::size_t c = 1; c < n_cols; ++c) {
      const double v = eval(row, cols[c]);
      if (v < best_v) {
        best_v = v;
        best = cols[c];
      }
    }
    argmin[row] = best;
    min_value[row] = best_v;
  }

  // Rows are row0 + i * stride for i < n_rows. `cols` is ascending.
  // Scratch for this level begins at offset `off` of the workspace buffers.
  void solve(Index row0, Index stride, std::size_t n_rows, const Index* cols,
             std::size_t n_cols, std::size_t off) const {
    if (n_rows == 0) return;
    if (n_rows == 1) {
      scan(row0, cols, n_cols);
      return;
    }

    // Reduce: keep at most n_rows columns. stack[p] is the surviving column
    // for row position p, with its value at that row cached in top_val[p].
    Index* stack = col_buf + off;
    double* top_val = val_buf + off;
    std::size_t top = 0;
    for (std::size_t c = 0; c < n_cols; ++c) {
      const Index col = cols[c];
      while (top > 0) {
        const Index row = row0 + static_cast<Index>(top - 1) * stride;
        const double v = eval(row, col);
        if (!(top_val[top - 1] > v)) break;
        --top;
      }
      if (top < n_rows) {
        stack[top] = col;
        top_val[top] = eval(row0 + static_cast<Index>(top) * stride, col);
        ++top;
      }
    }

    // Recurse on the odd rows.
    solve(row0 + stride, stride * 2, n_rows / 2, stack, top, off + top);

    // Fill the even rows between the argmins of their odd neighbours.
    std::size_t start = 0;
    for (std::size_t i = 0; i < n_rows; i += 2) {
      const Index row = row0 + static_cast<Index>(i) * stride;
      std::size_t stop = top - 1;
      if (i + 1 < n_rows) {
        const Index target = argmin[row + stride];
        stop = start;
        while (stack[stop] != target) ++stop;
      }
      Index best = stack[start];
      double best_v = eval(row, best);
      for (std::size_t c = start + 1; c <= stop; ++c) {
        const double v = eval(row, stack[c]);
        if (v < best_v) {
          best_v = v;
          best = stack[c];
        }
      }
      argmin[row] = best;
      min_value[row] = best_v;
      start = stop;
    }
  }
};

// Writes the leftmost minimum of every row into argmin / min_value, which must
// have n_rows entries. Uses O(n_rows + n_cols) evaluations.
template <class Eval>
void row_minima_into(std::size_t n_rows, std::size_t n_cols, Eval&& eval,
                     std::span<Index> argmin, std::span<double> min_value,
                     SmawkWorkspace& ws) {
  assert(argmin.size() >= n_rows && min_value.size() >= n_rows);
  if (n_rows == 0 || n_cols == 0) return;
  ws.reserve(n_rows, n_cols);
  detail_smawk<std::remove_reference_t<Eval>> impl{
      eval, argmin.data(), min_value.data(), ws.cols_.data(), ws.vals_.data()};
  impl.solve(0, 1, n_rows, ws.all_cols_.data(), n_cols, 0);
}

template <class Eval>
MinimaResult row_minima(std::size_t n_rows, std::size_t n_cols, Eval&& eval) {
  MinimaResult out;
  out.argmin.resize(n_rows);
  out.min_value.resize(n_rows);
  SmawkWorkspace ws;
  row_minima_into(n_rows, n_cols, eval, out.argmin, out.min_value, ws);
  return out;
}

// Minimum of every column, i.e. row_minima of the transpose. argmin[c] is the
// smallest row index attaining the minimum of column c.
template <class Eval>
MinimaResult column_minima(std::size_t n_rows, std::size_t n_cols,
                           Eval&& eval) {
  return row_minima(n_cols, n_rows,
                    [&](Index c, Index r) { return eval(r, c); });
}

}  // namespace asq

#endif  // ASQ_SMAWK_HPP_
