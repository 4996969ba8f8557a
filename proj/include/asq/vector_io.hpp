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

// File formats for vectors, index streams and codebooks.
//
//   .f64  raw little-endian IEEE-754 binary64
//   .f32  raw little-endian binary32, widened on read
//   .txt  one decimal value per line (blank lines and '#' comments skipped)
//   .u32  raw little-endian uint32 level indices
//
// Codebooks are JSON objects with the fields
//   {"levels": [...], "expected_mse": x, "algorithm": "...",
//    "d": n, "s": n, "m": n, "seed": n, "dp_objective": x,
//    "solve_time": seconds}

#ifndef ASQ_VECTOR_IO_HPP_
#define ASQ_VECTOR_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "asq/core.hpp"

namespace asq {

enum class VectorFormat { kF64, kF32, kText };

// Chosen from the extension; throws Error(kBadParameters) if unknown.
VectorFormat vector_format(const std::filesystem::path& path);

std::vector<double> read_vector(const std::filesystem::path& path);
void write_vector(const std::filesystem::path& path,
                  std::span<const double> values);

struct WeightedColumns {
  std::vector<double> values;
  std::vector<double> weights;
};

// Two whitespace-separated columns "value weight" per line.
WeightedColumns read_weighted_text(const std::filesystem::path& path);

// .u32 or .txt
std::vector<Index> read_indices(const std::filesystem::path& path);
void write_indices(const std::filesystem::path& path,
                   std::span<const Index> indices);

struct CodebookFile {
  Codebook codebook;
  std::string algorithm;
  std::size_t d = 0;
  int s = 0;
  Index m = 0;
  std::uint64_t seed = 0;
  double dp_objective = 0.0;
  double solve_time = 0.0;
};

std::string codebook_to_json(const CodebookFile& file);
CodebookFile codebook_from_json(const std::string& text);
void write_codebook(const std::filesystem::path& path, const CodebookFile& file);
CodebookFile read_codebook(const std::filesystem::path& path);

}  // namespace asq

#endif  // ASQ_VECTOR_IO_HPP_
