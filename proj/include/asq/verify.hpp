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

// Self-check suite run by `asq verify` on a user-supplied vector.

#ifndef ASQ_VERIFY_HPP_
#define ASQ_VERIFY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asq/core.hpp"

namespace asq {

struct VerifyOptions {
  int max_levels = 8;              // s runs over 2..max_levels
  Index bins = 64;                 // grid size for the approximation bound
  std::size_t quadruples = 20000;  // sampled quadrangle checks per cost
  std::size_t baseline_limit = 4096;
  std::uint64_t seed = 1;
};

struct VerifyCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

// Cross-checks the solvers against each other and the brute-force oracle
// (d <= 16), the reported objective against a direct recomputation, the
// quadrangle inequality on sampled index quadruples, and the grid bound
// AQ(X, 2s - 2, m) <= opt(X, s) + d * range^2 / (4 m^2).
VerifyReport verify_vector(std::span<const double> raw,
                           const VerifyOptions& options = {});

}  // namespace asq

#endif  // ASQ_VERIFY_HPP_
