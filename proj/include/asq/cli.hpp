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

#ifndef ASQ_CLI_HPP_
#define ASQ_CLI_HPP_

#include <iostream>

namespace asq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRuntime = 3;

// Entry point of the `asq` tool. Subcommands: gen, solve, quantize,
// dequantize, bench, verify. Returns 0 on success, 2 on usage or validation
// errors and 3 on runtime failures (I/O, failed verification).
int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace asq

#endif  // ASQ_CLI_HPP_
