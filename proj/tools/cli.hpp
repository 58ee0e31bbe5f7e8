// Copyright 2026 The Erdos Clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERDOS_TOOLS_CLI_HPP_
#define ERDOS_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace erdos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one command. `args` excludes the program name. Documents go to the
/// --out / --report path when given (written atomically) and to `out`
/// otherwise; diagnostics go to `err`.
int Execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erdos::cli

#endif  // ERDOS_TOOLS_CLI_HPP_
