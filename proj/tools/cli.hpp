// Copyright 2026 The Authors.
//
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

#ifndef VOLRIG_TOOLS_CLI_HPP_
#define VOLRIG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace volrig::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitParameter = 3;
inline constexpr int kExitUncertified = 4;

// Runs the command line `args` (without the program name). JSON goes to
// `out`; diagnostics and --pretty tables go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace volrig::cli

#endif  // VOLRIG_TOOLS_CLI_HPP_
