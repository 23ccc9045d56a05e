// Copyright 2026 The icsq Authors
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
#pragma once

#include <ostream>
#include <span>
#include <string>

namespace icsq::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsage = 3;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, usage and I/O problems to `err`. ANSI colour in text reports is
/// enabled by `color`.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err, bool color = false);

/// Reads ICSQ_COLOR from the environment: "1" enables colour.
bool color_from_env();

}  // namespace icsq::cli
