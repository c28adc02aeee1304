// Copyright 2026 The acausal Authors
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

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace acausal::cli {

/// Exit codes of `run`.
enum ExitCode : int {
    kOk = 0,
    /// A checked property came out false.
    kPropertyFalse = 1,
    /// Bad arguments or unreadable/malformed input.
    kUsageError = 2,
};

/// Effective settings of one invocation; echoed as `# key: value` lines at
/// the top of every report.
struct CommandConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::string output;  // empty: stdout only
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    double tolerance = 1e-9;
    std::size_t jobs = 1;
    bool allow_self_signaling = false;
    bool force_nonorthonormal = false;
    bool canonical = false;
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace acausal::cli
