// Copyright 2026 The qmalocal Authors
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
/**
 * @file
 * Subcommands behind the qmalocal executable. Each returns a process exit code.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmalocal/reduction.hpp"

namespace qmalocal::cli {

enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kParseError = 2,
    kDimensionError = 3,
    kPromiseViolated = 4,
};

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    ReductionMode mode = ReductionMode::three_local;
    int penalty_exponent = 12;
    double epsilon = 1e-3;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out_path; ///< empty: standard output
    std::optional<std::string> proof_path; ///< verify --complete
    bool sound = false;                    ///< verify --sound
    bool summary = false;                  ///< single-line report

    /// Throws std::invalid_argument on out-of-range settings.
    void validate() const;
};

int cmd_compile(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_spectrum(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_sat2ham(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_angle(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Validates, dispatches on cfg.command and maps exceptions to exit codes.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace qmalocal::cli
