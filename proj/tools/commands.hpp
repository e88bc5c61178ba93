// Copyright 2026 The ctecs Authors
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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace ctecs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPhysics = 3;
inline constexpr int kExitInvariant = 4;

/// Bumped whenever a CSV column changes meaning.
inline constexpr int kCsvSchema = 1;

struct Invocation {
    std::string command;
    std::optional<std::string> config_path;
    Overrides overrides;
    std::optional<std::string> out_dir;
    std::vector<std::string> emit{"text"};

    // Per-command overrides of the config sections.
    std::optional<std::string> label;
    std::optional<double> alpha;
    std::optional<std::string> quantity;
    std::optional<std::string> state;
    std::optional<std::size_t> mode;
    std::optional<std::string> method;
    std::optional<std::string> branch;
};

/// One command's result in all three formats.
struct Outputs {
    Json json;
    std::string text;
    std::string csv;
    /// Non-zero when the command ran but found failures (selftest).
    int status = kExitOk;
};

Outputs cmd_generate(const RunConfig& rc);
Outputs cmd_basis(const RunConfig& rc);
Outputs cmd_sweep(const RunConfig& rc);
Outputs cmd_measure(const RunConfig& rc);
Outputs cmd_feasibility(const RunConfig& rc);
Outputs cmd_selftest(const RunConfig& rc);

/// Loads the config, dispatches, writes the requested formats and maps
/// errors onto exit codes. Never throws.
int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

}  // namespace ctecs::cli
