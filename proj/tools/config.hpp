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

// Run configuration for the command-line tool. Configs are JSON; every
// dimensional quantity is a string "<number> <unit>" and bare numbers are
// rejected, so no unit is ever guessed.
//
//   frequency  Hz kHz MHz GHz        linear, multiplied by 2 pi
//              rad/s krad/s Mrad/s   angular
//              coupling              dimensionless (times in 1/coupling)
//   time       s ms us ns
//   memory     B KiB MiB GiB

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctecs/diagnostics.hpp"
#include "ctecs/protocol.hpp"
#include "ctecs/serialize.hpp"

namespace ctecs::cli {

enum class FrequencyKind { Angular, Coupling };

struct Frequency {
    double value = 0.0;  // rad/s, or dimensionless
    FrequencyKind kind = FrequencyKind::Angular;
};

/// `where` names the field in error messages. All throw ConfigError.
Frequency parse_frequency(std::string_view text, const std::string& where);
double parse_time(std::string_view text, const std::string& where);
std::size_t parse_memory(std::string_view text, const std::string& where);
Complex parse_alpha(const Json& j, const std::string& where);
std::vector<double> parse_alpha_grid(const Json& j, const std::string& where);

struct SweepSpec {
    std::string quantity;  // fidelity | entropy | overlap | outcome-prob
    std::vector<double> alphas;
    std::string label = "CLUSTER+";
    std::vector<std::size_t> keep{0};
};

struct BasisSpec {
    std::string label = "CLUSTER+";
    Complex alpha{1.0, 0.0};
};

struct MeasureSpec {
    std::string state_path;
    std::size_t mode = 0;
    Complex alpha{1.0, 0.0};
    std::string method = "povm";  // povm | leak
    std::string branch = "sample";  // P | Q | sample
};

struct RunConfig {
    /// Effective document (file contents with command-line overrides applied).
    Json document;
    ProtocolConfig protocol;
    /// "s" for physical frequencies, "1/coupling" for dimensionless ones.
    std::string time_unit = "1/coupling";
    FeasibilityInput feasibility = FeasibilityInput::quoted_parameters();
    bool feasibility_from_config = false;
    SweepSpec sweep;
    BasisSpec basis;
    MeasureSpec measure;
    std::uint64_t seed = 0;
    std::uint64_t hash = 0;
};

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> backend;
};

/// JSON text to a document; syntax errors report line and column.
Json read_document(std::string_view text);
Json load_document(const std::string& path);
/// Validates a document (after applying the overrides) into a run config.
RunConfig from_json(Json document, const Overrides& overrides = {});

/// read_document + from_json.
RunConfig parse_config(std::string_view text, const Overrides& overrides = {});
RunConfig load_config(const std::string& path, const Overrides& overrides = {});
/// Defaults only (no file), overrides applied.
RunConfig default_config(const Overrides& overrides = {});

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace ctecs::cli
