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

// JSON documents for states, protocol records and feasibility reports.
// Doubles are written in shortest round-trip form, so a dumped coherent
// state reloads bit-for-bit.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ctecs/coherent.hpp"
#include "ctecs/diagnostics.hpp"
#include "ctecs/fock.hpp"
#include "ctecs/protocol.hpp"

namespace ctecs {

using Json = nlohmann::ordered_json;

inline constexpr int kStateFormatVersion = 1;

Json state_to_json(const CoherentSuperposition& s);
/// Throws ConfigError naming the offending field.
CoherentSuperposition state_from_json(const Json& j);

/// Layout and norm only; dense amplitudes are not dumped.
Json fock_summary_json(const fock::FockVector& v);

Json config_to_json(const ProtocolConfig& c);
Json record_to_json(const ProtocolRecord& r);
Json feasibility_to_json(const FeasibilityReport& r);

}  // namespace ctecs
