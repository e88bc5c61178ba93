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

// The two-atom generation pipeline: Ramsey pulses, p dispersive passes per
// atom, the two-atom controlled-phase stage and the atomic measurement,
// with every intermediate state checked against its closed form.
//
// Mode ordering is (atom 1's cavities 1..p, atom 2's cavities 1..p).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ctecs/coherent.hpp"
#include "ctecs/fock.hpp"
#include "ctecs/hamiltonians.hpp"
#include "ctecs/states.hpp"

namespace ctecs {

enum class Backend { Analytic, Fock };

std::string to_string(Backend b);

struct ProtocolConfig {
    Complex alpha{1.0, 0.0};
    int p = 2;  // cavities per atom
    Backend backend = Backend::Analytic;
    DispersiveParams dispersive{};
    CpgParams cpg = CpgParams::self_consistent(1.0);
    /// Forced atomic outcome; nullopt samples it from `seed`.
    std::optional<AtomPair> forced_outcome = AtomPair{Atom::g, Atom::g};
    std::uint64_t seed = 0;
    /// +1 / -1 per mode for the initial fields s_m * alpha; empty means all +1.
    std::vector<int> initial_signs;
    std::size_t memory_budget_bytes = std::size_t{1} << 30;

    std::size_t mode_count() const { return 2 * static_cast<std::size_t>(p); }
    /// Throws ShapeError on p < 1 or malformed signs.
    void validate() const;
};

using AnyState = std::variant<CoherentSuperposition, fock::FockVector>;

struct Checkpoint {
    std::string name;
    std::string target;  // description of the closed form it is checked against
    AnyState state;
    double fidelity = 0.0;
};

struct StageTiming {
    std::string stage;
    std::string symbolic;
    double duration = 0.0;
};

struct Classification {
    CtecsLabel label;
    double fidelity = 0.0;
};

struct ProtocolRecord {
    ProtocolConfig config;
    std::vector<Checkpoint> checkpoints;
    AtomPair outcome{Atom::g, Atom::g};
    double outcome_probability = 0.0;
    std::array<double, 4> outcome_probabilities{};
    AnyState final_state;
    /// Fidelity of the final field state with its closed form.
    double final_fidelity = 0.0;
    /// Best-matching basis element at beta = i alpha (four-mode runs only).
    std::optional<Classification> classification;
    std::vector<StageTiming> timings;
    double total_time = 0.0;
    std::vector<std::string> warnings;

    const Checkpoint& checkpoint(std::string_view name) const;
};

/// pi/2 pulse: |g> -> (|g>+|e>)/sqrt2, |e> -> (-|g>+|e>)/sqrt2.
Eigen::Matrix2cd ramsey_matrix();
Eigen::Vector2cd ramsey(const Eigen::Vector2cd& atom_state);

/// Closed-form targets for each checkpoint.
CoherentSuperposition target_after_ramsey(const ProtocolConfig& c);
/// Atom `atom` (0 or 1) has crossed its p cavities, the other only its Ramsey zone.
CoherentSuperposition target_after_atom(const ProtocolConfig& c, std::size_t atom);
/// Both atoms have crossed their cavities: product of the per-atom states.
CoherentSuperposition target_before_gate(const ProtocolConfig& c);
/// After the gate; for p = 2 and default signs this is assembled from the
/// four basis elements CLUSTER+, C+, C-, CLUSTER- at beta.
CoherentSuperposition target_after_gate(const ProtocolConfig& c);
/// Post-measurement field state for an outcome.
CoherentSuperposition target_final(const ProtocolConfig& c, const AtomPair& outcome);

/// For p = 2 and default signs: gg -> CLUSTER+, ge -> C+, eg -> C-, ee -> CLUSTER-.
CtecsLabel expected_label(const AtomPair& outcome);

ProtocolRecord run(const ProtocolConfig& config);
/// run() with the given initial sign pattern.
ProtocolRecord run_variant(ProtocolConfig config, std::vector<int> initial_signs);

/// Basis element with maximal |overlap|^2 at amplitude alpha; ties resolve
/// to the earlier label.
Classification classify(const CoherentSuperposition& state, Complex alpha);

}  // namespace ctecs
