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

// Two-outcome field measurement {P_a = |a><a|, Q_a = 1 - P_a} on one mode,
// and its probabilistic realization by displacement D(-a) followed by
// letting the field leak out and checking for zero photons.

#pragma once

#include <cstdint>
#include <optional>

#include "ctecs/coherent.hpp"
#include "ctecs/fock.hpp"

namespace ctecs {

struct CoherentPovm {
    Complex alpha;

    /// |a><a| on a truncated mode.
    fock::OperatorMatrix p_matrix(std::size_t n_trunc) const;
    /// 1 - |a><a| on a truncated mode.
    fock::OperatorMatrix q_matrix(std::size_t n_trunc) const;
};

enum class PovmBranch { P, Q };

/// Either a forced branch or a sample drawn from a seeded counter RNG.
struct MeasurementChoice {
    std::optional<PovmBranch> forced;
    std::uint64_t seed = 0;

    static MeasurementChoice force(PovmBranch b) { return {b, 0}; }
    static MeasurementChoice sample(std::uint64_t seed) { return {std::nullopt, seed}; }
};

template <class State>
struct MeasurementResult {
    State state;
    PovmBranch branch = PovmBranch::P;
    double probability = 0.0;  // of the realized branch
    double probability_p = 0.0;
    double probability_q = 0.0;
};

/// Born-rule measurement of {P_a, Q_a} on `mode`. The realized branch is
/// renormalized. Throws OutcomeImpossibleError for a forced null branch.
MeasurementResult<CoherentSuperposition> measure_mode(const CoherentSuperposition& state, std::size_t mode,
                                                      const CoherentPovm& povm, const MeasurementChoice& choice);
/// Same measurement on a Fock-space state; `factor` indexes the layout.
MeasurementResult<fock::FockVector> measure_mode(const fock::FockVector& state, std::size_t factor,
                                                 const CoherentPovm& povm, const MeasurementChoice& choice);

enum class PhotonDetection { Zero, NonZero };

struct LeakResult {
    /// Collapsed field in the undisplaced frame (D(a) re-applied).
    CoherentSuperposition state;
    PhotonDetection detection = PhotonDetection::Zero;
    double probability_zero = 0.0;
    double probability = 0.0;  // of the realized detection
};

/// D(-a), then a zero / non-zero photon check on the mode, then D(a). The
/// zero-photon branch realizes P_a.
LeakResult displace_and_leak(const CoherentSuperposition& state, std::size_t mode, Complex alpha,
                             const MeasurementChoice& choice);

}  // namespace ctecs
