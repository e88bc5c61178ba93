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

#include "ctecs/measurement.hpp"

#include <cmath>

#include "ctecs/errors.hpp"
#include "ctecs/rng.hpp"

namespace ctecs {

namespace {

/// Replaces the amplitude of `mode` by `target` in every branch, weighting
/// each branch by <target|mu>: the action of |target><target| on the mode.
CoherentSuperposition project_mode_onto(const CoherentSuperposition& s, std::size_t mode, Complex target) {
    if (mode >= s.mode_count()) throw ShapeError("mode index out of range");
    std::vector<Branch> out = s.branches();
    for (Branch& b : out) {
        b.coeff *= coherent_overlap(target, b.modes[mode]);
        b.modes[mode] = target;
    }
    return canonicalize(CoherentSuperposition(s.mode_count(), s.atoms_present(), std::move(out)));
}

bool choose_first(double p_first, const MeasurementChoice& choice, PovmBranch first_label) {
    if (choice.forced) return *choice.forced == first_label;
    return CounterRng(choice.seed).uniform(0) < p_first;
}

void require_possible(double p, const char* what) {
    if (!(p >= kDegeneracyThreshold)) {
        throw OutcomeImpossibleError(std::string(what) + " has probability " + std::to_string(p));
    }
}

}  // namespace

fock::OperatorMatrix CoherentPovm::p_matrix(std::size_t n_trunc) const {
    const fock::FockVector v = fock::coherent_fock(alpha, n_trunc);
    return fock::OperatorMatrix(v.layout(), v.amplitudes() * v.amplitudes().adjoint());
}

fock::OperatorMatrix CoherentPovm::q_matrix(std::size_t n_trunc) const {
    const fock::OperatorMatrix p = p_matrix(n_trunc);
    return fock::OperatorMatrix::identity(p.layout()) - p;
}

MeasurementResult<CoherentSuperposition> measure_mode(const CoherentSuperposition& state, std::size_t mode,
                                                      const CoherentPovm& povm, const MeasurementChoice& choice) {
    const double total = norm_squared(state);
    if (!(total >= kDegeneracyThreshold)) throw NearNullStateError("measure_mode: input state is near-null");
    const CoherentSuperposition p_part = project_mode_onto(state, mode, povm.alpha);
    const CoherentSuperposition q_part = superpose(state, scaled(p_part, -1.0));

    MeasurementResult<CoherentSuperposition> r{state, PovmBranch::P, 0.0, 0.0, 0.0};
    r.probability_p = norm_squared(p_part) / total;
    r.probability_q = norm_squared(q_part) / total;
    const bool take_p = choose_first(r.probability_p, choice, PovmBranch::P);
    r.branch = take_p ? PovmBranch::P : PovmBranch::Q;
    r.probability = take_p ? r.probability_p : r.probability_q;
    require_possible(r.probability, take_p ? "P branch" : "Q branch");
    r.state = normalize(take_p ? p_part : q_part);
    return r;
}

MeasurementResult<fock::FockVector> measure_mode(const fock::FockVector& state, std::size_t factor,
                                                 const CoherentPovm& povm, const MeasurementChoice& choice) {
    if (factor >= state.layout().size() || state.layout()[factor].kind != fock::FactorKind::Mode) {
        throw ShapeError("measure_mode: factor " + std::to_string(factor) + " is not a mode");
    }
    const double total = state.amplitudes().squaredNorm();
    if (!(total >= kDegeneracyThreshold)) throw NearNullStateError("measure_mode: input state is near-null");
    const std::size_t idx[] = {factor};
    const fock::FockVector p_part = fock::apply_on(state, povm.p_matrix(state.layout()[factor].dim), idx);
    const fock::FockVector q_part(state.layout(), state.amplitudes() - p_part.amplitudes());

    MeasurementResult<fock::FockVector> r{state, PovmBranch::P, 0.0, 0.0, 0.0};
    r.probability_p = p_part.amplitudes().squaredNorm() / total;
    r.probability_q = q_part.amplitudes().squaredNorm() / total;
    const bool take_p = choose_first(r.probability_p, choice, PovmBranch::P);
    r.branch = take_p ? PovmBranch::P : PovmBranch::Q;
    r.probability = take_p ? r.probability_p : r.probability_q;
    require_possible(r.probability, take_p ? "P branch" : "Q branch");
    r.state = (take_p ? p_part : q_part).normalized();
    return r;
}

LeakResult displace_and_leak(const CoherentSuperposition& state, std::size_t mode, Complex alpha,
                             const MeasurementChoice& choice) {
    const double total = norm_squared(state);
    if (!(total >= kDegeneracyThreshold)) throw NearNullStateError("displace_and_leak: input state is near-null");
    const CoherentSuperposition shifted = displace(state, mode, -alpha);
    const CoherentSuperposition vacuum_part = project_mode_onto(shifted, mode, 0.0);
    const CoherentSuperposition photon_part = superpose(shifted, scaled(vacuum_part, -1.0));

    LeakResult r{state, PhotonDetection::Zero, 0.0, 0.0};
    r.probability_zero = norm_squared(vacuum_part) / total;
    const double p_nonzero = norm_squared(photon_part) / total;
    const bool zero = choice.forced ? *choice.forced == PovmBranch::P
                                    : CounterRng(choice.seed).uniform(0) < r.probability_zero;
    r.detection = zero ? PhotonDetection::Zero : PhotonDetection::NonZero;
    r.probability = zero ? r.probability_zero : p_nonzero;
    require_possible(r.probability, zero ? "zero-photon detection" : "photon detection");
    r.state = normalize(displace(zero ? vacuum_part : photon_part, mode, alpha));
    return r;
}

}  // namespace ctecs
