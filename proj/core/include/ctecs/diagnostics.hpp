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

// Entanglement spectra of coherent superpositions across a mode
// bipartition, the single-mode reduced state of the cluster basis, and the
// generation-time budget against cavity and atomic lifetimes.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctecs/coherent.hpp"
#include "ctecs/fock.hpp"

namespace ctecs {

/// Reduced-state eigenvalues over `keep` (descending, clamped at zero).
/// Throws ShapeError unless keep is a proper, non-empty subset of the modes.
std::vector<double> entanglement_spectrum(const CoherentSuperposition& state, std::span<const std::size_t> keep);
/// Same quantity from a dense state, by explicit partial trace.
std::vector<double> entanglement_spectrum(const fock::FockVector& state, std::span<const std::size_t> keep);

/// -sum l log2 l, with 0 log 0 = 0.
double von_neumann_entropy(std::span<const double> spectrum);

/// Mixture weights of |a><a| and |-a><-a| in the one-mode reduced state of
/// CLUSTER+: 1/2 (1 +- e^{-4|a|^2}). Every other basis element has the same
/// pair, swapped when its flip route touches the kept mode.
std::array<double, 2> reduced_state_closed_form(Complex alpha);
/// Eigenvalues of that mixture (descending). These differ from the weights
/// because |a> and |-a> overlap by e^{-2|a|^2}.
std::array<double, 2> reduced_state_eigenvalues_closed_form(Complex alpha);

struct FeasibilityInput {
    double g = 0.0;          // rad/s
    double g_prime = 0.0;    // rad/s
    double delta_big = 0.0;  // rad/s
    /// Gate-cavity detuning; nullopt selects the self-consistent delta = g'.
    std::optional<double> delta_small;
    int k = 1;
    /// Cavity passes per atom.
    int p = 2;
    double t_r = 0.0;   // s
    double t_at = 0.0;  // s

    /// Throws ConfigError on non-positive values.
    void validate() const;
    /// g = g' = 2 pi x 25 kHz, Delta = 8 g, T_r = 130 ms, T_at = 30 ms.
    static FeasibilityInput quoted_parameters();
};

struct FeasibilityStage {
    std::string name;
    std::string formula;
    double duration = 0.0;  // s
};

/// The quoted figures the report is compared against.
struct FeasibilityTargets {
    double total_time = 1.045e-3;
    double ratio_r = 124.0;
    double ratio_at = 29.0;
};

struct FeasibilityReport {
    FeasibilityInput input;
    double lam = 0.0;
    double chi = 0.0;
    double delta_small = 0.0;
    double omega_drive = 0.0;
    std::vector<FeasibilityStage> stages;
    double total_time = 0.0;
    double ratio_r = 0.0;
    double ratio_at = 0.0;

    /// Same budget with Delta read as 2 pi x (Delta / g) x g.
    double alt_delta_big = 0.0;
    double alt_total_time = 0.0;
    double alt_ratio_r = 0.0;
    double alt_ratio_at = 0.0;

    FeasibilityTargets targets;
    /// (computed - target) / target for the primary and alternative readings.
    double residual = 0.0;
    double alt_residual = 0.0;
    bool reproduces_target = false;
    std::vector<std::string> notes;
};

/// Relative tolerance under which a computed total counts as matching the
/// quoted figure (it is quoted to four significant digits).
inline constexpr double kFeasibilityMatchTolerance = 5e-3;

FeasibilityReport feasibility(const FeasibilityInput& input);

/// "alpha,label,bipartition,lambda_1,...,entropy" rows.
struct SpectrumRow {
    double alpha = 0.0;
    std::string label;
    std::string bipartition;
    std::vector<double> eigenvalues;
    double entropy = 0.0;
};
std::string spectrum_csv_header(std::size_t eigenvalue_columns);
std::string spectrum_csv_row(const SpectrumRow& row, std::size_t eigenvalue_columns);

std::string feasibility_text(const FeasibilityReport& r);

}  // namespace ctecs
