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

// Hamiltonian builders for the dispersive passes and the two-atom
// controlled-phase stage, with numerical checks of the effective models.
//
// Units: hbar = 1, all frequencies angular. Any consistent unit system works
// (rad/s with seconds, or dimensionless couplings with inverse-coupling
// times), since only products of frequencies and times enter.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctecs/fock.hpp"

namespace ctecs {

/// Threshold for every "much larger than" regime flag.
inline constexpr double kRatioMin = 5.0;

struct DispersiveParams {
    double g = 1.0;          // atom-cavity coupling
    double delta_big = 8.0;  // atom-cavity detuning

    double lam() const { return g * g / delta_big; }
    /// Interaction time giving a quarter-turn phase, pi/(2 lambda).
    double pass_time() const;
    bool regime_ok() const { return g == 0.0 || delta_big / g >= kRatioMin; }
    std::vector<std::string> warnings() const;
};

/// Normalization of the collective two-atom x operator in the driven
/// stage. Pauli uses Sx = sx1 + sx2 (spectrum {2,0,0,-2}); HalfSpin uses
/// Jx = Sx/2 (spectrum {1,0,0,-1}). Only HalfSpin turns the timing
/// t_f = pi/chi, Omega = (2k+1/2) chi into the controlled-phase gate; under
/// Pauli the same timing yields -sx (x) sx.
enum class CollectiveSpin { HalfSpin, Pauli };

struct CpgParams {
    double g_prime = 1.0;      // atom-cavity coupling g'
    double delta_small = 1.0;  // cavity-atom detuning delta
    double omega_drive = 1.25; // classical Rabi frequency Omega
    int k = 1;
    CollectiveSpin spin = CollectiveSpin::HalfSpin;

    /// chi = g'^2 / (2 delta).
    double chi() const { return g_prime * g_prime / (2.0 * delta_small); }
    /// t_f = pi / chi.
    double gate_time() const;

    /// delta t_f = 2 pi together with t_f = pi/chi forces delta = g'
    /// (so chi = g'/2); Omega = (2k + 1/2) chi.
    static CpgParams self_consistent(double g_prime, int k = 1,
                                     CollectiveSpin spin = CollectiveSpin::HalfSpin);
    /// delta chosen freely; chi follows, Omega = (2k + 1/2) chi.
    static CpgParams with_detuning(double g_prime, double delta_small, int k = 1,
                                   CollectiveSpin spin = CollectiveSpin::HalfSpin);

    /// |Omega - (2k + 1/2) chi| <= tol * chi and k >= 1.
    bool timing_consistent(double tol = 1e-12) const;
    bool strong_driving() const;
    std::vector<std::string> warnings() const;
};

/// lambda (a^dag a sz + s+ s-) on (atom, mode).
fock::OperatorMatrix dispersive_h(const DispersiveParams& p, std::size_t n_trunc);

/// Collective x operator of the two atoms under the given normalization.
fock::OperatorMatrix collective_x(CollectiveSpin spin);

/// Omega X + (chi/2) X^2 on the two atoms. Throws ShapeError when the
/// timing constraint is not met.
fock::OperatorMatrix effective_cpg_h(const CpgParams& p);
/// exp(-i H_eff t_f).
fock::OperatorMatrix cpg_propagator(const CpgParams& p);

/// Computational-basis matrix of u with the phase of its first nonzero
/// entry (column-major scan) divided out.
Eigen::MatrixXcd remove_global_phase(const Eigen::MatrixXcd& u);

enum class Frame { Lab, Interaction };

/// Time-dependent Hamiltonian of two driven atoms in the gate cavity, over
/// (atom 1, atom 2, mode). The lab frame is
///   w0 n + (w/2) Sz + g'(a S+ + a^dag S-) + Omega (S+ e^{-i w t} + h.c.)
/// with w = w0 + delta and Pauli collective operators. The interaction frame
/// is (g'/2)(a e^{i delta t} + a^dag e^{-i delta t}) X with X = collective_x(spin).
class DrivenCavityHamiltonian {
   public:
    DrivenCavityHamiltonian(CpgParams params, std::size_t n_trunc, Frame frame, double omega_atom = 50.0);

    fock::OperatorMatrix at(double t) const;
    const fock::SpaceLayout& layout() const noexcept { return layout_; }
    Frame frame() const noexcept { return frame_; }
    const CpgParams& params() const noexcept { return params_; }

   private:
    CpgParams params_;
    Frame frame_;
    double omega_atom_;
    fock::SpaceLayout layout_;
    Eigen::MatrixXcd a_, ad_, n_, sx_, sz_, sp_, sm_, x_;
};

fock::OperatorMatrix driven_tc_h(const CpgParams& p, std::size_t n_trunc, Frame frame, double t,
                                 double omega_atom = 50.0);

struct DispersiveValidation {
    double g = 0.0;
    double delta_big = 0.0;
    double lam = 0.0;
    double time = 0.0;
    double fidelity = 1.0;
};

/// Evolves |atom>|alpha> under the full detuned Jaynes-Cummings model
/// D s+s- + g(a s+ + a^dag s-) and under lambda(n sz + s+s-) + D s+s-
/// for t = pi/(2 lambda) and returns the fidelity of the two final states.
/// `superposed_atom` starts the atom in (|g>+|e>)/sqrt(2) instead of |g>.
/// With g = 0 both evolutions are free and the comparison is made at t = 1.
DispersiveValidation validate_dispersive_approx(double g, double delta_big, Complex alpha, std::size_t n_trunc,
                                                bool superposed_atom = false);

}  // namespace ctecs
