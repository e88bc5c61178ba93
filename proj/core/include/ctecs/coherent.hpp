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

// Exact backend: finite superpositions of multimode coherent states, each
// branch optionally tagged with a two-atom label |a1 a2>, a1, a2 in {g, e}.
//
// Inner products use the closed-form coherent overlap
//   <mu|nu> = exp(-|mu|^2/2 - |nu|^2/2 + conj(mu) nu),
// so every quantity here is exact up to floating-point rounding. All
// operations return new values; nothing is mutated in place.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ctecs/fock.hpp"

namespace ctecs {

enum class Atom : std::uint8_t { g = 0, e = 1 };
using AtomPair = std::array<Atom, 2>;

std::string to_string(const AtomPair& atoms);
/// Parses "gg", "ge", "eg", "ee" (case-insensitive).
AtomPair parse_atom_pair(std::string_view text);
/// gg, ge, eg, ee.
inline constexpr std::array<AtomPair, 4> kAtomOutcomes{
    AtomPair{Atom::g, Atom::g}, AtomPair{Atom::g, Atom::e}, AtomPair{Atom::e, Atom::g},
    AtomPair{Atom::e, Atom::e}};
/// Index of an atom pair in the computational basis (gg=0, ge=1, eg=2, ee=3).
inline constexpr std::size_t atom_index(const AtomPair& a) {
    return 2 * static_cast<std::size_t>(a[0]) + static_cast<std::size_t>(a[1]);
}

struct Branch {
    Complex coeff{1.0, 0.0};
    AtomPair atoms{Atom::g, Atom::g};  // meaningful only when atoms are present
    std::vector<Complex> modes;
};

inline constexpr double kMergeTolerance = 1e-12;
inline constexpr double kDropTolerance = 1e-14;
inline constexpr double kDegeneracyThreshold = 1e-20;

class CoherentSuperposition {
   public:
    CoherentSuperposition(std::size_t mode_count, bool atoms_present, std::vector<Branch> branches = {});

    /// Single-branch product state |modes...>.
    static CoherentSuperposition product(std::vector<Complex> modes);
    /// Single-branch product state |atoms>|modes...>.
    static CoherentSuperposition product(AtomPair atoms, std::vector<Complex> modes);

    const std::vector<Branch>& branches() const noexcept { return branches_; }
    std::size_t mode_count() const noexcept { return mode_count_; }
    bool atoms_present() const noexcept { return atoms_present_; }
    std::size_t size() const noexcept { return branches_.size(); }

    /// Largest |mu| over all branches and modes.
    double max_amplitude() const;

   private:
    std::size_t mode_count_;
    bool atoms_present_;
    std::vector<Branch> branches_;
};

/// <mu|nu> for single-mode coherent states.
Complex coherent_overlap(Complex mu, Complex nu);

/// Overlap of two branch labels (atoms and modes), ignoring coefficients.
Complex label_overlap(const Branch& a, const Branch& b, bool atoms_present);

Complex overlap(const CoherentSuperposition& a, const CoherentSuperposition& b);
double norm_squared(const CoherentSuperposition& s);
/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b);

/// Pairwise label overlaps G_ij = <label_i|label_j>.
struct GramMatrix {
    Eigen::MatrixXcd entries;
    double min_eigenvalue() const;
};
GramMatrix gram_matrix(const CoherentSuperposition& s);

/// Linear combinations; shapes must agree.
CoherentSuperposition scaled(const CoherentSuperposition& s, Complex factor);
CoherentSuperposition superpose(const CoherentSuperposition& a, const CoherentSuperposition& b);

/// Merges branches with equal atoms whose amplitudes agree to kMergeTolerance
/// and drops branches with |coeff| < kDropTolerance.
CoherentSuperposition canonicalize(const CoherentSuperposition& s);

/// 1/sqrt(<s|s>); throws NearNullStateError below kDegeneracyThreshold.
double normalization_constant(const CoherentSuperposition& s);
CoherentSuperposition normalize(const CoherentSuperposition& s);

/// Generalized bit flip exp(i pi n) on one mode: mu -> -mu.
CoherentSuperposition apply_parity(const CoherentSuperposition& s, std::size_t mode);
CoherentSuperposition apply_parity(const CoherentSuperposition& s, std::span<const std::size_t> modes);

/// D(beta)|mu> = exp((beta conj(mu) - conj(beta) mu)/2) |mu + beta>.
CoherentSuperposition displace(const CoherentSuperposition& s, std::size_t mode, Complex beta);

/// Dispersive atom-field pass with phase lambda*t. For atom in g the mode
/// amplitude rotates by e^{+i phase}; for e it rotates by e^{-i phase} and
/// the coefficient picks up e^{-i phase}.
CoherentSuperposition dispersive_pass(const CoherentSuperposition& s, std::size_t atom, std::size_t mode,
                                      double phase);

/// Single-atom unitary in the (g, e) basis.
CoherentSuperposition apply_atom_unitary(const CoherentSuperposition& s, std::size_t atom,
                                         const Eigen::Matrix2cd& u);
/// Two-atom unitary in the (gg, ge, eg, ee) basis.
CoherentSuperposition apply_two_atom_unitary(const CoherentSuperposition& s, const Eigen::Matrix4cd& u);

/// Computational-basis controlled-phase truth table, I - 2|++><++|.
Eigen::Matrix4cd cpg_truth_table();
CoherentSuperposition apply_cpg(const CoherentSuperposition& s);

struct Projection {
    CoherentSuperposition state;
    double probability = 0.0;
};
/// Keeps the branches with the given atom outcome, drops the atoms and
/// renormalizes. Throws OutcomeImpossibleError for a null outcome.
Projection project_atoms(const CoherentSuperposition& s, const AtomPair& outcome);
/// Probability of each atom outcome (gg, ge, eg, ee); never throws.
std::array<double, 4> atom_outcome_probabilities(const CoherentSuperposition& s);

/// Reduced density operator over a subset of modes, written as
/// rho = sum_kl C_kl |a_k><a_l| over distinct kept-mode labels a_k.
struct ReducedState {
    std::vector<std::vector<Complex>> labels;
    Eigen::MatrixXcd coefficients;
    GramMatrix gram;
    /// Eigenvalues of rho in descending order (non-orthogonality accounted for).
    std::vector<double> eigenvalues;
};
ReducedState reduce(const CoherentSuperposition& s, std::span<const std::size_t> keep);

/// Eigenvalues of A C A^dag where G = A^dag A, i.e. of G^{1/2} C G^{1/2}:
/// Cholesky when cond(G) < 1e12, spectral cutoff at 1e-13 otherwise.
std::vector<double> generalized_spectrum(const Eigen::MatrixXcd& coefficients, const Eigen::MatrixXcd& gram);

/// Amplitude-faithful embedding into a Fock layout: (atom 1, atom 2,) mode 1, ...
fock::FockVector to_fock(const CoherentSuperposition& s, const fock::SpaceLayout& layout);
/// Layout with the minimum truncation for this state.
fock::SpaceLayout default_layout(const CoherentSuperposition& s);

}  // namespace ctecs
