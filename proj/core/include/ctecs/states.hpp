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

// Named state families: the 16-element four-qubit cluster basis, the
// quasi-Bell states, the coherent-state cluster basis obtained with the
// encoding 0 -> +alpha, 1 -> -alpha, and the 2p-mode generalization
// produced by the generation protocol.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctecs/coherent.hpp"
#include "ctecs/fock.hpp"

namespace ctecs {

enum class ClusterFamily : std::uint8_t { CLUSTER, C, L, U, S, T, E, R };
enum class Sign : std::uint8_t { Plus, Minus };

struct CtecsLabel {
    ClusterFamily family = ClusterFamily::CLUSTER;
    Sign sign = Sign::Plus;

    /// 0..15 in the order CLUSTER+, CLUSTER-, C+, C-, ..., R+, R-.
    std::size_t index() const { return 2 * static_cast<std::size_t>(family) + static_cast<std::size_t>(sign); }
    bool operator==(const CtecsLabel&) const = default;
};

std::string to_string(const CtecsLabel& l);
/// Case-insensitive "CLUSTER+", "c-", ...; throws ShapeError when unknown.
CtecsLabel parse_ctecs_label(std::string_view text);
const std::array<CtecsLabel, 16>& all_ctecs_labels();

enum class BellFamily : std::uint8_t { Phi, Psi };
struct QuasiBellLabel {
    BellFamily family = BellFamily::Phi;
    Sign sign = Sign::Plus;
    bool operator==(const QuasiBellLabel&) const = default;
};
std::string to_string(const QuasiBellLabel& l);
/// "PHI+", "PHI-", "PSI+", "PSI-" (case-insensitive).
QuasiBellLabel parse_quasi_bell_label(std::string_view text);
const std::array<QuasiBellLabel, 4>& all_quasi_bell_labels();

/// One signed four-qubit computational basis term. Bit 3 is qubit/mode 1.
struct QubitTerm {
    std::uint8_t bits;
    int sign;
};
std::array<QubitTerm, 4> cluster_terms(const CtecsLabel& l);

/// Exact element of the four-qubit cluster basis as a vector over four
/// qubit factors.
fock::FockVector qubit_basis_element(const CtecsLabel& l);

/// N_+- = [2(1 +- e^{-4|a|^2})]^{-1/2}.
double quasi_bell_norm_closed_form(Sign sign, Complex alpha);
CoherentSuperposition quasi_bell(const QuasiBellLabel& l, Complex alpha);

/// Four-branch, four-mode coherent cluster element, normalized exactly.
CoherentSuperposition ctecs_basis_element(const CtecsLabel& l, Complex alpha);
/// The element before normalization (prefactor 1/2 included).
CoherentSuperposition ctecs_basis_element_raw(const CtecsLabel& l, Complex alpha);
/// Gram-computed normalization constant of the raw four-term sum (no 1/2).
double ctecs_normalization(const CtecsLabel& l, Complex alpha);
/// Pairwise overlaps <l_i|l_j> of the 16 normalized elements.
Eigen::MatrixXcd ctecs_gram(Complex alpha);

/// N_p^+ = 2{2 + [1 - (-1)^p] e^{-4p|a|^2}}.
double generalized_cluster_norm_closed_form(int p, Complex alpha);

/// Unnormalized post-measurement 2p-mode field state for an atom outcome,
/// with beta = i alpha: sum_{ab} s_ab c^{n(ab)} |B_a>|B_b>, where B_g = beta^p,
/// B_e = (-beta)^p, c = (-i)^p, n counts e's and s_ab = +1 only when ab equals
/// the outcome. For outcome gg this is the raw CLUSTER^+_{beta,p} sum.
CoherentSuperposition generalized_cluster_raw(int p, Complex alpha, const AtomPair& outcome);
CoherentSuperposition generalized_cluster(int p, Complex alpha, const AtomPair& outcome);

/// Modes (0-based) whose parity flip maps `from` onto `to` up to a global
/// phase. Throws InvariantError if no flip set works.
std::vector<std::size_t> bitflip_route(const CtecsLabel& from, const CtecsLabel& to);

}  // namespace ctecs
