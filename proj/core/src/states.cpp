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

#include "ctecs/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "ctecs/errors.hpp"

namespace ctecs {

namespace {

// Sign codes: +1/-1 fixed, 'p' follows the label sign, 'm' opposes it.
struct TermSpec {
    std::uint8_t bits;
    char code;
};

constexpr std::array<std::array<TermSpec, 4>, 8> kFamilyTerms{{
    {{{0b0000, 'p'}, {0b0011, '+'}, {0b1100, '+'}, {0b1111, 'm'}}},  // CLUSTER
    {{{0b0000, '+'}, {0b0011, 'p'}, {0b1100, 'm'}, {0b1111, '+'}}},  // C
    {{{0b0001, 'p'}, {0b0010, 'm'}, {0b1101, '+'}, {0b1110, '+'}}},  // L
    {{{0b0001, '+'}, {0b0010, '+'}, {0b1101, 'p'}, {0b1110, 'm'}}},  // U
    {{{0b0100, 'p'}, {0b0111, '+'}, {0b1000, 'm'}, {0b1011, '+'}}},  // S
    {{{0b0100, '+'}, {0b0111, 'p'}, {0b1000, '+'}, {0b1011, 'm'}}},  // T
    {{{0b0101, 'p'}, {0b0110, '+'}, {0b1001, '+'}, {0b1010, 'm'}}},  // E
    {{{0b0101, '+'}, {0b0110, 'p'}, {0b1001, 'm'}, {0b1010, '+'}}},  // R
}};

constexpr std::array<std::string_view, 8> kFamilyNames{"CLUSTER", "C", "L", "U", "S", "T", "E", "R"};

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

Sign parse_sign(char c, std::string_view text) {
    if (c == '+') return Sign::Plus;
    if (c == '-') return Sign::Minus;
    throw ShapeError("label must end in '+' or '-': '" + std::string(text) + "'");
}

std::vector<Complex> encode(std::uint8_t bits, Complex alpha, std::size_t n_modes) {
    std::vector<Complex> modes(n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
        const bool one = (bits >> (n_modes - 1 - m)) & 1U;
        modes[m] = one ? -alpha : alpha;
    }
    return modes;
}

}  // namespace

std::string to_string(const CtecsLabel& l) {
    return std::string(kFamilyNames[static_cast<std::size_t>(l.family)]) + (l.sign == Sign::Plus ? "+" : "-");
}

CtecsLabel parse_ctecs_label(std::string_view text) {
    const std::string u = upper(text);
    if (u.size() < 2) throw ShapeError("unknown basis label '" + std::string(text) + "'");
    const Sign sign = parse_sign(u.back(), text);
    const std::string_view family = std::string_view(u).substr(0, u.size() - 1);
    for (std::size_t f = 0; f < kFamilyNames.size(); ++f) {
        if (family == kFamilyNames[f]) return {static_cast<ClusterFamily>(f), sign};
    }
    throw ShapeError("unknown basis label '" + std::string(text) + "'");
}

const std::array<CtecsLabel, 16>& all_ctecs_labels() {
    static const std::array<CtecsLabel, 16> labels = [] {
        std::array<CtecsLabel, 16> out{};
        for (std::size_t i = 0; i < 16; ++i) {
            out[i] = {static_cast<ClusterFamily>(i / 2), static_cast<Sign>(i % 2)};
        }
        return out;
    }();
    return labels;
}

std::string to_string(const QuasiBellLabel& l) {
    return std::string(l.family == BellFamily::Phi ? "PHI" : "PSI") + (l.sign == Sign::Plus ? "+" : "-");
}

QuasiBellLabel parse_quasi_bell_label(std::string_view text) {
    const std::string u = upper(text);
    if (u.size() != 4) throw ShapeError("unknown quasi-Bell label '" + std::string(text) + "'");
    const Sign sign = parse_sign(u.back(), text);
    const std::string_view family = std::string_view(u).substr(0, 3);
    if (family == "PHI") return {BellFamily::Phi, sign};
    if (family == "PSI") return {BellFamily::Psi, sign};
    throw ShapeError("unknown quasi-Bell label '" + std::string(text) + "'");
}

const std::array<QuasiBellLabel, 4>& all_quasi_bell_labels() {
    static const std::array<QuasiBellLabel, 4> labels{QuasiBellLabel{BellFamily::Phi, Sign::Plus},
                                                      QuasiBellLabel{BellFamily::Phi, Sign::Minus},
                                                      QuasiBellLabel{BellFamily::Psi, Sign::Plus},
                                                      QuasiBellLabel{BellFamily::Psi, Sign::Minus}};
    return labels;
}

std::array<QubitTerm, 4> cluster_terms(const CtecsLabel& l) {
    const int s = l.sign == Sign::Plus ? 1 : -1;
    std::array<QubitTerm, 4> out{};
    const auto& spec = kFamilyTerms[static_cast<std::size_t>(l.family)];
    for (std::size_t i = 0; i < 4; ++i) {
        int sign = 1;
        switch (spec[i].code) {
            case 'p': sign = s; break;
            case 'm': sign = -s; break;
            default: sign = 1; break;
        }
        out[i] = {spec[i].bits, sign};
    }
    return out;
}

fock::FockVector qubit_basis_element(const CtecsLabel& l) {
    const fock::SpaceLayout layout(std::vector<fock::Factor>(4, fock::Factor::qubit()));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    for (const QubitTerm& t : cluster_terms(l)) v[t.bits] = 0.5 * t.sign;
    return fock::FockVector(layout, std::move(v));
}

double quasi_bell_norm_closed_form(Sign sign, Complex alpha) {
    const double x = std::exp(-4.0 * std::norm(alpha));
    const double d = 2.0 * (sign == Sign::Plus ? 1.0 + x : 1.0 - x);
    if (!(d >= kDegeneracyThreshold)) throw NearNullStateError("quasi-Bell state is null at this alpha");
    return 1.0 / std::sqrt(d);
}

CoherentSuperposition quasi_bell(const QuasiBellLabel& l, Complex alpha) {
    const double s = l.sign == Sign::Plus ? 1.0 : -1.0;
    std::vector<Branch> b;
    if (l.family == BellFamily::Phi) {
        b.push_back({1.0, {}, {alpha, alpha}});
        b.push_back({s, {}, {-alpha, -alpha}});
    } else {
        b.push_back({1.0, {}, {alpha, -alpha}});
        b.push_back({s, {}, {-alpha, alpha}});
    }
    return normalize(CoherentSuperposition(2, false, std::move(b)));
}

CoherentSuperposition ctecs_basis_element_raw(const CtecsLabel& l, Complex alpha) {
    std::vector<Branch> b;
    for (const QubitTerm& t : cluster_terms(l)) b.push_back({0.5 * t.sign, {}, encode(t.bits, alpha, 4)});
    return CoherentSuperposition(4, false, std::move(b));
}

double ctecs_normalization(const CtecsLabel& l, Complex alpha) {
    return 0.5 * normalization_constant(ctecs_basis_element_raw(l, alpha));
}

CoherentSuperposition ctecs_basis_element(const CtecsLabel& l, Complex alpha) {
    return normalize(ctecs_basis_element_raw(l, alpha));
}

Eigen::MatrixXcd ctecs_gram(Complex alpha) {
    std::vector<CoherentSuperposition> elems;
    for (const CtecsLabel& l : all_ctecs_labels()) elems.push_back(ctecs_basis_element(l, alpha));
    Eigen::MatrixXcd g(16, 16);
    for (Eigen::Index i = 0; i < 16; ++i) {
        for (Eigen::Index j = 0; j < 16; ++j) g(i, j) = overlap(elems[i], elems[j]);
    }
    return g;
}

double generalized_cluster_norm_closed_form(int p, Complex alpha) {
    if (p < 1) throw ShapeError("p must be >= 1");
    const double odd = (p % 2 == 0) ? 0.0 : 2.0;  // 1 - (-1)^p
    return 2.0 * (2.0 + odd * std::exp(-4.0 * p * std::norm(alpha)));
}

CoherentSuperposition generalized_cluster_raw(int p, Complex alpha, const AtomPair& outcome) {
    if (p < 1) throw ShapeError("p must be >= 1");
    const auto np = static_cast<std::size_t>(p);
    const Complex beta = Complex(0, 1) * alpha;
    const Complex c = std::pow(Complex(0, -1), p);
    std::vector<Branch> branches;
    for (const AtomPair& ab : kAtomOutcomes) {
        std::vector<Complex> modes;
        Complex w = (ab == outcome) ? 1.0 : -1.0;
        for (Atom a : ab) {
            const Complex amp = (a == Atom::g) ? beta : -beta;
            modes.insert(modes.end(), np, amp);
            if (a == Atom::e) w *= c;
        }
        branches.push_back({w, {}, std::move(modes)});
    }
    return CoherentSuperposition(2 * np, false, std::move(branches));
}

CoherentSuperposition generalized_cluster(int p, Complex alpha, const AtomPair& outcome) {
    return normalize(generalized_cluster_raw(p, alpha, outcome));
}

std::vector<std::size_t> bitflip_route(const CtecsLabel& from, const CtecsLabel& to) {
    const auto source = cluster_terms(from);
    const auto target = cluster_terms(to);
    for (std::uint8_t mask = 0; mask < 16; ++mask) {
        for (int global : {1, -1}) {
            const bool ok = std::all_of(source.begin(), source.end(), [&](const QubitTerm& t) {
                const std::uint8_t flipped = t.bits ^ mask;
                return std::any_of(target.begin(), target.end(), [&](const QubitTerm& u) {
                    return u.bits == flipped && u.sign == global * t.sign;
                });
            });
            if (ok) {
                std::vector<std::size_t> modes;
                for (std::size_t m = 0; m < 4; ++m) {
                    if ((mask >> (3 - m)) & 1U) modes.push_back(m);
                }
                return modes;
            }
        }
    }
    throw InvariantError("no bit-flip route from " + to_string(from) + " to " + to_string(to));
}

}  // namespace ctecs
