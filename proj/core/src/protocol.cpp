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

#include "ctecs/protocol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ctecs/errors.hpp"
#include "ctecs/rng.hpp"

namespace ctecs {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> signs_of(const ProtocolConfig& c) {
    if (c.initial_signs.empty()) return std::vector<int>(c.mode_count(), 1);
    return c.initial_signs;
}

std::vector<std::size_t> flipped_modes(const ProtocolConfig& c) {
    std::vector<std::size_t> out;
    const auto s = signs_of(c);
    for (std::size_t m = 0; m < s.size(); ++m) {
        if (s[m] < 0) out.push_back(m);
    }
    return out;
}

Complex beta_of(const ProtocolConfig& c) { return Complex(0, 1) * c.alpha; }

/// Branch structure shared by the pre-gate checkpoints: each atom is in
/// (|g> + |e>)/sqrt2; atoms in `passed` have imprinted +-beta on their
/// cavities with the (-i)^p weight on the e branch.
CoherentSuperposition pre_gate_state(const ProtocolConfig& c, std::array<bool, 2> passed) {
    const auto p = static_cast<std::size_t>(c.p);
    const auto signs = signs_of(c);
    const Complex beta = beta_of(c);
    const Complex weight_e = std::pow(Complex(0, -1), c.p);
    std::vector<Branch> branches;
    for (const AtomPair& ab : kAtomOutcomes) {
        Branch b{0.5, ab, std::vector<Complex>(c.mode_count())};
        for (std::size_t atom = 0; atom < 2; ++atom) {
            for (std::size_t j = 0; j < p; ++j) {
                const std::size_t m = atom * p + j;
                const double s = signs[m];
                if (!passed[atom]) {
                    b.modes[m] = s * c.alpha;
                } else {
                    b.modes[m] = (ab[atom] == Atom::g ? s : -s) * beta;
                }
            }
            if (passed[atom] && ab[atom] == Atom::e) b.coeff *= weight_e;
        }
        branches.push_back(std::move(b));
    }
    return CoherentSuperposition(c.mode_count(), true, std::move(branches));
}

CoherentSuperposition with_atoms(const CoherentSuperposition& field, const AtomPair& atoms, Complex factor) {
    std::vector<Branch> out = field.branches();
    for (Branch& b : out) {
        b.atoms = atoms;
        b.coeff *= factor;
    }
    return CoherentSuperposition(field.mode_count(), true, std::move(out));
}

std::size_t sample_outcome(const std::array<double, 4>& probs, std::uint64_t seed) {
    double total = 0.0;
    for (double p : probs) total += p;
    const double u = CounterRng(seed).split(1).uniform(0) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        acc += probs[i];
        if (u < acc) return i;
    }
    return 3;
}

void add_timings(ProtocolRecord& rec) {
    const ProtocolConfig& c = rec.config;
    rec.timings.push_back({"ramsey", "0 (instantaneous pulse)", 0.0});
    const double pass = c.dispersive.pass_time();
    for (int j = 1; j <= c.p; ++j) {
        rec.timings.push_back({"dispersive_cavity_" + std::to_string(j), "pi/(2 lambda)", pass});
    }
    rec.timings.push_back({"gate", "pi/chi", c.cpg.gate_time()});
    rec.total_time = 0.0;
    for (const StageTiming& t : rec.timings) rec.total_time += t.duration;
}

void add_warnings(ProtocolRecord& rec) {
    for (auto& w : rec.config.dispersive.warnings()) rec.warnings.push_back(w);
    for (auto& w : rec.config.cpg.warnings()) rec.warnings.push_back(w);
}

void check_probabilities(const std::array<double, 4>& probs) {
    double total = 0.0;
    for (double p : probs) total += p;
    if (std::abs(total - 1.0) > 1e-10) {
        std::ostringstream os;
        os << "atomic outcome probabilities sum to " << total;
        throw InvariantError(os.str());
    }
}

ProtocolRecord run_analytic(const ProtocolConfig& c) {
    ProtocolRecord rec{c, {}, {}, 0.0, {}, CoherentSuperposition(1, false), 0.0, std::nullopt, {}, 0.0, {}};
    const auto p = static_cast<std::size_t>(c.p);
    const auto signs = signs_of(c);
    std::vector<Complex> init(c.mode_count());
    for (std::size_t m = 0; m < init.size(); ++m) init[m] = static_cast<double>(signs[m]) * c.alpha;

    auto checkpoint = [&](std::string name, std::string target_desc, const CoherentSuperposition& s,
                          const CoherentSuperposition& target) {
        rec.checkpoints.push_back({std::move(name), std::move(target_desc), s, fidelity(s, target)});
    };

    CoherentSuperposition s = CoherentSuperposition::product({Atom::g, Atom::g}, init);
    s = apply_atom_unitary(s, 0, ramsey_matrix());
    s = apply_atom_unitary(s, 1, ramsey_matrix());
    checkpoint("ramsey", "(|g>+|e>)(|g>+|e>)/2 |fields>", s, target_after_ramsey(c));

    const double phase = c.dispersive.lam() * c.dispersive.pass_time();
    for (std::size_t atom = 0; atom < 2; ++atom) {
        for (std::size_t j = 0; j < p; ++j) s = dispersive_pass(s, atom, atom * p + j, phase);
        checkpoint("dispersive_atom" + std::to_string(atom + 1),
                   atom == 0 ? "per-atom state (|g>|beta..> + (-i)^p |e>|-beta..>)/sqrt2, atom 1"
                             : "product of per-atom states (pre-gate state)",
                   s, atom == 0 ? target_after_atom(c, 0) : target_before_gate(c));
    }

    s = apply_cpg(s);
    checkpoint("gate", "post-gate state, outcome-resolved basis elements", s, target_after_gate(c));

    rec.outcome_probabilities = atom_outcome_probabilities(s);
    check_probabilities(rec.outcome_probabilities);
    rec.outcome = c.forced_outcome ? *c.forced_outcome : kAtomOutcomes[sample_outcome(rec.outcome_probabilities, c.seed)];
    const Projection proj = project_atoms(s, rec.outcome);
    rec.outcome_probability = proj.probability;
    const CoherentSuperposition target = target_final(c, rec.outcome);
    checkpoint("measurement", "post-selected field state for outcome " + to_string(rec.outcome), proj.state, target);
    rec.final_state = proj.state;
    rec.final_fidelity = fidelity(proj.state, target);
    if (c.mode_count() == 4) rec.classification = classify(proj.state, beta_of(c));
    return rec;
}

ProtocolRecord run_fock(const ProtocolConfig& c) {
    const std::size_t n = fock::required_truncation(std::abs(c.alpha));
    const std::size_t modes = c.mode_count();
    const double dim = 4.0 * std::pow(static_cast<double>(n), static_cast<double>(modes));
    // Working set: state, gathered block, product and output.
    const double bytes = 4.0 * 16.0 * dim;
    if (bytes > static_cast<double>(c.memory_budget_bytes)) {
        std::ostringstream os;
        os << "fock backend: truncation rule for |alpha| = " << std::abs(c.alpha) << " requires n_trunc = " << n
           << " per mode; " << modes << " modes need about " << bytes / (1024.0 * 1024.0)
           << " MiB, above the memory budget of " << static_cast<double>(c.memory_budget_bytes) / (1024.0 * 1024.0)
           << " MiB";
        throw TruncationError(os.str(), n);
    }

    ProtocolRecord rec{c, {}, {}, 0.0, {}, CoherentSuperposition(1, false), 0.0, std::nullopt, {}, 0.0, {}};
    const auto p = static_cast<std::size_t>(c.p);
    const auto signs = signs_of(c);
    const fock::SpaceLayout layout = fock::SpaceLayout::atoms_and_modes(2, modes, n);
    const fock::SpaceLayout field_layout = fock::SpaceLayout::atoms_and_modes(0, modes, n);

    auto checkpoint = [&](std::string name, std::string target_desc, fock::FockVector v,
                          const CoherentSuperposition& target) {
        const double f = fock::fidelity(v, to_fock(target, v.layout()));
        rec.checkpoints.push_back({std::move(name), std::move(target_desc), std::move(v), f});
    };

    fock::FockVector psi = fock::basis_state(fock::SpaceLayout({fock::Factor::qubit(), fock::Factor::qubit()}),
                                             std::array<std::size_t, 2>{0, 0});
    for (std::size_t m = 0; m < modes; ++m) {
        psi = fock::tensor(psi, fock::coherent_fock(static_cast<double>(signs[m]) * c.alpha, n));
    }

    const fock::OperatorMatrix r(fock::SpaceLayout({fock::Factor::qubit()}), ramsey_matrix());
    for (std::size_t atom = 0; atom < 2; ++atom) {
        const std::size_t f[] = {atom};
        psi = fock::apply_on(psi, r, f);
    }
    checkpoint("ramsey", "(|g>+|e>)(|g>+|e>)/2 |fields>", psi, target_after_ramsey(c));

    const fock::OperatorMatrix u_pass = fock::propagator(dispersive_h(c.dispersive, n), c.dispersive.pass_time());
    for (std::size_t atom = 0; atom < 2; ++atom) {
        for (std::size_t j = 0; j < p; ++j) {
            const std::size_t f[] = {atom, 2 + atom * p + j};
            psi = fock::apply_on(psi, u_pass, f);
        }
        checkpoint("dispersive_atom" + std::to_string(atom + 1),
                   atom == 0 ? "per-atom state (|g>|beta..> + (-i)^p |e>|-beta..>)/sqrt2, atom 1"
                             : "product of per-atom states (pre-gate state)",
                   psi, atom == 0 ? target_after_atom(c, 0) : target_before_gate(c));
    }

    const std::size_t atoms[] = {0, 1};
    psi = fock::apply_on(psi, cpg_propagator(c.cpg), atoms);
    checkpoint("gate", "post-gate state, outcome-resolved basis elements", psi, target_after_gate(c));

    const auto block = static_cast<Eigen::Index>(field_layout.dimension());
    for (const AtomPair& o : kAtomOutcomes) {
        rec.outcome_probabilities[atom_index(o)] =
            psi.amplitudes().segment(static_cast<Eigen::Index>(atom_index(o)) * block, block).squaredNorm();
    }
    check_probabilities(rec.outcome_probabilities);
    rec.outcome = c.forced_outcome ? *c.forced_outcome : kAtomOutcomes[sample_outcome(rec.outcome_probabilities, c.seed)];
    rec.outcome_probability = rec.outcome_probabilities[atom_index(rec.outcome)];
    if (!(rec.outcome_probability >= kDegeneracyThreshold)) {
        throw OutcomeImpossibleError("atom outcome " + to_string(rec.outcome) + " has probability " +
                                     std::to_string(rec.outcome_probability));
    }
    const fock::FockVector field =
        fock::FockVector(field_layout,
                         psi.amplitudes().segment(static_cast<Eigen::Index>(atom_index(rec.outcome)) * block, block))
            .normalized();
    const CoherentSuperposition target = target_final(c, rec.outcome);
    checkpoint("measurement", "post-selected field state for outcome " + to_string(rec.outcome), field, target);
    rec.final_fidelity = rec.checkpoints.back().fidelity;
    rec.final_state = field;
    return rec;
}

}  // namespace

std::string to_string(Backend b) { return b == Backend::Analytic ? "analytic" : "fock"; }

void ProtocolConfig::validate() const {
    if (p < 1) throw ShapeError("cavities per atom must be >= 1");
    if (!initial_signs.empty()) {
        if (initial_signs.size() != mode_count()) {
            throw ShapeError("initial_signs has " + std::to_string(initial_signs.size()) + " entries, expected " +
                             std::to_string(mode_count()));
        }
        for (int s : initial_signs) {
            if (s != 1 && s != -1) throw ShapeError("initial_signs entries must be +1 or -1");
        }
    }
}

const Checkpoint& ProtocolRecord::checkpoint(std::string_view name) const {
    for (const Checkpoint& c : checkpoints) {
        if (c.name == name) return c;
    }
    throw ShapeError("no checkpoint named '" + std::string(name) + "'");
}

Eigen::Matrix2cd ramsey_matrix() {
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd r;
    r << h, -h, h, h;
    return r;
}

Eigen::Vector2cd ramsey(const Eigen::Vector2cd& atom_state) { return ramsey_matrix() * atom_state; }

CoherentSuperposition target_after_ramsey(const ProtocolConfig& c) { return pre_gate_state(c, {false, false}); }

CoherentSuperposition target_after_atom(const ProtocolConfig& c, std::size_t atom) {
    if (atom > 1) throw ShapeError("atom index must be 0 or 1");
    return pre_gate_state(c, {atom == 0, atom == 1});
}

CoherentSuperposition target_before_gate(const ProtocolConfig& c) { return pre_gate_state(c, {true, true}); }

CoherentSuperposition target_after_gate(const ProtocolConfig& c) {
    c.validate();
    const auto flips = flipped_modes(c);
    if (c.p == 2 && flips.empty()) {
        const Complex beta = beta_of(c);
        CoherentSuperposition out = with_atoms(ctecs_basis_element({ClusterFamily::CLUSTER, Sign::Plus}, beta),
                                               {Atom::g, Atom::g}, 0.5);
        out = superpose(out, with_atoms(ctecs_basis_element({ClusterFamily::C, Sign::Plus}, beta), {Atom::g, Atom::e},
                                        -0.5));
        out = superpose(out, with_atoms(ctecs_basis_element({ClusterFamily::C, Sign::Minus}, beta),
                                        {Atom::e, Atom::g}, -0.5));
        out = superpose(out, with_atoms(ctecs_basis_element({ClusterFamily::CLUSTER, Sign::Minus}, beta),
                                        {Atom::e, Atom::e}, 0.5));
        return out;
    }
    CoherentSuperposition out(c.mode_count(), true);
    for (const AtomPair& o : kAtomOutcomes) {
        const CoherentSuperposition field = apply_parity(generalized_cluster_raw(c.p, c.alpha, o), flips);
        out = superpose(out, with_atoms(field, o, 0.25));
    }
    return out;
}

CoherentSuperposition target_final(const ProtocolConfig& c, const AtomPair& outcome) {
    c.validate();
    return normalize(apply_parity(generalized_cluster_raw(c.p, c.alpha, outcome), flipped_modes(c)));
}

CtecsLabel expected_label(const AtomPair& outcome) {
    switch (atom_index(outcome)) {
        case 0: return {ClusterFamily::CLUSTER, Sign::Plus};
        case 1: return {ClusterFamily::C, Sign::Plus};
        case 2: return {ClusterFamily::C, Sign::Minus};
        default: return {ClusterFamily::CLUSTER, Sign::Minus};
    }
}

ProtocolRecord run(const ProtocolConfig& config) {
    config.validate();
    ProtocolRecord rec = config.backend == Backend::Analytic ? run_analytic(config) : run_fock(config);
    add_timings(rec);
    add_warnings(rec);
    return rec;
}

ProtocolRecord run_variant(ProtocolConfig config, std::vector<int> initial_signs) {
    config.initial_signs = std::move(initial_signs);
    return run(config);
}

Classification classify(const CoherentSuperposition& state, Complex alpha) {
    if (state.atoms_present() || state.mode_count() != 4) {
        throw ShapeError("classify expects a four-mode field state without atoms");
    }
    Classification best{all_ctecs_labels()[0], -1.0};
    for (const CtecsLabel& l : all_ctecs_labels()) {
        const double f = fidelity(state, ctecs_basis_element(l, alpha));
        if (f > best.fidelity) best = {l, f};
    }
    return best;
}

}  // namespace ctecs
