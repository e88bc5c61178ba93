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

#include "ctecs/coherent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "ctecs/errors.hpp"
#include "ctecs/format.hpp"

namespace ctecs {

namespace {

void require_compatible(const CoherentSuperposition& a, const CoherentSuperposition& b, const char* what) {
    if (a.mode_count() != b.mode_count() || a.atoms_present() != b.atoms_present()) {
        throw ShapeError(std::string(what) + ": states have different shapes");
    }
}

void require_mode(const CoherentSuperposition& s, std::size_t mode) {
    if (mode >= s.mode_count()) {
        throw ShapeError("mode index " + std::to_string(mode) + " out of range for " +
                         std::to_string(s.mode_count()) + " modes");
    }
}

void require_atoms(const CoherentSuperposition& s, const char* what) {
    if (!s.atoms_present()) throw ShapeError(std::string(what) + ": atoms are not present");
}

bool same_label(const Branch& a, const Branch& b, bool atoms_present) {
    if (atoms_present && a.atoms != b.atoms) return false;
    for (std::size_t m = 0; m < a.modes.size(); ++m) {
        if (std::abs(a.modes[m] - b.modes[m]) >= kMergeTolerance) return false;
    }
    return true;
}

/// Sum over modes of the log of the single-mode overlap.
Complex log_overlap(std::span<const Complex> mu, std::span<const Complex> nu) {
    Complex acc = 0.0;
    for (std::size_t m = 0; m < mu.size(); ++m) {
        acc += -0.5 * std::norm(mu[m]) - 0.5 * std::norm(nu[m]) + std::conj(mu[m]) * nu[m];
    }
    return acc;
}

}  // namespace

std::string to_string(const AtomPair& atoms) {
    std::string s;
    for (Atom a : atoms) s += (a == Atom::g) ? 'g' : 'e';
    return s;
}

AtomPair parse_atom_pair(std::string_view text) {
    if (text.size() != 2) throw ShapeError("atom outcome must be two letters from {g, e}: '" + std::string(text) + "'");
    AtomPair out{};
    for (std::size_t i = 0; i < 2; ++i) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
        if (c == 'g') {
            out[i] = Atom::g;
        } else if (c == 'e') {
            out[i] = Atom::e;
        } else {
            throw ShapeError("atom outcome must be two letters from {g, e}: '" + std::string(text) + "'");
        }
    }
    return out;
}

CoherentSuperposition::CoherentSuperposition(std::size_t mode_count, bool atoms_present, std::vector<Branch> branches)
    : mode_count_(mode_count), atoms_present_(atoms_present), branches_(std::move(branches)) {
    if (mode_count_ == 0) throw ShapeError("a coherent superposition needs at least one mode");
    for (const Branch& b : branches_) {
        if (b.modes.size() != mode_count_) {
            throw ShapeError("branch has " + std::to_string(b.modes.size()) + " modes, expected " +
                             std::to_string(mode_count_));
        }
    }
}

CoherentSuperposition CoherentSuperposition::product(std::vector<Complex> modes) {
    const std::size_t n = modes.size();
    return CoherentSuperposition(n, false, {Branch{1.0, {Atom::g, Atom::g}, std::move(modes)}});
}

CoherentSuperposition CoherentSuperposition::product(AtomPair atoms, std::vector<Complex> modes) {
    const std::size_t n = modes.size();
    return CoherentSuperposition(n, true, {Branch{1.0, atoms, std::move(modes)}});
}

double CoherentSuperposition::max_amplitude() const {
    double m = 0.0;
    for (const Branch& b : branches_) {
        for (Complex mu : b.modes) m = std::max(m, std::abs(mu));
    }
    return m;
}

Complex coherent_overlap(Complex mu, Complex nu) {
    return std::exp(-0.5 * std::norm(mu) - 0.5 * std::norm(nu) + std::conj(mu) * nu);
}

Complex label_overlap(const Branch& a, const Branch& b, bool atoms_present) {
    if (atoms_present && a.atoms != b.atoms) return 0.0;
    return std::exp(log_overlap(a.modes, b.modes));
}

Complex overlap(const CoherentSuperposition& a, const CoherentSuperposition& b) {
    require_compatible(a, b, "overlap");
    Complex acc = 0.0;
    for (const Branch& x : a.branches()) {
        for (const Branch& y : b.branches()) {
            acc += std::conj(x.coeff) * y.coeff * label_overlap(x, y, a.atoms_present());
        }
    }
    return acc;
}

double norm_squared(const CoherentSuperposition& s) { return overlap(s, s).real(); }

double fidelity(const CoherentSuperposition& a, const CoherentSuperposition& b) {
    // Cauchy-Schwarz holds exactly; rounding can push the ratio past 1.
    return std::min(1.0, std::norm(overlap(a, b)) / (norm_squared(a) * norm_squared(b)));
}

double GramMatrix::min_eigenvalue() const {
    if (entries.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

GramMatrix gram_matrix(const CoherentSuperposition& s) {
    const auto n = static_cast<Eigen::Index>(s.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = label_overlap(s.branches()[i], s.branches()[j], s.atoms_present());
        }
    }
    return {std::move(g)};
}

CoherentSuperposition scaled(const CoherentSuperposition& s, Complex factor) {
    std::vector<Branch> out = s.branches();
    for (Branch& b : out) b.coeff *= factor;
    return CoherentSuperposition(s.mode_count(), s.atoms_present(), std::move(out));
}

CoherentSuperposition superpose(const CoherentSuperposition& a, const CoherentSuperposition& b) {
    require_compatible(a, b, "superpose");
    std::vector<Branch> out = a.branches();
    out.insert(out.end(), b.branches().begin(), b.branches().end());
    return canonicalize(CoherentSuperposition(a.mode_count(), a.atoms_present(), std::move(out)));
}

CoherentSuperposition canonicalize(const CoherentSuperposition& s) {
    std::vector<Branch> merged;
    for (const Branch& b : s.branches()) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Branch& m) { return same_label(m, b, s.atoms_present()); });
        if (it == merged.end()) {
            merged.push_back(b);
        } else {
            it->coeff += b.coeff;
        }
    }
    std::erase_if(merged, [](const Branch& b) { return std::abs(b.coeff) < kDropTolerance; });
    if (!s.atoms_present()) {
        for (Branch& b : merged) b.atoms = {Atom::g, Atom::g};
    }
    return CoherentSuperposition(s.mode_count(), s.atoms_present(), std::move(merged));
}

double normalization_constant(const CoherentSuperposition& s) {
    const double n2 = norm_squared(s);
    if (!(n2 >= kDegeneracyThreshold)) {
        throw NearNullStateError("state is near-null (norm^2 = " + format_double(n2, 6) +
                                 "); cannot normalize");
    }
    return 1.0 / std::sqrt(n2);
}

CoherentSuperposition normalize(const CoherentSuperposition& s) {
    const CoherentSuperposition c = canonicalize(s);
    return scaled(c, normalization_constant(c));
}

CoherentSuperposition apply_parity(const CoherentSuperposition& s, std::size_t mode) {
    require_mode(s, mode);
    std::vector<Branch> out = s.branches();
    for (Branch& b : out) b.modes[mode] = -b.modes[mode];
    return CoherentSuperposition(s.mode_count(), s.atoms_present(), std::move(out));
}

CoherentSuperposition apply_parity(const CoherentSuperposition& s, std::span<const std::size_t> modes) {
    CoherentSuperposition out = s;
    for (std::size_t m : modes) out = apply_parity(out, m);
    return out;
}

CoherentSuperposition displace(const CoherentSuperposition& s, std::size_t mode, Complex beta) {
    require_mode(s, mode);
    std::vector<Branch> out = s.branches();
    for (Branch& b : out) {
        const Complex mu = b.modes[mode];
        b.coeff *= std::exp(0.5 * (beta * std::conj(mu) - std::conj(beta) * mu));
        b.modes[mode] = mu + beta;
    }
    return canonicalize(CoherentSuperposition(s.mode_count(), s.atoms_present(), std::move(out)));
}

CoherentSuperposition dispersive_pass(const CoherentSuperposition& s, std::size_t atom, std::size_t mode,
                                      double phase) {
    require_atoms(s, "dispersive_pass");
    require_mode(s, mode);
    if (atom > 1) throw ShapeError("atom index must be 0 or 1");
    const Complex forward = std::exp(Complex(0, phase));
    const Complex backward = std::exp(Complex(0, -phase));
    std::vector<Branch> out = s.branches();
    for (Branch& b : out) {
        if (b.atoms[atom] == Atom::g) {
            b.modes[mode] *= forward;
        } else {
            b.modes[mode] *= backward;
            b.coeff *= backward;
        }
    }
    return canonicalize(CoherentSuperposition(s.mode_count(), true, std::move(out)));
}

CoherentSuperposition apply_atom_unitary(const CoherentSuperposition& s, std::size_t atom,
                                         const Eigen::Matrix2cd& u) {
    require_atoms(s, "apply_atom_unitary");
    if (atom > 1) throw ShapeError("atom index must be 0 or 1");
    std::vector<Branch> out;
    out.reserve(2 * s.size());
    for (const Branch& b : s.branches()) {
        const auto col = static_cast<Eigen::Index>(b.atoms[atom]);
        for (Atom target : {Atom::g, Atom::e}) {
            const Complex amp = u(static_cast<Eigen::Index>(target), col);
            if (amp == Complex(0.0)) continue;
            Branch nb = b;
            nb.atoms[atom] = target;
            nb.coeff *= amp;
            out.push_back(std::move(nb));
        }
    }
    return canonicalize(CoherentSuperposition(s.mode_count(), true, std::move(out)));
}

CoherentSuperposition apply_two_atom_unitary(const CoherentSuperposition& s, const Eigen::Matrix4cd& u) {
    require_atoms(s, "apply_two_atom_unitary");
    std::vector<Branch> out;
    out.reserve(4 * s.size());
    for (const Branch& b : s.branches()) {
        const auto col = static_cast<Eigen::Index>(atom_index(b.atoms));
        for (const AtomPair& target : kAtomOutcomes) {
            const Complex amp = u(static_cast<Eigen::Index>(atom_index(target)), col);
            if (amp == Complex(0.0)) continue;
            Branch nb = b;
            nb.atoms = target;
            nb.coeff *= amp;
            out.push_back(std::move(nb));
        }
    }
    return canonicalize(CoherentSuperposition(s.mode_count(), true, std::move(out)));
}

Eigen::Matrix4cd cpg_truth_table() {
    Eigen::Matrix4cd u;
    u.setConstant(-0.5);
    u.diagonal().setConstant(0.5);
    return u;
}

CoherentSuperposition apply_cpg(const CoherentSuperposition& s) {
    require_atoms(s, "apply_cpg");
    return apply_two_atom_unitary(s, cpg_truth_table());
}

namespace {

CoherentSuperposition filter_outcome(const CoherentSuperposition& s, const AtomPair& outcome) {
    std::vector<Branch> kept;
    for (const Branch& b : s.branches()) {
        if (b.atoms == outcome) kept.push_back(Branch{b.coeff, {Atom::g, Atom::g}, b.modes});
    }
    return CoherentSuperposition(s.mode_count(), false, std::move(kept));
}

}  // namespace

Projection project_atoms(const CoherentSuperposition& s, const AtomPair& outcome) {
    require_atoms(s, "project_atoms");
    const CoherentSuperposition filtered = canonicalize(filter_outcome(s, outcome));
    const double p = norm_squared(filtered);
    if (!(p >= kDegeneracyThreshold)) {
        throw OutcomeImpossibleError("atom outcome " + to_string(outcome) + " has probability " +
                                     std::to_string(p));
    }
    return {scaled(filtered, 1.0 / std::sqrt(p)), p};
}

std::array<double, 4> atom_outcome_probabilities(const CoherentSuperposition& s) {
    require_atoms(s, "atom_outcome_probabilities");
    std::array<double, 4> p{};
    for (const AtomPair& o : kAtomOutcomes) {
        const CoherentSuperposition f = filter_outcome(s, o);
        p[atom_index(o)] = f.size() == 0 ? 0.0 : norm_squared(f);
    }
    return p;
}

std::vector<double> generalized_spectrum(const Eigen::MatrixXcd& coefficients, const Eigen::MatrixXcd& gram) {
    if (gram.rows() == 0) return {};
    const Eigen::MatrixXcd g = 0.5 * (gram + gram.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gs(g);
    const Eigen::VectorXd& gw = gs.eigenvalues();
    const double gmax = gw.maxCoeff();
    const double gmin = gw.minCoeff();
    const bool well_conditioned = gmin > 0.0 && gmax / gmin < 1e12;

    Eigen::MatrixXcd reduced;
    if (well_conditioned) {
        Eigen::LLT<Eigen::MatrixXcd> llt(g);
        if (llt.info() != Eigen::Success) throw InvariantError("Cholesky of Gram matrix failed");
        const Eigen::MatrixXcd l = llt.matrixL();
        reduced = l.adjoint() * coefficients * l;
    } else {
        std::vector<Eigen::Index> kept;
        for (Eigen::Index k = 0; k < gw.size(); ++k) {
            if (gw[k] > 1e-13) kept.push_back(k);
        }
        Eigen::MatrixXcd w(g.rows(), static_cast<Eigen::Index>(kept.size()));
        for (std::size_t c = 0; c < kept.size(); ++c) {
            w.col(static_cast<Eigen::Index>(c)) = gs.eigenvectors().col(kept[c]) * std::sqrt(gw[kept[c]]);
        }
        reduced = w.adjoint() * coefficients * w;
    }
    reduced = 0.5 * (reduced + reduced.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rs(reduced, Eigen::EigenvaluesOnly);
    std::vector<double> ev(rs.eigenvalues().begin(), rs.eigenvalues().end());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

ReducedState reduce(const CoherentSuperposition& s, std::span<const std::size_t> keep) {
    if (s.atoms_present()) throw ShapeError("reduce: atoms are present; measure them first");
    if (keep.empty()) throw ShapeError("reduce: keep set is empty");
    std::vector<bool> kept_mask(s.mode_count(), false);
    for (std::size_t m : keep) {
        require_mode(s, m);
        if (kept_mask[m]) throw ShapeError("reduce: repeated mode index");
        kept_mask[m] = true;
    }

    const CoherentSuperposition c = canonicalize(s);
    std::vector<std::vector<Complex>> labels;
    std::vector<std::size_t> label_of;
    std::vector<std::vector<Complex>> traced;
    for (const Branch& b : c.branches()) {
        std::vector<Complex> k;
        std::vector<Complex> t;
        for (std::size_t m : keep) k.push_back(b.modes[m]);
        for (std::size_t m = 0; m < c.mode_count(); ++m) {
            if (!kept_mask[m]) t.push_back(b.modes[m]);
        }
        auto it = std::find_if(labels.begin(), labels.end(), [&](const std::vector<Complex>& l) {
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (std::abs(l[i] - k[i]) >= kMergeTolerance) return false;
            }
            return true;
        });
        label_of.push_back(static_cast<std::size_t>(it - labels.begin()));
        if (it == labels.end()) labels.push_back(std::move(k));
        traced.push_back(std::move(t));
    }

    const auto nl = static_cast<Eigen::Index>(labels.size());
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Zero(nl, nl);
    const auto& br = c.branches();
    for (std::size_t i = 0; i < br.size(); ++i) {
        for (std::size_t j = 0; j < br.size(); ++j) {
            const Complex env = std::exp(log_overlap(traced[j], traced[i]));
            coeffs(static_cast<Eigen::Index>(label_of[i]), static_cast<Eigen::Index>(label_of[j])) +=
                br[i].coeff * std::conj(br[j].coeff) * env;
        }
    }
    Eigen::MatrixXcd g(nl, nl);
    for (Eigen::Index k = 0; k < nl; ++k) {
        for (Eigen::Index l = 0; l < nl; ++l) g(k, l) = std::exp(log_overlap(labels[k], labels[l]));
    }

    ReducedState out;
    out.eigenvalues = generalized_spectrum(coeffs, g);
    out.labels = std::move(labels);
    out.coefficients = std::move(coeffs);
    out.gram = GramMatrix{std::move(g)};
    return out;
}

fock::SpaceLayout default_layout(const CoherentSuperposition& s) {
    const std::size_t n = fock::required_truncation(s.max_amplitude());
    return fock::SpaceLayout::atoms_and_modes(s.atoms_present() ? 2 : 0, s.mode_count(), n);
}

fock::FockVector to_fock(const CoherentSuperposition& s, const fock::SpaceLayout& layout) {
    const std::size_t atom_factors = s.atoms_present() ? 2 : 0;
    if (layout.size() != atom_factors + s.mode_count()) {
        throw ShapeError("to_fock: layout has " + std::to_string(layout.size()) + " factors, state needs " +
                         std::to_string(atom_factors + s.mode_count()));
    }
    for (std::size_t f = 0; f < layout.size(); ++f) {
        const auto want = f < atom_factors ? fock::FactorKind::Qubit : fock::FactorKind::Mode;
        if (layout[f].kind != want) throw ShapeError("to_fock: factor kinds do not match (atoms first, then modes)");
    }
    const double amax = s.max_amplitude();
    for (std::size_t f = atom_factors; f < layout.size(); ++f) fock::check_truncation(amax, layout[f].dim);

    Eigen::VectorXcd total = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.dimension()));
    double correction = 0.0;
    for (const Branch& b : s.branches()) {
        fock::FockVector v(fock::SpaceLayout{}, Eigen::VectorXcd::Ones(1));
        for (std::size_t a = 0; a < atom_factors; ++a) {
            const std::size_t idx = static_cast<std::size_t>(b.atoms[a]);
            v = fock::tensor(v, fock::basis_state(layout.select(std::span<const std::size_t>(&a, 1)),
                                                  std::span<const std::size_t>(&idx, 1)));
        }
        for (std::size_t m = 0; m < s.mode_count(); ++m) {
            v = fock::tensor(v, fock::coherent_fock(b.modes[m], layout[atom_factors + m].dim));
        }
        total += b.coeff * v.amplitudes();
        correction = std::max(correction, v.truncation_correction());
    }
    return fock::FockVector(layout, std::move(total)).with_truncation_correction(correction);
}

}  // namespace ctecs
