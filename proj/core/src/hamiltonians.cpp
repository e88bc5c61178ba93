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

#include "ctecs/hamiltonians.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ctecs/errors.hpp"

namespace ctecs {

namespace {

using fock::OperatorMatrix;
using fock::SpaceLayout;

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return k;
}

Eigen::MatrixXcd two_atom_sum(const Eigen::MatrixXcd& single) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    return kron(single, id) + kron(id, single);
}

SpaceLayout two_atoms() { return SpaceLayout({fock::Factor::qubit(), fock::Factor::qubit()}); }

}  // namespace

double DispersiveParams::pass_time() const {
    const double l = lam();
    if (!(l > 0.0)) throw ShapeError("dispersive coupling lambda must be positive");
    return kPi / (2.0 * l);
}

std::vector<std::string> DispersiveParams::warnings() const {
    std::vector<std::string> w;
    if (!regime_ok()) {
        std::ostringstream os;
        os << "dispersive regime marginal: Delta/g = " << delta_big / g << " < " << kRatioMin;
        w.push_back(os.str());
    }
    return w;
}

double CpgParams::gate_time() const {
    const double c = chi();
    if (!(c > 0.0)) throw ShapeError("chi must be positive");
    return kPi / c;
}

CpgParams CpgParams::self_consistent(double g_prime, int k, CollectiveSpin spin) {
    return with_detuning(g_prime, g_prime, k, spin);
}

CpgParams CpgParams::with_detuning(double g_prime, double delta_small, int k, CollectiveSpin spin) {
    CpgParams p;
    p.g_prime = g_prime;
    p.delta_small = delta_small;
    p.k = k;
    p.spin = spin;
    p.omega_drive = (2.0 * k + 0.5) * p.chi();
    return p;
}

bool CpgParams::timing_consistent(double tol) const {
    if (k < 1 || !(chi() > 0.0)) return false;
    return std::abs(omega_drive - (2.0 * k + 0.5) * chi()) <= tol * chi();
}

bool CpgParams::strong_driving() const {
    return omega_drive / g_prime >= kRatioMin && omega_drive / std::abs(delta_small) >= kRatioMin;
}

std::vector<std::string> CpgParams::warnings() const {
    std::vector<std::string> w;
    if (!strong_driving()) {
        std::ostringstream os;
        os << "strong-driving regime marginal: Omega/g' = " << omega_drive / g_prime
           << ", Omega/delta = " << omega_drive / std::abs(delta_small) << " (want >= " << kRatioMin << ")";
        w.push_back(os.str());
    }
    if (std::abs(delta_small * gate_time() - 2.0 * kPi) > 1e-9) {
        std::ostringstream os;
        os << "delta t_f = " << delta_small * gate_time() << " differs from 2 pi; photon-number dependent "
           << "Stark shifts do not cancel";
        w.push_back(os.str());
    }
    return w;
}

OperatorMatrix dispersive_h(const DispersiveParams& p, std::size_t n_trunc) {
    const SpaceLayout layout({fock::Factor::qubit(), fock::Factor::mode(n_trunc)});
    const Eigen::MatrixXcd sz = fock::sigma_z().entries();
    const Eigen::MatrixXcd see = (fock::sigma_plus() * fock::sigma_minus()).entries();
    const Eigen::MatrixXcd n = fock::number(n_trunc).entries();
    const auto id = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n_trunc), static_cast<Eigen::Index>(n_trunc));
    return OperatorMatrix(layout, p.lam() * (kron(sz, n) + kron(see, id)));
}

OperatorMatrix collective_x(CollectiveSpin spin) {
    const double scale = spin == CollectiveSpin::HalfSpin ? 0.5 : 1.0;
    return OperatorMatrix(two_atoms(), scale * two_atom_sum(fock::sigma_x().entries()));
}

OperatorMatrix effective_cpg_h(const CpgParams& p) {
    if (!p.timing_consistent(1e-9)) {
        std::ostringstream os;
        os << "inconsistent gate parameters: Omega = " << p.omega_drive << ", (2k+1/2) chi = "
           << (2.0 * p.k + 0.5) * p.chi() << " with k = " << p.k;
        throw ShapeError(os.str());
    }
    const OperatorMatrix x = collective_x(p.spin);
    return Complex(p.omega_drive) * x + Complex(0.5 * p.chi()) * (x * x);
}

OperatorMatrix cpg_propagator(const CpgParams& p) { return fock::propagator(effective_cpg_h(p), p.gate_time()); }

Eigen::MatrixXcd remove_global_phase(const Eigen::MatrixXcd& u) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            if (std::abs(u(i, j)) > 1e-12) {
                return u * std::polar(1.0, -std::arg(u(i, j)));
            }
        }
    }
    return u;
}

DrivenCavityHamiltonian::DrivenCavityHamiltonian(CpgParams params, std::size_t n_trunc, Frame frame,
                                                 double omega_atom)
    : params_(params),
      frame_(frame),
      omega_atom_(omega_atom),
      layout_({fock::Factor::qubit(), fock::Factor::qubit(), fock::Factor::mode(n_trunc)}) {
    a_ = fock::annihilation(n_trunc).entries();
    ad_ = a_.adjoint();
    n_ = ad_ * a_;
    sx_ = two_atom_sum(fock::sigma_x().entries());
    sz_ = two_atom_sum(fock::sigma_z().entries());
    sp_ = two_atom_sum(fock::sigma_plus().entries());
    sm_ = two_atom_sum(fock::sigma_minus().entries());
    x_ = collective_x(params_.spin).entries();
}

OperatorMatrix DrivenCavityHamiltonian::at(double t) const {
    const auto nm = a_.rows();
    const Eigen::MatrixXcd id_mode = Eigen::MatrixXcd::Identity(nm, nm);
    const Eigen::MatrixXcd id_atoms = Eigen::MatrixXcd::Identity(4, 4);
    const double gp = params_.g_prime;
    if (frame_ == Frame::Interaction) {
        const Complex ph = std::exp(Complex(0, params_.delta_small * t));
        const Eigen::MatrixXcd field = a_ * ph + ad_ * std::conj(ph);
        return OperatorMatrix(layout_, 0.5 * gp * kron(x_, field));
    }
    const double w = omega_atom_;
    const double w0 = w - params_.delta_small;
    const Complex drive = std::exp(Complex(0, -w * t));
    Eigen::MatrixXcd h = w0 * kron(id_atoms, n_) + 0.5 * w * kron(sz_, id_mode);
    h += gp * (kron(sp_, a_) + kron(sm_, ad_));
    h += params_.omega_drive * (kron(sp_ * drive + sm_ * std::conj(drive), id_mode));
    return OperatorMatrix(layout_, std::move(h));
}

OperatorMatrix driven_tc_h(const CpgParams& p, std::size_t n_trunc, Frame frame, double t, double omega_atom) {
    return DrivenCavityHamiltonian(p, n_trunc, frame, omega_atom).at(t);
}

DispersiveValidation validate_dispersive_approx(double g, double delta_big, Complex alpha, std::size_t n_trunc,
                                                bool superposed_atom) {
    if (g != 0.0 && delta_big / g < 2.0) throw ShapeError("validate_dispersive_approx requires Delta/g >= 2");
    fock::check_truncation(std::abs(alpha), n_trunc);

    DispersiveParams p{g, delta_big};
    DispersiveValidation out;
    out.g = g;
    out.delta_big = delta_big;
    out.lam = p.lam();
    out.time = g == 0.0 ? 1.0 : p.pass_time();

    const SpaceLayout atom({fock::Factor::qubit()});
    Eigen::Vector2cd a0(1.0, superposed_atom ? 1.0 : 0.0);
    a0.normalize();
    const fock::FockVector psi0 = fock::tensor(fock::FockVector(atom, a0), fock::coherent_fock(alpha, n_trunc));

    const Eigen::MatrixXcd see = (fock::sigma_plus() * fock::sigma_minus()).entries();
    const auto nm = static_cast<Eigen::Index>(n_trunc);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(nm, nm);
    const Eigen::MatrixXcd a = fock::annihilation(n_trunc).entries();
    const SpaceLayout layout = psi0.layout();

    const OperatorMatrix bare(layout, delta_big * kron(see, id));
    const OperatorMatrix full =
        bare + OperatorMatrix(layout, g * (kron(fock::sigma_plus().entries(), a) +
                                           kron(fock::sigma_minus().entries(), a.adjoint())));
    const OperatorMatrix effective = bare + dispersive_h(p, n_trunc);

    out.fidelity = fock::fidelity(fock::evolve(psi0, full, out.time), fock::evolve(psi0, effective, out.time));
    return out;
}

}  // namespace ctecs
