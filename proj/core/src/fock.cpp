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

#include "ctecs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctecs/errors.hpp"

namespace ctecs::fock {

namespace {

void require_same_layout(const SpaceLayout& a, const SpaceLayout& b, const char* what) {
    if (!(a == b)) {
        throw ShapeError(std::string(what) + ": layouts differ");
    }
}

/// Flattened offsets of every local multi-index (selected factors, in the
/// order given) and of every multi-index over the remaining factors.
struct TensorSplit {
    std::vector<std::size_t> local;
    std::vector<std::size_t> rest;
};

TensorSplit split_offsets(const SpaceLayout& layout, std::span<const std::size_t> factors) {
    std::vector<bool> selected(layout.size(), false);
    for (std::size_t f : factors) {
        if (f >= layout.size()) {
            throw ShapeError("factor index " + std::to_string(f) + " out of range");
        }
        if (selected[f]) {
            throw ShapeError("factor index " + std::to_string(f) + " repeated");
        }
        selected[f] = true;
    }

    auto enumerate = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> offsets{0};
        for (std::size_t f : idx) {
            std::vector<std::size_t> next;
            next.reserve(offsets.size() * layout.dim(f));
            for (std::size_t base : offsets) {
                for (std::size_t k = 0; k < layout.dim(f); ++k) {
                    next.push_back(base + k * layout.stride(f));
                }
            }
            offsets = std::move(next);
        }
        return offsets;
    };

    std::vector<std::size_t> rest_idx;
    for (std::size_t f = 0; f < layout.size(); ++f) {
        if (!selected[f]) rest_idx.push_back(f);
    }
    return {enumerate({factors.begin(), factors.end()}), enumerate(rest_idx)};
}

double log_poisson(double mean, std::size_t k) {
    if (mean == 0.0) return k == 0 ? 0.0 : -INFINITY;
    return -mean + static_cast<double>(k) * std::log(mean) - std::lgamma(static_cast<double>(k) + 1.0);
}

double poisson_tail(double mean, std::size_t n) {
    double tail = 0.0;
    for (std::size_t k = n;; ++k) {
        const double term = std::exp(log_poisson(mean, k));
        tail += term;
        if (static_cast<double>(k) > mean && term < 1e-30) break;
    }
    return tail;
}

}  // namespace

std::size_t SpaceLayout::dim(std::size_t i) const { return factors_.at(i).dim; }

Factor Factor::mode(std::size_t n_trunc) {
    if (n_trunc == 0) throw ShapeError("mode truncation must be >= 1");
    return {FactorKind::Mode, n_trunc};
}

SpaceLayout::SpaceLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    strides_.assign(factors_.size(), 1);
    dimension_ = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        if (factors_[i].dim == 0) throw ShapeError("factor dimension must be positive");
        strides_[i] = dimension_;
        dimension_ *= factors_[i].dim;
    }
}

SpaceLayout SpaceLayout::atoms_and_modes(std::size_t atoms, std::size_t modes, std::size_t n_trunc) {
    std::vector<Factor> f(atoms, Factor::qubit());
    for (std::size_t m = 0; m < modes; ++m) f.push_back(Factor::mode(n_trunc));
    return SpaceLayout(std::move(f));
}

SpaceLayout SpaceLayout::select(std::span<const std::size_t> indices) const {
    std::vector<Factor> f;
    f.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= factors_.size()) throw ShapeError("factor index out of range");
        f.push_back(factors_[i]);
    }
    return SpaceLayout(std::move(f));
}

std::size_t required_truncation(double abs_alpha) {
    const double mean = abs_alpha * abs_alpha;
    auto n = static_cast<std::size_t>(std::ceil(mean + 6.0 * abs_alpha + 10.0));
    while (poisson_tail(mean, n) > kTailTolerance) ++n;
    return n;
}

void check_truncation(double abs_alpha, std::size_t n_trunc) {
    const std::size_t req = required_truncation(abs_alpha);
    if (n_trunc < req) throw TruncationError(abs_alpha, n_trunc, req);
}

FockVector::FockVector(SpaceLayout layout, Eigen::VectorXcd amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != layout_.dimension()) {
        throw ShapeError("amplitude count " + std::to_string(amplitudes_.size()) +
                         " does not match layout dimension " + std::to_string(layout_.dimension()));
    }
}

FockVector FockVector::normalized() const {
    const double n = norm();
    if (n * n < 1e-20) throw NearNullStateError("cannot normalize a near-null Fock vector");
    FockVector out(layout_, amplitudes_ / n);
    out.truncation_correction_ = truncation_correction_;
    return out;
}

FockVector FockVector::with_truncation_correction(double c) const {
    FockVector out = *this;
    out.truncation_correction_ = c;
    return out;
}

FockVector basis_state(const SpaceLayout& layout, std::span<const std::size_t> indices) {
    if (indices.size() != layout.size()) throw ShapeError("basis_state: index count mismatch");
    std::size_t offset = 0;
    for (std::size_t f = 0; f < layout.size(); ++f) {
        if (indices[f] >= layout.dim(f)) throw ShapeError("basis_state: index out of range");
        offset += indices[f] * layout.stride(f);
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.dimension()));
    v[static_cast<Eigen::Index>(offset)] = 1.0;
    return FockVector(layout, std::move(v));
}

FockVector tensor(const FockVector& a, const FockVector& b) {
    std::vector<Factor> f = a.layout().factors();
    f.insert(f.end(), b.layout().factors().begin(), b.layout().factors().end());
    const auto& va = a.amplitudes();
    const auto& vb = b.amplitudes();
    Eigen::VectorXcd v(va.size() * vb.size());
    for (Eigen::Index i = 0; i < va.size(); ++i) {
        v.segment(i * vb.size(), vb.size()) = va[i] * vb;
    }
    return FockVector(SpaceLayout(std::move(f)), std::move(v))
        .with_truncation_correction(a.truncation_correction() + b.truncation_correction());
}

Complex inner(const FockVector& a, const FockVector& b) {
    require_same_layout(a.layout(), b.layout(), "inner");
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const FockVector& a, const FockVector& b) {
    const double na = a.amplitudes().squaredNorm();
    const double nb = b.amplitudes().squaredNorm();
    // Long sums can push the ratio a few ulps per element past 1.
    return std::min(1.0, std::norm(inner(a, b)) / (na * nb));
}

OperatorMatrix::OperatorMatrix(SpaceLayout layout, Eigen::MatrixXcd entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
    const auto d = static_cast<Eigen::Index>(layout_.dimension());
    if (entries_.rows() != d || entries_.cols() != d) {
        throw ShapeError("operator entries are " + std::to_string(entries_.rows()) + "x" +
                         std::to_string(entries_.cols()) + ", layout dimension is " + std::to_string(d));
    }
}

OperatorMatrix OperatorMatrix::identity(const SpaceLayout& layout) {
    const auto d = static_cast<Eigen::Index>(layout.dimension());
    return OperatorMatrix(layout, Eigen::MatrixXcd::Identity(d, d));
}

double OperatorMatrix::hermiticity_error() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double OperatorMatrix::unitarity_error() const {
    const auto d = entries_.rows();
    return (entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(layout_, entries_.adjoint()); }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_layout(a.layout_, b.layout_, "operator product");
    return OperatorMatrix(a.layout_, a.entries_ * b.entries_);
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_layout(a.layout_, b.layout_, "operator sum");
    return OperatorMatrix(a.layout_, a.entries_ + b.entries_);
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_layout(a.layout_, b.layout_, "operator difference");
    return OperatorMatrix(a.layout_, a.entries_ - b.entries_);
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return OperatorMatrix(a.layout_, s * a.entries_); }

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    std::vector<Factor> f = a.layout().factors();
    f.insert(f.end(), b.layout().factors().begin(), b.layout().factors().end());
    const auto& A = a.entries();
    const auto& B = b.entries();
    Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        }
    }
    return OperatorMatrix(SpaceLayout(std::move(f)), std::move(K));
}

FockVector apply(const OperatorMatrix& op, const FockVector& state) {
    require_same_layout(op.layout(), state.layout(), "apply");
    return FockVector(state.layout(), op.entries() * state.amplitudes());
}

OperatorMatrix annihilation(std::size_t n_trunc) {
    SpaceLayout l({Factor::mode(n_trunc)});
    const auto n = static_cast<Eigen::Index>(n_trunc);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
    return OperatorMatrix(std::move(l), std::move(m));
}

OperatorMatrix creation(std::size_t n_trunc) { return annihilation(n_trunc).adjoint(); }

OperatorMatrix number(std::size_t n_trunc) {
    const auto n = static_cast<Eigen::Index>(n_trunc);
    Eigen::VectorXcd d(n);
    for (Eigen::Index k = 0; k < n; ++k) d[k] = static_cast<double>(k);
    return OperatorMatrix(SpaceLayout({Factor::mode(n_trunc)}), d.asDiagonal().toDenseMatrix());
}

OperatorMatrix parity_op(std::size_t n_trunc) {
    const auto n = static_cast<Eigen::Index>(n_trunc);
    Eigen::VectorXcd d(n);
    for (Eigen::Index k = 0; k < n; ++k) d[k] = (k % 2 == 0) ? 1.0 : -1.0;
    return OperatorMatrix(SpaceLayout({Factor::mode(n_trunc)}), d.asDiagonal().toDenseMatrix());
}

namespace {
OperatorMatrix qubit_op(Complex a00, Complex a01, Complex a10, Complex a11) {
    Eigen::Matrix2cd m;
    m << a00, a01, a10, a11;
    return OperatorMatrix(SpaceLayout({Factor::qubit()}), m);
}
}  // namespace

OperatorMatrix sigma_plus() { return qubit_op(0, 0, 1, 0); }
OperatorMatrix sigma_minus() { return qubit_op(0, 1, 0, 0); }
OperatorMatrix sigma_z() { return qubit_op(-1, 0, 0, 1); }
OperatorMatrix sigma_x() { return qubit_op(0, 1, 1, 0); }

FockVector coherent_fock(Complex alpha, std::size_t n_trunc) {
    check_truncation(std::abs(alpha), n_trunc);
    const auto n = static_cast<Eigen::Index>(n_trunc);
    Eigen::VectorXcd c(n);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (Eigen::Index k = 1; k < n; ++k) c[k] = c[k - 1] * alpha / std::sqrt(static_cast<double>(k));
    const double captured = c.squaredNorm();
    c /= std::sqrt(captured);
    return FockVector(SpaceLayout({Factor::mode(n_trunc)}), std::move(c))
        .with_truncation_correction(std::max(0.0, 1.0 - captured));
}

OperatorMatrix displacement_op(Complex alpha, std::size_t n_trunc) {
    check_truncation(std::abs(alpha), n_trunc);
    const OperatorMatrix a = annihilation(n_trunc);
    const OperatorMatrix ad = creation(n_trunc);
    // D = exp(G) with G = a ad - a* a anti-Hermitian; i G is Hermitian and D = exp(-i (i G)).
    const OperatorMatrix generator = (Complex(0, 1) * alpha) * ad - (Complex(0, 1) * std::conj(alpha)) * a;
    return propagator(generator, 1.0);
}

OperatorMatrix embed(const OperatorMatrix& op, std::size_t position, const SpaceLayout& layout) {
    if (position >= layout.size()) throw ShapeError("embed: position out of range");
    if (!(op.layout() == layout.select(std::span<const std::size_t>(&position, 1)))) {
        throw ShapeError("embed: operator does not match factor " + std::to_string(position));
    }
    if (layout.dimension() > kMaxDenseDimension) {
        throw ShapeError("embed: layout dimension " + std::to_string(layout.dimension()) +
                         " exceeds dense limit; use apply_on");
    }
    OperatorMatrix out(SpaceLayout{}, Eigen::MatrixXcd::Identity(1, 1));
    for (std::size_t f = 0; f < layout.size(); ++f) {
        const OperatorMatrix piece = (f == position) ? op : OperatorMatrix::identity(layout.select(std::span<const std::size_t>(&f, 1)));
        out = kron(out, piece);
    }
    return out;
}

FockVector apply_on(const FockVector& state, const OperatorMatrix& op, std::span<const std::size_t> factors) {
    const SpaceLayout& layout = state.layout();
    if (!(op.layout() == layout.select(factors))) {
        throw ShapeError("apply_on: operator layout does not match the selected factors");
    }
    const TensorSplit split = split_offsets(layout, factors);
    const auto n_local = static_cast<Eigen::Index>(split.local.size());
    const auto n_rest = static_cast<Eigen::Index>(split.rest.size());
    const auto& psi = state.amplitudes();

    Eigen::MatrixXcd gathered(n_local, n_rest);
    for (Eigen::Index r = 0; r < n_rest; ++r) {
        for (Eigen::Index j = 0; j < n_local; ++j) {
            gathered(j, r) = psi[static_cast<Eigen::Index>(split.rest[r] + split.local[j])];
        }
    }
    const Eigen::MatrixXcd result = op.entries() * gathered;
    Eigen::VectorXcd out(psi.size());
    for (Eigen::Index r = 0; r < n_rest; ++r) {
        for (Eigen::Index j = 0; j < n_local; ++j) {
            out[static_cast<Eigen::Index>(split.rest[r] + split.local[j])] = result(j, r);
        }
    }
    return FockVector(layout, std::move(out)).with_truncation_correction(state.truncation_correction());
}

OperatorMatrix propagator(const OperatorMatrix& h, double t) {
    const double scale = std::max(1.0, h.entries().cwiseAbs().maxCoeff());
    if (h.hermiticity_error() > 1e-12 * scale) {
        throw ShapeError("propagator: generator is not Hermitian");
    }
    const Eigen::MatrixXcd herm = 0.5 * (h.entries() + h.entries().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    if (es.info() != Eigen::Success) throw InvariantError("propagator: eigendecomposition failed");
    const Eigen::VectorXd& w = es.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) phases[k] = std::exp(Complex(0, -w[k] * t));
    const Eigen::MatrixXcd& v = es.eigenvectors();
    return OperatorMatrix(h.layout(), v * phases.asDiagonal() * v.adjoint());
}

FockVector evolve(const FockVector& state, const OperatorMatrix& h, double t) {
    require_same_layout(state.layout(), h.layout(), "evolve");
    if (t == 0.0) return state;
    return apply(propagator(h, t), state);
}

FockVector evolve_on(const FockVector& state, const OperatorMatrix& h, std::span<const std::size_t> factors,
                     double t) {
    if (t == 0.0) return state;
    return apply_on(state, propagator(h, t), factors);
}

OperatorMatrix partial_trace(const FockVector& state, std::span<const std::size_t> keep) {
    if (keep.empty()) throw ShapeError("partial_trace: keep set is empty");
    const TensorSplit split = split_offsets(state.layout(), keep);
    const auto n_keep = static_cast<Eigen::Index>(split.local.size());
    const auto n_rest = static_cast<Eigen::Index>(split.rest.size());
    const auto& psi = state.amplitudes();
    Eigen::MatrixXcd a(n_keep, n_rest);
    for (Eigen::Index r = 0; r < n_rest; ++r) {
        for (Eigen::Index j = 0; j < n_keep; ++j) {
            a(j, r) = psi[static_cast<Eigen::Index>(split.rest[r] + split.local[j])];
        }
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    return OperatorMatrix(state.layout().select(keep), std::move(rho));
}

Complex expectation_on(const FockVector& state, const OperatorMatrix& op, std::span<const std::size_t> factors) {
    const FockVector out = apply_on(state, op, factors);
    return state.amplitudes().dot(out.amplitudes());
}

}  // namespace ctecs::fock
