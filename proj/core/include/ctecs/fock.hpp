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

// Truncated Fock-space linear algebra: tensor-product layouts of two-level
// atoms and truncated bosonic modes, dense states and operators, propagators
// and partial traces.
//
// States over the full protocol space can hold millions of amplitudes, so
// operators are kept local: a k-factor operator is applied to a state by
// contracting it against the selected tensor legs (apply_on / evolve_on).
// Full-space operators are only materialized on request (embed) and are
// size-guarded.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ctecs {

using Complex = std::complex<double>;

namespace fock {

enum class FactorKind { Qubit, Mode };

struct Factor {
    FactorKind kind = FactorKind::Qubit;
    std::size_t dim = 2;

    static Factor qubit() { return {FactorKind::Qubit, 2}; }
    static Factor mode(std::size_t n_trunc);

    bool operator==(const Factor&) const = default;
};

/// Ordered tensor-product structure. The first factor is the most
/// significant index of the flattened amplitude array.
class SpaceLayout {
   public:
    SpaceLayout() = default;
    explicit SpaceLayout(std::vector<Factor> factors);

    /// (atom 1, ..., atom A, mode 1, ..., mode M), all modes sharing n_trunc.
    static SpaceLayout atoms_and_modes(std::size_t atoms, std::size_t modes, std::size_t n_trunc);

    std::size_t size() const noexcept { return factors_.size(); }
    const Factor& operator[](std::size_t i) const { return factors_.at(i); }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t dim(std::size_t i) const;
    /// Flattened-index stride of factor i.
    std::size_t stride(std::size_t i) const { return strides_.at(i); }

    /// Sub-layout made of the given factors, in the given order.
    SpaceLayout select(std::span<const std::size_t> indices) const;

    bool operator==(const SpaceLayout& o) const { return factors_ == o.factors_; }

   private:
    std::vector<Factor> factors_;
    std::vector<std::size_t> strides_;
    std::size_t dimension_ = 1;
};

/// Smallest per-mode truncation accepted for coherent amplitudes up to
/// |alpha|: at least ceil(|a|^2 + 6|a| + 10), raised further until the
/// Poisson tail beyond the cutoff is <= kTailTolerance.
std::size_t required_truncation(double abs_alpha);
inline constexpr double kTailTolerance = 1e-12;

/// Throws TruncationError naming the required size when n_trunc is too small.
void check_truncation(double abs_alpha, std::size_t n_trunc);

class FockVector {
   public:
    FockVector(SpaceLayout layout, Eigen::VectorXcd amplitudes);

    const SpaceLayout& layout() const noexcept { return layout_; }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    double norm() const { return amplitudes_.norm(); }

    /// Probability mass discarded by truncation before renormalization
    /// (zero for vectors not built from a truncated series).
    double truncation_correction() const noexcept { return truncation_correction_; }

    FockVector normalized() const;
    FockVector with_truncation_correction(double c) const;

   private:
    SpaceLayout layout_;
    Eigen::VectorXcd amplitudes_;
    double truncation_correction_ = 0.0;
};

/// Basis vector |i_0, i_1, ...> of a layout.
FockVector basis_state(const SpaceLayout& layout, std::span<const std::size_t> indices);
/// Kronecker product; the result's layout is a's factors followed by b's.
FockVector tensor(const FockVector& a, const FockVector& b);

Complex inner(const FockVector& a, const FockVector& b);
/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const FockVector& a, const FockVector& b);

class OperatorMatrix {
   public:
    OperatorMatrix(SpaceLayout layout, Eigen::MatrixXcd entries);

    static OperatorMatrix identity(const SpaceLayout& layout);

    const SpaceLayout& layout() const noexcept { return layout_; }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    std::size_t dimension() const noexcept { return layout_.dimension(); }

    /// max |M - M^dag| entry.
    double hermiticity_error() const;
    /// max |M^dag M - 1| entry.
    double unitarity_error() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_error() <= tol; }
    bool is_unitary(double tol = 1e-10) const { return unitarity_error() <= tol; }

    OperatorMatrix adjoint() const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

   private:
    SpaceLayout layout_;
    Eigen::MatrixXcd entries_;
};

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);
FockVector apply(const OperatorMatrix& op, const FockVector& state);

// Single-factor builders. Qubit basis order is (g, e) == (|0>, |1>).
OperatorMatrix annihilation(std::size_t n_trunc);
OperatorMatrix creation(std::size_t n_trunc);
OperatorMatrix number(std::size_t n_trunc);
OperatorMatrix parity_op(std::size_t n_trunc);
OperatorMatrix sigma_plus();   // |e><g|
OperatorMatrix sigma_minus();  // |g><e|
OperatorMatrix sigma_z();      // |e><e| - |g><g|
OperatorMatrix sigma_x();

/// Truncated coherent state e^{-|a|^2/2} a^n / sqrt(n!), renormalized; the
/// discarded weight is kept in truncation_correction().
FockVector coherent_fock(Complex alpha, std::size_t n_trunc);

/// exp(a a^dag - a* a) on the truncated mode.
OperatorMatrix displacement_op(Complex alpha, std::size_t n_trunc);

/// Places a single-factor operator at `position`, identity elsewhere.
/// Materializes the full matrix; refuses layouts above kMaxDenseDimension.
OperatorMatrix embed(const OperatorMatrix& op, std::size_t position, const SpaceLayout& layout);
inline constexpr std::size_t kMaxDenseDimension = 4096;

/// Applies a local operator whose layout equals layout.select(factors).
FockVector apply_on(const FockVector& state, const OperatorMatrix& op,
                    std::span<const std::size_t> factors);

/// exp(-i h t) for Hermitian h (throws ShapeError otherwise), by
/// eigendecomposition.
OperatorMatrix propagator(const OperatorMatrix& h, double t);

FockVector evolve(const FockVector& state, const OperatorMatrix& h, double t);
FockVector evolve_on(const FockVector& state, const OperatorMatrix& h,
                     std::span<const std::size_t> factors, double t);

/// Reduced density matrix over `keep` (ordered as given).
OperatorMatrix partial_trace(const FockVector& state, std::span<const std::size_t> keep);

/// Expectation value <psi|op|psi> for a local op.
Complex expectation_on(const FockVector& state, const OperatorMatrix& op,
                       std::span<const std::size_t> factors);

}  // namespace fock
}  // namespace ctecs
