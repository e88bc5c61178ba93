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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ctecs/coherent.hpp"
#include "ctecs/errors.hpp"
#include "ctecs/states.hpp"
#include "test_util.hpp"

namespace ctecs {
namespace {

using testing::Cd;
using testing::Gen;

CoherentSuperposition single(Cd mu) { return CoherentSuperposition::product({mu}); }

TEST(Overlap, SingleModeValues) {
    EXPECT_NEAR(std::abs(overlap(single(1.3), single(1.3)) - 1.0), 0.0, 1e-15);
    const Cd o = overlap(single(3.0), single(-3.0));
    EXPECT_NEAR(o.real(), std::exp(-18.0), 1e-22);
    EXPECT_NEAR(o.imag(), 0.0, 1e-22);
    EXPECT_NEAR(std::exp(-18.0), 1.523e-8, 1e-11);
}

TEST(Overlap, ClosedFormPhase) {
    // <mu|nu> = exp(-|mu|^2/2 - |nu|^2/2 + conj(mu) nu), checked against series sums.
    Gen gen(101);
    for (int i = 0; i < 50; ++i) {
        const Cd mu = gen.complex_in_disk(2.0), nu = gen.complex_in_disk(2.0);
        const Eigen::VectorXcd a = testing::coherent_series(mu, 80), b = testing::coherent_series(nu, 80);
        EXPECT_LT(std::abs(coherent_overlap(mu, nu) - a.dot(b)), 1e-13);
    }
}

TEST(Overlap, QuasiBellPairsByHand) {
    const double a = 1.0;
    const double np = 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-4.0 * a * a)));
    const CoherentSuperposition phip = quasi_bell({BellFamily::Phi, Sign::Plus}, a);
    const CoherentSuperposition phim = quasi_bell({BellFamily::Phi, Sign::Minus}, a);
    const CoherentSuperposition psip = quasi_bell({BellFamily::Psi, Sign::Plus}, a);
    // <aa|aa> - <aa|-a-a> + <-a-a|aa> - <-a-a|-a-a> cancels pairwise for real a.
    EXPECT_LT(std::abs(overlap(phip, phim)), 1e-15);
    // Every cross term of <PHI+|PSI+> is a product of one <a|a> and one <a|-a> type factor: 4 e^{-2a^2}.
    EXPECT_NEAR(std::abs(overlap(phip, psip)), 4.0 * np * np * std::exp(-2.0 * a * a), 1e-14);
}

TEST(Overlap, AgreesWithDenseExpansion) {
    Gen gen(102);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t modes = static_cast<std::size_t>(gen.integer(1, 3));
        const CoherentSuperposition a = gen.superposition(modes, static_cast<std::size_t>(gen.integer(1, 4)), 2.0);
        const CoherentSuperposition b = gen.superposition(modes, static_cast<std::size_t>(gen.integer(1, 4)), 2.0);
        const std::size_t n = fock::required_truncation(2.0);
        const Eigen::VectorXcd da = testing::dense_superposition(a, n), db = testing::dense_superposition(b, n);
        EXPECT_LT(std::abs(overlap(a, b) - da.dot(db)), 1e-8 * std::max(1.0, std::abs(overlap(a, b))));
    }
}

TEST(Overlap, ShapeMismatch) {
    EXPECT_THROW(overlap(single(1.0), CoherentSuperposition::product({1.0, 1.0})), ShapeError);
    EXPECT_THROW(overlap(single(1.0), CoherentSuperposition::product({Atom::g, Atom::g}, {1.0})), ShapeError);
}

TEST(Normalize, MergesDuplicates) {
    const CoherentSuperposition s(1, false, {Branch{1.0, {}, {0.7}}, Branch{1.0, {}, {0.7}}});
    const CoherentSuperposition n = normalize(canonicalize(s));
    ASSERT_EQ(n.size(), 1u);
    EXPECT_NEAR(std::abs(n.branches()[0].coeff - 1.0), 0.0, 1e-15);
}

TEST(Normalize, QuasiBellConstant) {
    for (double a : {0.25, 0.5, 1.0, 2.0}) {
        const CoherentSuperposition raw(2, false, {Branch{1.0, {}, {a, a}}, Branch{1.0, {}, {-a, -a}}});
        const double np = std::pow(2.0 * (1.0 + std::exp(-4.0 * a * a)), -0.5);
        EXPECT_NEAR(normalization_constant(raw), np, 1e-12);
        EXPECT_NEAR(norm_squared(normalize(raw)), 1.0, 1e-12);
    }
}

TEST(Normalize, NearNullRejected) {
    const CoherentSuperposition raw(2, false, {Branch{1.0, {}, {0.0, 0.0}}, Branch{-1.0, {}, {0.0, 0.0}}});
    EXPECT_THROW(normalize(raw), NearNullStateError);
    // Nearly cancelling but not exactly: survives canonicalization, then guarded.
    const CoherentSuperposition tiny(1, false, {Branch{1.0, {}, {1e-13}}, Branch{-1.0, {}, {0.0}}});
    EXPECT_THROW(normalize(tiny), NearNullStateError);
}

TEST(Parity, FlipsAndInvolution) {
    Gen gen(103);
    EXPECT_NEAR(std::abs(overlap(apply_parity(single(1.2), 0), single(-1.2)) - 1.0), 0.0, 1e-15);
    for (int trial = 0; trial < 20; ++trial) {
        const CoherentSuperposition s = gen.superposition(3, 3, 2.0);
        const std::size_t m = static_cast<std::size_t>(gen.integer(0, 2));
        const CoherentSuperposition f = apply_parity(s, m);
        EXPECT_NEAR(norm_squared(f), norm_squared(s), 1e-12 * norm_squared(s));
        EXPECT_NEAR(fidelity(apply_parity(f, m), s), 1.0, 1e-12);
    }
    EXPECT_THROW(apply_parity(single(1.0), 1), ShapeError);
}

TEST(Parity, FlipOfTwoModesMapsBetweenBasisElements) {
    // Flipping modes 3 and 4 of CLUSTER+ gives, up to sign, another element of the basis.
    const double a = 1.0;
    const CoherentSuperposition f =
        apply_parity(ctecs_basis_element({ClusterFamily::CLUSTER, Sign::Plus}, a), std::vector<std::size_t>{2, 3});
    int matches = 0;
    for (const CtecsLabel& l : all_ctecs_labels()) {
        if (std::abs(std::abs(overlap(f, ctecs_basis_element(l, a))) - 1.0) < 1e-12) ++matches;
    }
    EXPECT_EQ(matches, 1);
}

TEST(Dispersive, BranchRules) {
    const auto g = CoherentSuperposition::product({Atom::g, Atom::g}, {1.0});
    const auto out_g = dispersive_pass(g, 0, 0, M_PI / 2);
    EXPECT_LT(std::abs(out_g.branches()[0].modes[0] - Cd(0, 1)), 1e-15);
    EXPECT_LT(std::abs(out_g.branches()[0].coeff - 1.0), 1e-15);

    const auto e = CoherentSuperposition::product({Atom::e, Atom::g}, {1.0});
    const auto out_e = dispersive_pass(e, 0, 0, M_PI / 2);
    EXPECT_LT(std::abs(out_e.branches()[0].modes[0] - Cd(0, -1)), 1e-15);
    EXPECT_LT(std::abs(out_e.branches()[0].coeff - Cd(0, -1)), 1e-15);

    // The second atom label is the one that matters for atom index 1.
    const auto out_e2 = dispersive_pass(e, 1, 0, M_PI / 2);
    EXPECT_LT(std::abs(out_e2.branches()[0].modes[0] - Cd(0, 1)), 1e-15);

    const auto full = dispersive_pass(e, 0, 0, 2 * M_PI);
    EXPECT_LT(std::abs(full.branches()[0].modes[0] - 1.0), 1e-14);
    EXPECT_LT(std::abs(full.branches()[0].coeff - 1.0), 1e-14);

    EXPECT_THROW(dispersive_pass(single(1.0), 0, 0, 1.0), ShapeError);
}

TEST(Maps, PreserveNorm) {
    Gen gen(104);
    for (int trial = 0; trial < 30; ++trial) {
        const CoherentSuperposition s = gen.atom_superposition(2, 4, 1.5);
        const double n = norm_squared(s);
        EXPECT_NEAR(norm_squared(dispersive_pass(s, static_cast<std::size_t>(gen.integer(0, 1)),
                                                 static_cast<std::size_t>(gen.integer(0, 1)), gen.uniform(0, 7))),
                    n, 1e-12 * n);
        EXPECT_NEAR(norm_squared(apply_parity(s, 1)), n, 1e-12 * n);
        EXPECT_NEAR(norm_squared(apply_cpg(s)), n, 1e-12 * n);
    }
}

TEST(Cpg, TruthTableRows) {
    const auto out = apply_cpg(CoherentSuperposition::product({Atom::g, Atom::g}, {0.5}));
    ASSERT_EQ(out.size(), 4u);
    for (const Branch& b : out.branches()) {
        const Cd want = b.atoms == AtomPair{Atom::g, Atom::g} ? 0.5 : -0.5;
        EXPECT_LT(std::abs(b.coeff - want), 1e-15) << to_string(b.atoms);
    }
}

TEST(Cpg, HadamardBasisSigns) {
    auto plus_minus = [](int s1, int s2) {
        std::vector<Branch> bs;
        for (const AtomPair& ab : kAtomOutcomes) {
            double c = 0.5;
            if (ab[0] == Atom::e) c *= s1;
            if (ab[1] == Atom::e) c *= s2;
            bs.push_back({c, ab, {0.3}});
        }
        return CoherentSuperposition(1, true, bs);
    };
    const auto pp = plus_minus(1, 1), pm = plus_minus(1, -1), mp = plus_minus(-1, 1), mm = plus_minus(-1, -1);
    EXPECT_NEAR((overlap(pp, apply_cpg(pp)) - Cd(-1.0)).real(), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(overlap(pm, apply_cpg(pm)) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(overlap(mp, apply_cpg(mp)) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(overlap(mm, apply_cpg(mm)) - 1.0), 0.0, 1e-14);
    EXPECT_THROW(apply_cpg(single(1.0)), ShapeError);
}

TEST(Project, ProductAndImpossible) {
    const auto s = CoherentSuperposition::product({Atom::g, Atom::e}, {Cd(0.4, 0.1)});
    const Projection p = project_atoms(s, {Atom::g, Atom::e});
    EXPECT_NEAR(p.probability, 1.0, 1e-15);
    EXPECT_FALSE(p.state.atoms_present());
    EXPECT_NEAR(fidelity(p.state, single(Cd(0.4, 0.1))), 1.0, 1e-15);
    EXPECT_THROW(project_atoms(s, {Atom::e, Atom::e}), OutcomeImpossibleError);
    const auto probs = atom_outcome_probabilities(s);
    EXPECT_EQ(probs[atom_index({Atom::g, Atom::e})], 1.0);
    EXPECT_EQ(probs[0] + probs[2] + probs[3], 0.0);
}

TEST(Project, ProbabilitiesSumToOne) {
    Gen gen(105);
    for (int trial = 0; trial < 20; ++trial) {
        const CoherentSuperposition s = normalize(gen.atom_superposition(2, 5, 1.5));
        const auto probs = atom_outcome_probabilities(s);
        double total = 0.0;
        for (double p : probs) {
            EXPECT_GE(p, 0.0);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Reduce, ClusterSingleModeWeights) {
    for (double a : {0.5, 1.0, 2.0}) {
        const ReducedState r = reduce(ctecs_basis_element({ClusterFamily::CLUSTER, Sign::Plus}, a),
                                      std::vector<std::size_t>{0});
        ASSERT_EQ(r.labels.size(), 2u);
        const std::size_t ip = std::abs(r.labels[0][0] - Cd(a)) < 1e-12 ? 0 : 1;
        const std::size_t im = 1 - ip;
        const double e = std::exp(-4 * a * a);
        EXPECT_NEAR(r.coefficients(ip, ip).real(), 0.5 * (1 + e), 1e-12);
        EXPECT_NEAR(r.coefficients(im, im).real(), 0.5 * (1 - e), 1e-12);
        EXPECT_LT(std::abs(r.coefficients(ip, im)), 1e-12);
    }
}

TEST(Reduce, LimitsInAlpha) {
    const ReducedState zero = reduce(ctecs_basis_element({ClusterFamily::CLUSTER, Sign::Plus}, 0.0),
                                     std::vector<std::size_t>{0});
    ASSERT_GE(zero.eigenvalues.size(), 1u);
    EXPECT_NEAR(zero.eigenvalues[0], 1.0, 1e-12);
    for (std::size_t i = 1; i < zero.eigenvalues.size(); ++i) EXPECT_NEAR(zero.eigenvalues[i], 0.0, 1e-12);

    const ReducedState big = reduce(ctecs_basis_element({ClusterFamily::CLUSTER, Sign::Plus}, 3.0),
                                    std::vector<std::size_t>{0});
    ASSERT_EQ(big.eigenvalues.size(), 2u);
    EXPECT_NEAR(big.eigenvalues[0], 0.5, 2e-8);
    EXPECT_NEAR(big.eigenvalues[1], 0.5, 2e-8);
}

TEST(Reduce, MatchesDensePartialTrace) {
    Gen gen(106);
    for (int trial = 0; trial < 10; ++trial) {
        const CoherentSuperposition s = normalize(gen.superposition(3, static_cast<std::size_t>(gen.integer(2, 5)), 1.5));
        std::vector<std::size_t> keep{static_cast<std::size_t>(gen.integer(0, 2))};
        const ReducedState r = reduce(s, keep);

        const fock::FockVector dense = to_fock(s, default_layout(s));
        const fock::OperatorMatrix rho = fock::partial_trace(dense.normalized(), keep);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
        std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
        std::sort(ev.begin(), ev.end(), std::greater<>());
        double sum = 0.0;
        for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
            EXPECT_NEAR(r.eigenvalues[i], ev[i], 1e-8);
            EXPECT_GE(r.eigenvalues[i], -1e-10);
            sum += r.eigenvalues[i];
        }
        EXPECT_NEAR(sum, 1.0, 1e-10);
    }
}

TEST(Reduce, AtomsMustBeMeasuredFirst) {
    EXPECT_THROW(reduce(CoherentSuperposition::product({Atom::g, Atom::g}, {1.0, 1.0}), std::vector<std::size_t>{0}),
                 ShapeError);
}

TEST(Gram, PositiveSemidefinite) {
    Gen gen(107);
    for (int trial = 0; trial < 30; ++trial) {
        const CoherentSuperposition s = gen.superposition(2, static_cast<std::size_t>(gen.integer(1, 8)), 0.8);
        EXPECT_GE(gram_matrix(s).min_eigenvalue(), -1e-12);
    }
}

TEST(Gram, SpectrumRoutesAgree) {
    // Near-singular Gram (tiny alpha) uses the spectral cutoff; compare against
    // the Cholesky route at moderate alpha through continuity.
    for (double a : {1e-4, 1e-2, 0.3, 1.0}) {
        const CoherentSuperposition s = normalize(CoherentSuperposition(
            2, false, {Branch{1.0, {}, {a, a}}, Branch{1.0, {}, {-a, -a}}, Branch{0.5, {}, {a, -a}}}));
        const ReducedState r = reduce(s, std::vector<std::size_t>{0});
        double sum = 0.0;
        for (double v : r.eigenvalues) sum += v;
        EXPECT_NEAR(sum, 1.0, 1e-10) << a;
    }
}

TEST(ToFock, MatchesBruteForce) {
    Gen gen(108);
    for (int trial = 0; trial < 10; ++trial) {
        const CoherentSuperposition s = gen.atom_superposition(2, 3, 2.0);
        const std::size_t n = fock::required_truncation(s.max_amplitude());
        const fock::FockVector v = to_fock(s, fock::SpaceLayout::atoms_and_modes(2, 2, n));
        EXPECT_LT((v.amplitudes() - testing::dense_superposition(s, n)).cwiseAbs().maxCoeff(), 1e-14);
    }
    const auto s = CoherentSuperposition::product({Atom::g, Atom::g}, {2.0});
    EXPECT_THROW(to_fock(s, fock::SpaceLayout::atoms_and_modes(2, 1, 12)), TruncationError);
}

TEST(ToFock, CrossBackendAgreement) {
    const CoherentSuperposition phi = quasi_bell({BellFamily::Phi, Sign::Plus}, 1.0);
    EXPECT_NEAR(to_fock(phi, default_layout(phi)).norm(), 1.0, 1e-10);

    const double a = 1.5;
    const auto& labels = all_ctecs_labels();
    const fock::SpaceLayout layout = fock::SpaceLayout::atoms_and_modes(0, 4, fock::required_truncation(a));
    std::vector<fock::FockVector> dense;
    for (const CtecsLabel& l : labels) dense.push_back(to_fock(ctecs_basis_element(l, a), layout));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const Cd exact = overlap(ctecs_basis_element(labels[i], a), ctecs_basis_element(labels[j], a));
            EXPECT_LT(std::abs(fock::inner(dense[i], dense[j]) - exact), 1e-8);
        }
    }
}

TEST(Displace, BchPhase) {
    // D(b)|m> = exp((b conj(m) - conj(b) m)/2) |m + b>, checked against the dense operator.
    Gen gen(109);
    for (int trial = 0; trial < 10; ++trial) {
        const Cd m = gen.complex_in_disk(1.0), b = gen.complex_in_disk(1.0);
        const CoherentSuperposition out = displace(single(m), 0, b);
        const std::size_t n = 60;
        const fock::FockVector dense = fock::apply(fock::displacement_op(b, n), fock::coherent_fock(m, n));
        const fock::FockVector mine = to_fock(out, fock::SpaceLayout::atoms_and_modes(0, 1, n));
        EXPECT_LT(std::abs(fock::inner(mine, dense) - 1.0), 1e-10);
    }
}

}  // namespace
}  // namespace ctecs
