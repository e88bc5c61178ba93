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

#include <cmath>

#include "ctecs/errors.hpp"
#include "ctecs/measurement.hpp"
#include "ctecs/states.hpp"
#include "test_util.hpp"

namespace ctecs {
namespace {

using testing::Cd;
using testing::Gen;

// <psi| (|a><a| on mode) |psi> / <psi|psi>, summed branch pair by branch pair.
double oracle_p(const CoherentSuperposition& s, std::size_t mode, Cd a) {
    Cd num = 0.0, den = 0.0;
    for (const Branch& x : s.branches())
        for (const Branch& y : s.branches()) {
            Cd rest = std::conj(x.coeff) * y.coeff;
            if (s.atoms_present() && x.atoms != y.atoms) continue;
            for (std::size_t m = 0; m < s.mode_count(); ++m)
                if (m != mode) rest *= coherent_overlap(x.modes[m], y.modes[m]);
            den += rest * coherent_overlap(x.modes[mode], y.modes[mode]);
            num += rest * coherent_overlap(x.modes[mode], a) * coherent_overlap(a, y.modes[mode]);
        }
    return num.real() / den.real();
}

TEST(Povm, CompletenessOnTruncatedMode) {
    for (Cd a : {Cd(0.0, 0.0), Cd(1.3, 0.0), Cd(-0.4, 2.0)}) {
        const std::size_t n = fock::required_truncation(std::abs(a));
        const CoherentPovm povm{a};
        const Eigen::MatrixXcd p = povm.p_matrix(n).entries(), q = povm.q_matrix(n).entries();
        const Eigen::MatrixXcd sum = p.adjoint() * p + q.adjoint() * q;
        EXPECT_LT((sum - Eigen::MatrixXcd::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Povm, SimpleProbabilities) {
    for (double a : {0.25, 0.5, 1.0}) {
        const CoherentPovm povm{a};
        auto r = measure_mode(CoherentSuperposition::product({Cd(a)}), 0, povm, MeasurementChoice::force(PovmBranch::P));
        EXPECT_NEAR(r.probability, 1.0, 1e-15);
        r = measure_mode(CoherentSuperposition::product({Cd(-a)}), 0, povm, MeasurementChoice::force(PovmBranch::P));
        EXPECT_NEAR(r.probability, std::exp(-4.0 * a * a), 1e-15);
        EXPECT_NEAR(r.probability_q, 1.0 - std::exp(-4.0 * a * a), 1e-14);
    }
}

TEST(Povm, RandomStatesAgainstOracle) {
    Gen gen(301);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t modes = static_cast<std::size_t>(gen.integer(1, 3));
        const CoherentSuperposition s =
            normalize(gen.superposition(modes, static_cast<std::size_t>(gen.integer(1, 4)), 1.5));
        const std::size_t mode = static_cast<std::size_t>(gen.integer(0, static_cast<int>(modes) - 1));
        const Cd a = gen.complex_in_disk(1.5);
        const auto r = measure_mode(s, mode, CoherentPovm{a}, MeasurementChoice::sample(trial));
        EXPECT_NEAR(r.probability_p + r.probability_q, 1.0, 1e-10);
        EXPECT_NEAR(r.probability_p, oracle_p(s, mode, a), 1e-10);
        EXPECT_NEAR(norm_squared(r.state), 1.0, 1e-12);
    }
}

TEST(Povm, FockBackendAgrees) {
    Gen gen(302);
    for (int trial = 0; trial < 20; ++trial) {
        const CoherentSuperposition s = normalize(gen.superposition(2, 3, 1.0));
        const Cd a = gen.complex_in_disk(1.0);
        const fock::SpaceLayout layout = default_layout(s);
        for (PovmBranch b : {PovmBranch::P, PovmBranch::Q}) {
            const auto rc = measure_mode(s, 1, CoherentPovm{a}, MeasurementChoice::force(b));
            const auto rf = measure_mode(to_fock(s, layout), 1, CoherentPovm{a}, MeasurementChoice::force(b));
            EXPECT_NEAR(rc.probability, rf.probability, 1e-9);
            EXPECT_GE(fock::fidelity(rf.state, to_fock(rc.state, layout)), 1.0 - 1e-9);
        }
    }
}

TEST(Povm, ClusterCollapse) {
    const double a = 0.8;
    const CoherentSuperposition s = ctecs_basis_element(parse_ctecs_label("CLUSTER+"), a);
    const auto r = measure_mode(s, 0, CoherentPovm{a}, MeasurementChoice::force(PovmBranch::P));
    EXPECT_NEAR(r.probability, oracle_p(s, 0, a), 1e-13);
    for (const Branch& b : r.state.branches()) EXPECT_EQ(b.modes[0], Cd(a));
    // Mode 0 is now a product factor, the other three stay entangled.
    const std::size_t k0[] = {0}, k1[] = {1};
    const auto e0 = reduce(r.state, k0).eigenvalues;
    EXPECT_NEAR(e0[0], 1.0, 1e-12);
    const auto e1 = reduce(r.state, k1).eigenvalues;
    EXPECT_LT(e1[0], 1.0 - 1e-3);
}

TEST(Povm, Repeatability) {
    Gen gen(303);
    for (int trial = 0; trial < 20; ++trial) {
        const CoherentSuperposition s = normalize(gen.superposition(2, 3, 1.2));
        const CoherentPovm povm{gen.complex_in_disk(1.0)};
        const auto r1 = measure_mode(s, 0, povm, MeasurementChoice::force(PovmBranch::P));
        const auto r2 = measure_mode(r1.state, 0, povm, MeasurementChoice::force(PovmBranch::P));
        EXPECT_NEAR(r2.probability, 1.0, 1e-12);
    }
}

TEST(Povm, ImpossibleBranchAndBadFactor) {
    const CoherentSuperposition s = CoherentSuperposition::product({Cd(0.7)});
    EXPECT_THROW(measure_mode(s, 0, CoherentPovm{0.7}, MeasurementChoice::force(PovmBranch::Q)), OutcomeImpossibleError);
    EXPECT_THROW(measure_mode(s, 1, CoherentPovm{0.7}, MeasurementChoice::force(PovmBranch::P)), ShapeError);
    const fock::FockVector f = to_fock(CoherentSuperposition::product({Atom::g, Atom::g}, {Cd(0.5)}),
                                       fock::SpaceLayout::atoms_and_modes(2, 1, 20));
    EXPECT_THROW(measure_mode(f, 0, CoherentPovm{0.5}, MeasurementChoice::force(PovmBranch::P)), ShapeError);
}

TEST(Povm, SamplingFollowsBornRule) {
    const CoherentSuperposition s = normalize(superpose(CoherentSuperposition::product({Cd(0.6)}),
                                                        CoherentSuperposition::product({Cd(-0.6)})));
    const CoherentPovm povm{0.6};
    const double p = measure_mode(s, 0, povm, MeasurementChoice::force(PovmBranch::P)).probability;
    int hits = 0;
    const int n = 2000;
    for (int seed = 0; seed < n; ++seed) {
        const auto a = measure_mode(s, 0, povm, MeasurementChoice::sample(seed));
        const auto b = measure_mode(s, 0, povm, MeasurementChoice::sample(seed));
        EXPECT_EQ(a.branch, b.branch);
        hits += a.branch == PovmBranch::P;
    }
    const double sigma = std::sqrt(p * (1 - p) / n);
    EXPECT_NEAR(static_cast<double>(hits) / n, p, 5 * sigma);
}

TEST(Leak, SimpleCases) {
    for (double a : {0.3, 1.0}) {
        auto r = displace_and_leak(CoherentSuperposition::product({Cd(a)}), 0, a, MeasurementChoice::sample(1));
        EXPECT_NEAR(r.probability_zero, 1.0, 1e-15);
        EXPECT_EQ(r.detection, PhotonDetection::Zero);
        r = displace_and_leak(CoherentSuperposition::product({Cd(-a)}), 0, a, MeasurementChoice::force(PovmBranch::P));
        EXPECT_NEAR(r.probability_zero, std::exp(-4.0 * a * a), 1e-15);
    }
    const auto v = displace_and_leak(CoherentSuperposition::product({Cd(0.0)}), 0, 0.0, MeasurementChoice::sample(0));
    EXPECT_NEAR(v.probability_zero, 1.0, 1e-15);
}

TEST(Leak, EquivalentToProjector) {
    Gen gen(304);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t modes = static_cast<std::size_t>(gen.integer(1, 3));
        const CoherentSuperposition s = normalize(gen.superposition(modes, 3, 1.3));
        const std::size_t mode = static_cast<std::size_t>(gen.integer(0, static_cast<int>(modes) - 1));
        const Cd a = gen.complex_in_disk(1.3);
        const auto leak = displace_and_leak(s, mode, a, MeasurementChoice::force(PovmBranch::P));
        const auto proj = measure_mode(s, mode, CoherentPovm{a}, MeasurementChoice::force(PovmBranch::P));
        EXPECT_NEAR(leak.probability_zero, proj.probability_p, 1e-10);
        EXPECT_NEAR(std::abs(overlap(leak.state, proj.state)), 1.0, 1e-10);
        // Non-zero detection realizes Q.
        if (proj.probability_q > 1e-6) {
            const auto lq = displace_and_leak(s, mode, a, MeasurementChoice::force(PovmBranch::Q));
            const auto pq = measure_mode(s, mode, CoherentPovm{a}, MeasurementChoice::force(PovmBranch::Q));
            EXPECT_EQ(lq.detection, PhotonDetection::NonZero);
            EXPECT_NEAR(lq.probability, pq.probability, 1e-10);
            EXPECT_NEAR(fidelity(lq.state, pq.state), 1.0, 1e-9);
        }
    }
}

}  // namespace
}  // namespace ctecs
