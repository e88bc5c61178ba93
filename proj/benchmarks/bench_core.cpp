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

#include <benchmark/benchmark.h>

#include "ctecs/coherent.hpp"
#include "ctecs/diagnostics.hpp"
#include "ctecs/fock.hpp"
#include "ctecs/hamiltonians.hpp"
#include "ctecs/protocol.hpp"
#include "ctecs/states.hpp"

namespace {

using namespace ctecs;

void BM_BasisOverlap(benchmark::State& state) {
    const CoherentSuperposition a = ctecs_basis_element(all_ctecs_labels()[0], 1.0);
    const CoherentSuperposition b = ctecs_basis_element(all_ctecs_labels()[7], 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(overlap(a, b));
}
BENCHMARK(BM_BasisOverlap);

void BM_Gram16(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ctecs_gram(1.5));
}
BENCHMARK(BM_Gram16);

void BM_Spectrum(benchmark::State& state) {
    const CoherentSuperposition s = ctecs_basis_element(all_ctecs_labels()[3], 1.0);
    const std::size_t keep[] = {0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(entanglement_spectrum(s, keep));
}
BENCHMARK(BM_Spectrum);

// Two-factor (atom, mode) propagator on the full four-mode protocol space.
void BM_EvolveOn(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const fock::SpaceLayout layout = fock::SpaceLayout::atoms_and_modes(2, 4, n);
    const fock::FockVector psi = to_fock(CoherentSuperposition::product({Atom::g, Atom::g}, {1.0, 1.0, 1.0, 1.0}), layout);
    const fock::OperatorMatrix u = fock::propagator(dispersive_h(DispersiveParams{1.0, 8.0}, n), 1.0);
    const std::size_t f[] = {0, 2};
    for (auto _ : state) benchmark::DoNotOptimize(fock::apply_on(psi, u, f));
    state.counters["amplitudes"] = static_cast<double>(layout.dimension());
}
BENCHMARK(BM_EvolveOn)->Arg(17)->Arg(26)->Unit(benchmark::kMillisecond);

void BM_RunAnalytic(benchmark::State& state) {
    ProtocolConfig c;
    c.alpha = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(run(c));
}
BENCHMARK(BM_RunAnalytic);

void BM_RunFock(benchmark::State& state) {
    ProtocolConfig c;
    c.alpha = 1.0;
    c.backend = Backend::Fock;
    for (auto _ : state) benchmark::DoNotOptimize(run(c));
}
BENCHMARK(BM_RunFock)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
