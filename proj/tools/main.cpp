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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    using ctecs::cli::Invocation;
    CLI::App app{"ctecs: cluster-type entangled coherent states"};
    app.set_version_flag("--version", std::string(CTECS_VERSION));
    app.require_subcommand(1);

    Invocation inv;
    std::optional<std::string> backend;
    std::optional<std::uint64_t> seed;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", inv.config_path, "JSON run configuration");
        sub->add_option("--seed", seed, "RNG seed (overrides the config)");
        sub->add_option("--backend", backend, "analytic or fock (overrides the config)")
            ->check(CLI::IsMember({"analytic", "fock"}));
        sub->add_option("--out", inv.out_dir, "write <command>.{txt,json,csv} into this directory");
        sub->add_option("--emit", inv.emit, "output formats: text, json, csv")
            ->delimiter(',')
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* gen = app.add_subcommand("generate", "run the two-atom generation protocol");
    common(gen);
    gen->add_option("--alpha", inv.alpha, "initial coherent amplitude (real)");

    auto* basis = app.add_subcommand("basis", "dump a basis element and the Gram matrix of its family");
    common(basis);
    basis->add_option("--label", inv.label, "CLUSTER+, C-, ..., or PHI+/PHI-/PSI+/PSI-");
    basis->add_option("--alpha", inv.alpha, "coherent amplitude (real)");

    auto* sweep = app.add_subcommand("sweep", "evaluate a quantity over an alpha grid");
    common(sweep);
    sweep->add_option("--quantity", inv.quantity, "fidelity, entropy, overlap or outcome-prob");
    sweep->add_option("--label", inv.label, "state for the entropy sweep");

    auto* meas = app.add_subcommand("measure", "measure one mode of a dumped state");
    common(meas);
    meas->add_option("--state", inv.state, "state JSON (as written by basis/generate/measure)");
    meas->add_option("--mode", inv.mode, "0-based mode index");
    meas->add_option("--alpha", inv.alpha, "amplitude of the projector |alpha><alpha| (real)");
    meas->add_option("--method", inv.method, "povm or leak")->check(CLI::IsMember({"povm", "leak"}));
    meas->add_option("--branch", inv.branch, "P, Q or sample")->check(CLI::IsMember({"P", "Q", "sample"}));

    auto* feas = app.add_subcommand("feasibility", "generation time against cavity and atomic lifetimes");
    common(feas);

    auto* self = app.add_subcommand("selftest", "cross-backend oracle suite");
    common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ctecs::cli::kExitConfig;
    }

    inv.command = app.get_subcommands().front()->get_name();
    inv.overrides.seed = seed;
    inv.overrides.backend = backend;
    return ctecs::cli::execute(inv, std::cout, std::cerr);
}
