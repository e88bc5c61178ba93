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

#include "ctecs/serialize.hpp"

#include "ctecs/errors.hpp"

namespace ctecs {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError(where + ": expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::string spin_name(CollectiveSpin s) { return s == CollectiveSpin::HalfSpin ? "half_spin" : "pauli"; }

Json any_state_json(const AnyState& s) {
    if (const auto* c = std::get_if<CoherentSuperposition>(&s)) return state_to_json(*c);
    return fock_summary_json(std::get<fock::FockVector>(s));
}

}  // namespace

Json state_to_json(const CoherentSuperposition& s) {
    Json branches = Json::array();
    for (const Branch& b : s.branches()) {
        Json jb;
        jb["coeff"] = complex_json(b.coeff);
        if (s.atoms_present()) jb["atoms"] = to_string(b.atoms);
        Json modes = Json::array();
        for (Complex m : b.modes) modes.push_back(complex_json(m));
        jb["modes"] = std::move(modes);
        branches.push_back(std::move(jb));
    }
    Json j;
    j["kind"] = "coherent";
    j["format"] = kStateFormatVersion;
    j["mode_count"] = s.mode_count();
    j["atoms_present"] = s.atoms_present();
    j["branches"] = std::move(branches);
    return j;
}

CoherentSuperposition state_from_json(const Json& j) {
    const std::string where = "state";
    const Json& kind = field(j, "kind", where);
    if (kind != "coherent") throw ConfigError(where + ".kind: only coherent states can be loaded");
    if (j.contains("format") && j["format"] != kStateFormatVersion) {
        throw ConfigError(where + ".format: unsupported version " + j["format"].dump() + " (expected " +
                          std::to_string(kStateFormatVersion) + ")");
    }
    const Json& mc = field(j, "mode_count", where);
    if (!mc.is_number_unsigned() || mc.get<std::size_t>() == 0) {
        throw ConfigError(where + ".mode_count: expected a positive integer");
    }
    const auto mode_count = mc.get<std::size_t>();
    const Json& ap = field(j, "atoms_present", where);
    if (!ap.is_boolean()) throw ConfigError(where + ".atoms_present: expected true or false");
    const bool atoms = ap.get<bool>();
    const Json& jb = field(j, "branches", where);
    if (!jb.is_array()) throw ConfigError(where + ".branches: expected an array");
    std::vector<Branch> branches;
    for (std::size_t i = 0; i < jb.size(); ++i) {
        const std::string w = where + ".branches[" + std::to_string(i) + "]";
        Branch b;
        b.coeff = complex_from(field(jb[i], "coeff", w), w + ".coeff");
        if (atoms) {
            const Json& a = field(jb[i], "atoms", w);
            if (!a.is_string()) throw ConfigError(w + ".atoms: expected a string");
            try {
                b.atoms = parse_atom_pair(a.get<std::string>());
            } catch (const Error& e) {
                throw ConfigError(w + ".atoms: " + e.what());
            }
        }
        const Json& m = field(jb[i], "modes", w);
        if (!m.is_array() || m.size() != mode_count) {
            throw ConfigError(w + ".modes: expected " + std::to_string(mode_count) + " amplitudes");
        }
        for (std::size_t k = 0; k < m.size(); ++k) {
            b.modes.push_back(complex_from(m[k], w + ".modes[" + std::to_string(k) + "]"));
        }
        branches.push_back(std::move(b));
    }
    return CoherentSuperposition(mode_count, atoms, std::move(branches));
}

Json fock_summary_json(const fock::FockVector& v) {
    Json factors = Json::array();
    for (const fock::Factor& f : v.layout().factors()) {
        factors.push_back({{"kind", f.kind == fock::FactorKind::Qubit ? "qubit" : "mode"}, {"dim", f.dim}});
    }
    Json j;
    j["kind"] = "fock";
    j["factors"] = std::move(factors);
    j["dimension"] = v.layout().dimension();
    j["norm"] = v.norm();
    return j;
}

Json config_to_json(const ProtocolConfig& c) {
    Json j;
    j["alpha"] = complex_json(c.alpha);
    j["p"] = c.p;
    j["backend"] = to_string(c.backend);
    j["dispersive"] = {{"g", c.dispersive.g}, {"delta_big", c.dispersive.delta_big}};
    j["cpg"] = {{"g_prime", c.cpg.g_prime},
                {"delta_small", c.cpg.delta_small},
                {"omega_drive", c.cpg.omega_drive},
                {"k", c.cpg.k},
                {"collective_spin", spin_name(c.cpg.spin)}};
    j["forced_outcome"] = c.forced_outcome ? Json(to_string(*c.forced_outcome)) : Json(nullptr);
    j["seed"] = c.seed;
    Json signs = Json::array();
    for (int s : c.initial_signs) signs.push_back(s);
    j["initial_signs"] = std::move(signs);
    j["memory_budget_bytes"] = c.memory_budget_bytes;
    return j;
}

Json record_to_json(const ProtocolRecord& r) {
    Json j;
    j["config"] = config_to_json(r.config);
    Json cps = Json::array();
    for (const Checkpoint& c : r.checkpoints) {
        cps.push_back({{"name", c.name}, {"target", c.target}, {"fidelity", c.fidelity}, {"state", any_state_json(c.state)}});
    }
    j["checkpoints"] = std::move(cps);
    j["outcome"] = to_string(r.outcome);
    j["outcome_probability"] = r.outcome_probability;
    Json probs;
    for (const AtomPair& o : kAtomOutcomes) probs[to_string(o)] = r.outcome_probabilities[atom_index(o)];
    j["outcome_probabilities"] = std::move(probs);
    j["final_fidelity"] = r.final_fidelity;
    if (r.classification) {
        j["classification"] = {{"label", to_string(r.classification->label)},
                               {"fidelity", r.classification->fidelity}};
    } else {
        j["classification"] = nullptr;
    }
    j["final_state"] = any_state_json(r.final_state);
    Json timings = Json::array();
    for (const StageTiming& t : r.timings) {
        timings.push_back({{"stage", t.stage}, {"symbolic", t.symbolic}, {"duration", t.duration}});
    }
    j["timings"] = std::move(timings);
    j["total_time"] = r.total_time;
    j["warnings"] = r.warnings;
    return j;
}

Json feasibility_to_json(const FeasibilityReport& r) {
    Json j;
    j["input"] = {{"g_rad_per_s", r.input.g},
                  {"g_prime_rad_per_s", r.input.g_prime},
                  {"delta_big_rad_per_s", r.input.delta_big},
                  {"delta_small_rad_per_s", r.input.delta_small ? Json(*r.input.delta_small) : Json(nullptr)},
                  {"self_consistent_delta", !r.input.delta_small.has_value()},
                  {"k", r.input.k},
                  {"p", r.input.p},
                  {"T_r_s", r.input.t_r},
                  {"T_at_s", r.input.t_at}};
    j["lambda_rad_per_s"] = r.lam;
    j["chi_rad_per_s"] = r.chi;
    j["delta_small_rad_per_s"] = r.delta_small;
    j["omega_drive_rad_per_s"] = r.omega_drive;
    Json stages = Json::array();
    for (const FeasibilityStage& s : r.stages) {
        stages.push_back({{"name", s.name}, {"formula", s.formula}, {"duration_s", s.duration}});
    }
    j["stages"] = std::move(stages);
    j["T_total_s"] = r.total_time;
    j["ratio_r"] = r.ratio_r;
    j["ratio_at"] = r.ratio_at;
    j["alternative"] = {{"delta_big_rad_per_s", r.alt_delta_big},
                        {"T_total_s", r.alt_total_time},
                        {"ratio_r", r.alt_ratio_r},
                        {"ratio_at", r.alt_ratio_at},
                        {"residual", r.alt_residual}};
    j["quoted"] = {{"T_total_s", r.targets.total_time}, {"ratio_r", r.targets.ratio_r}, {"ratio_at", r.targets.ratio_at}};
    j["residual"] = r.residual;
    j["reproduces_quoted"] = r.reproduces_target;
    j["notes"] = r.notes;
    return j;
}

}  // namespace ctecs
