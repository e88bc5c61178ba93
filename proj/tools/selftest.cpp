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

// Cross-backend oracle suite behind `ctecs selftest`.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "commands.hpp"
#include "ctecs/diagnostics.hpp"
#include "ctecs/format.hpp"
#include "ctecs/hamiltonians.hpp"

namespace ctecs::cli {

namespace {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::string sci(double v) { return format_double(v, 6); }

Check overlap_check() {
    const double a = 3.0;
    const double exact = std::exp(-18.0);
    const double analytic = std::abs(coherent_overlap(a, -a));
    const std::size_t n = fock::required_truncation(a);
    const double dense = std::abs(fock::inner(fock::coherent_fock(a, n), fock::coherent_fock(-a, n)));
    const bool ok = std::abs(analytic - exact) <= 1e-12 * exact && std::abs(dense - exact) <= 1e-10;
    return {"overlap alpha=3", ok,
            "analytic " + sci(analytic) + ", fock(n=" + std::to_string(n) + ") " + sci(dense) + ", e^-18 " + sci(exact)};
}

Check analytic_check() {
    double worst = 1.0;
    bool labels = true;
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        for (const AtomPair& o : kAtomOutcomes) {
            ProtocolConfig c;
            c.alpha = a;
            c.forced_outcome = o;
            const ProtocolRecord r = run(c);
            for (const Checkpoint& cp : r.checkpoints) worst = std::min(worst, cp.fidelity);
            labels = labels && r.classification && r.classification->label == expected_label(o);
        }
    }
    return {"analytic protocol", worst >= 1.0 - 1e-12 && labels,
            "min checkpoint fidelity " + format_double(worst, 16) + (labels ? "" : ", label mismatch")};
}

Check cross_backend_check(double a) {
    ProtocolConfig c;
    c.alpha = a;
    c.backend = Backend::Fock;
    const ProtocolRecord r = run(c);
    double worst = 1.0;
    for (const Checkpoint& cp : r.checkpoints) worst = std::min(worst, cp.fidelity);
    return {"fock vs analytic alpha=" + format_double(a, 3), worst >= 1.0 - 1e-6,
            "min checkpoint fidelity " + format_double(worst, 16)};
}

Check cpg_check() {
    const CpgParams p = CpgParams::self_consistent(1.0);
    const Eigen::MatrixXcd u = remove_global_phase(cpg_propagator(p).entries());
    const Eigen::MatrixXcd want = remove_global_phase(cpg_truth_table());
    const double err = (u - want).cwiseAbs().maxCoeff();
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Eigen::Matrix4cd hh;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) hh.block(2 * i, 2 * j, 2, 2) = h(i, j) * h;
    const Eigen::Matrix4cd d = hh * cpg_truth_table() * hh;
    const bool diag = (d - Eigen::Matrix4cd(Eigen::Vector4cd(-1, 1, 1, 1).asDiagonal())).cwiseAbs().maxCoeff() < 1e-12;
    return {"controlled-phase truth table", err <= 1e-10 && diag,
            "max entry error " + sci(err) + (diag ? ", hadamard signs (-,+,+,+)" : ", hadamard signs wrong")};
}

Check dispersive_check() {
    std::ostringstream os;
    std::vector<double> f;
    for (double ratio : {4.0, 8.0, 16.0}) {
        const DispersiveValidation v = validate_dispersive_approx(1.0, ratio, 1.0, fock::required_truncation(1.0) + 8);
        f.push_back(v.fidelity);
        os << (f.size() > 1 ? ", " : "") << "D/g=" << format_double(ratio, 3) << ": " << format_double(v.fidelity, 8);
    }
    const bool monotone = std::is_sorted(f.begin(), f.end()) && f.front() < f.back();
    return {"dispersive approximation", monotone, os.str() + (monotone ? " (monotone)" : " (not monotone)")};
}

Check feasibility_check() {
    const FeasibilityInput in = FeasibilityInput::quoted_parameters();
    const FeasibilityReport r = feasibility(in);
    const double lam = in.g * in.g / in.delta_big;
    const double t = 2.0 * std::numbers::pi / (2.0 * lam) + std::numbers::pi / r.chi;
    const bool ok = std::abs(r.lam - lam) <= 1e-12 * lam && std::abs(r.total_time - t) <= 1e-12 * t;
    return {"feasibility formula", ok,
            "T " + format_double(r.total_time * 1e3, 6) + " ms, alternative reading " +
                format_double(r.alt_total_time * 1e3, 6) + " ms, quoted 1.045 ms"};
}

}  // namespace

Outputs cmd_selftest(const RunConfig& rc) {
    std::vector<Check> checks{overlap_check(), analytic_check(), cpg_check()};
    for (double a : {0.5, 1.0, 2.0}) checks.push_back(cross_backend_check(a));
    checks.push_back(dispersive_check());
    checks.push_back(feasibility_check());

    Outputs o;
    const std::string hash = hex64(rc.hash);
    o.json["meta"] = {{"tool", "ctecs"}, {"version", CTECS_VERSION}, {"command", "selftest"}, {"config_hash", hash},
                      {"seed", rc.seed}};
    o.text = "# ctecs " + std::string(CTECS_VERSION) + " command=selftest config_hash=" + hash +
             " seed=" + std::to_string(rc.seed) + "\n";
    o.csv = o.text + "# csv_schema=" + std::to_string(kCsvSchema) + " columns: check,result,detail\ncheck,result,detail\n";
    Json arr = Json::array();
    bool all = true;
    for (const Check& c : checks) {
        all = all && c.pass;
        const std::string result = c.pass ? "PASS" : "FAIL";
        o.text += result + " " + c.name + ": " + c.detail + "\n";
        o.csv += c.name + "," + result + ",\"" + c.detail + "\"\n";
        arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    o.json["checks"] = std::move(arr);
    o.json["all_passed"] = all;
    o.status = all ? kExitOk : kExitInvariant;
    return o;
}

}  // namespace ctecs::cli
