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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ctecs/errors.hpp"
#include "ctecs/format.hpp"

namespace ctecs::cli {

namespace {

struct Unit {
    std::string_view name;
    double scale;
};

std::pair<double, std::string_view> split_quantity(std::string_view text, const std::string& where) {
    const auto space = text.find(' ');
    if (space == std::string_view::npos) {
        throw ConfigError(where + ": expected \"<number> <unit>\", got \"" + std::string(text) + "\"");
    }
    std::string_view num = text.substr(0, space);
    std::string_view unit = text.substr(space + 1);
    while (!unit.empty() && unit.front() == ' ') unit.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc() || ptr != num.data() + num.size() || !std::isfinite(v)) {
        throw ConfigError(where + ": cannot read number \"" + std::string(num) + "\"");
    }
    return {v, unit};
}

double lookup(std::string_view unit, std::initializer_list<Unit> table, const std::string& where,
              std::string_view text) {
    for (const Unit& u : table) {
        if (u.name == unit) return u.scale;
    }
    std::string allowed;
    for (const Unit& u : table) allowed += (allowed.empty() ? "" : ", ") + std::string(u.name);
    throw ConfigError(where + ": unknown unit in \"" + std::string(text) + "\" (allowed: " + allowed + ")");
}

std::string path(const std::string& parent, const char* key) {
    return parent.empty() ? std::string(key) : parent + "." + key;
}

void check_keys(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) throw ConfigError((where.empty() ? "config" : where) + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (std::string_view a : allowed) ok = ok || key == a;
        if (!ok) throw ConfigError("unknown field '" + path(where, key.c_str()) + "'");
    }
}

const std::string& as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + ": expected a string");
    return j.get_ref<const std::string&>();
}

long long as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + ": expected an integer");
    return j.get<long long>();
}

std::uint64_t as_seed(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ConfigError(where + ": expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

/// Collects frequency fields so that mixed physical / dimensionless inputs
/// can be rejected together.
struct FrequencyCollector {
    std::optional<FrequencyKind> kind;
    std::string first;

    double take(const Json& j, const std::string& where) {
        const Frequency f = parse_frequency(as_string(j, where), where);
        if (kind && *kind != f.kind) {
            throw ConfigError(where + ": mixes dimensionless couplings with physical frequencies (see " + first + ")");
        }
        if (!kind) {
            kind = f.kind;
            first = where;
        }
        return f.value;
    }
};

void parse_protocol(const Json& doc, RunConfig& rc) {
    ProtocolConfig& pc = rc.protocol;
    FrequencyCollector freq;
    if (doc.contains("alpha")) pc.alpha = parse_alpha(doc["alpha"], "alpha");
    if (doc.contains("p")) {
        const long long p = as_int(doc["p"], "p");
        if (p < 1 || p > 16) throw ConfigError("p: expected 1..16 cavities per atom");
        pc.p = static_cast<int>(p);
    }
    if (doc.contains("backend")) {
        const std::string& b = as_string(doc["backend"], "backend");
        if (b == "analytic") {
            pc.backend = Backend::Analytic;
        } else if (b == "fock") {
            pc.backend = Backend::Fock;
        } else {
            throw ConfigError("backend: expected \"analytic\" or \"fock\", got \"" + b + "\"");
        }
    }
    if (doc.contains("seed")) rc.seed = as_seed(doc["seed"], "seed");
    pc.seed = rc.seed;
    if (doc.contains("outcome")) {
        const std::string& o = as_string(doc["outcome"], "outcome");
        if (o == "sample") {
            pc.forced_outcome.reset();
        } else {
            try {
                pc.forced_outcome = parse_atom_pair(o);
            } catch (const Error&) {
                throw ConfigError("outcome: expected gg, ge, eg, ee or sample, got \"" + o + "\"");
            }
        }
    }
    if (doc.contains("initial_signs")) {
        const Json& s = doc["initial_signs"];
        if (!s.is_array()) throw ConfigError("initial_signs: expected an array of +1/-1");
        pc.initial_signs.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const long long v = as_int(s[i], "initial_signs[" + std::to_string(i) + "]");
            if (v != 1 && v != -1) throw ConfigError("initial_signs[" + std::to_string(i) + "]: expected +1 or -1");
            pc.initial_signs.push_back(static_cast<int>(v));
        }
        if (!pc.initial_signs.empty() && pc.initial_signs.size() != pc.mode_count()) {
            throw ConfigError("initial_signs: expected " + std::to_string(pc.mode_count()) + " entries for p = " +
                              std::to_string(pc.p));
        }
    }
    if (doc.contains("memory_budget")) pc.memory_budget_bytes = parse_memory(as_string(doc["memory_budget"], "memory_budget"), "memory_budget");

    double g = 1.0, delta_big = 8.0;
    if (doc.contains("dispersive")) {
        const Json& d = doc["dispersive"];
        check_keys(d, "dispersive", {"g", "delta_big"});
        if (d.contains("g")) g = freq.take(d["g"], "dispersive.g");
        if (d.contains("delta_big")) delta_big = freq.take(d["delta_big"], "dispersive.delta_big");
    }
    if (!(g >= 0.0) || !(delta_big > 0.0)) throw ConfigError("dispersive: g must be >= 0 and delta_big > 0");
    pc.dispersive = {g, delta_big};

    double g_prime = 1.0;
    std::optional<double> delta_small;
    std::optional<double> omega;
    int k = 1;
    CollectiveSpin spin = CollectiveSpin::HalfSpin;
    if (doc.contains("cpg")) {
        const Json& c = doc["cpg"];
        check_keys(c, "cpg", {"g_prime", "delta_small", "omega_drive", "k", "collective_spin"});
        if (c.contains("g_prime")) g_prime = freq.take(c["g_prime"], "cpg.g_prime");
        if (c.contains("delta_small")) {
            if (c["delta_small"] != "self_consistent") delta_small = freq.take(c["delta_small"], "cpg.delta_small");
        }
        if (c.contains("omega_drive")) omega = freq.take(c["omega_drive"], "cpg.omega_drive");
        if (c.contains("k")) {
            const long long kk = as_int(c["k"], "cpg.k");
            if (kk < 1) throw ConfigError("cpg.k: expected an integer >= 1");
            k = static_cast<int>(kk);
        }
        if (c.contains("collective_spin")) {
            const std::string& s = as_string(c["collective_spin"], "cpg.collective_spin");
            if (s == "half_spin") {
                spin = CollectiveSpin::HalfSpin;
            } else if (s == "pauli") {
                spin = CollectiveSpin::Pauli;
            } else {
                throw ConfigError("cpg.collective_spin: expected \"half_spin\" or \"pauli\"");
            }
        }
    }
    if (!(g_prime > 0.0) || (delta_small && !(*delta_small > 0.0))) {
        throw ConfigError("cpg: g_prime and delta_small must be positive");
    }
    pc.cpg = delta_small ? CpgParams::with_detuning(g_prime, *delta_small, k, spin)
                         : CpgParams::self_consistent(g_prime, k, spin);
    if (omega) {
        pc.cpg.omega_drive = *omega;
        if (!pc.cpg.timing_consistent(1e-9)) {
            throw ConfigError("cpg.omega_drive: the gate needs Omega = (2k + 1/2) chi = " +
                              format_double((2.0 * k + 0.5) * pc.cpg.chi()) + " for k = " + std::to_string(k));
        }
    }
    rc.time_unit = freq.kind == FrequencyKind::Angular ? "s" : "1/coupling";
}

void parse_feasibility(const Json& f, RunConfig& rc) {
    const std::string w = "feasibility";
    check_keys(f, w, {"g", "g_prime", "delta_big", "delta_small", "k", "p", "T_r", "T_at"});
    FeasibilityInput in = FeasibilityInput::quoted_parameters();
    auto angular = [&](const char* key) {
        const std::string where = path(w, key);
        const Frequency fr = parse_frequency(as_string(f[key], where), where);
        if (fr.kind != FrequencyKind::Angular) {
            throw ConfigError(where + ": feasibility needs physical units (Hz, kHz, rad/s, ...)");
        }
        return fr.value;
    };
    if (f.contains("g")) in.g = angular("g");
    if (f.contains("g_prime")) in.g_prime = angular("g_prime");
    if (f.contains("delta_big")) {
        const std::string where = path(w, "delta_big");
        const Json& d = f["delta_big"];
        // "<r> g" gives Delta as a multiple of g.
        const std::string& text = as_string(d, where);
        if (text.size() > 2 && text.substr(text.size() - 2) == " g") {
            const auto [ratio, unit] = split_quantity(text, where);
            (void)unit;
            in.delta_big = ratio * in.g;
        } else {
            in.delta_big = angular("delta_big");
        }
    }
    if (f.contains("delta_small")) {
        if (f["delta_small"] == "self_consistent") {
            in.delta_small.reset();
        } else {
            in.delta_small = angular("delta_small");
        }
    }
    if (f.contains("k")) in.k = static_cast<int>(as_int(f["k"], path(w, "k")));
    if (f.contains("p")) in.p = static_cast<int>(as_int(f["p"], path(w, "p")));
    if (f.contains("T_r")) in.t_r = parse_time(as_string(f["T_r"], path(w, "T_r")), path(w, "T_r"));
    if (f.contains("T_at")) in.t_at = parse_time(as_string(f["T_at"], path(w, "T_at")), path(w, "T_at"));
    in.validate();
    rc.feasibility = in;
    rc.feasibility_from_config = true;
}

void parse_sweep(const Json& s, RunConfig& rc) {
    check_keys(s, "sweep", {"quantity", "alphas", "label", "keep"});
    if (s.contains("quantity")) rc.sweep.quantity = as_string(s["quantity"], "sweep.quantity");
    if (s.contains("alphas")) rc.sweep.alphas = parse_alpha_grid(s["alphas"], "sweep.alphas");
    if (s.contains("label")) rc.sweep.label = as_string(s["label"], "sweep.label");
    if (s.contains("keep")) {
        const Json& k = s["keep"];
        if (!k.is_array() || k.empty()) throw ConfigError("sweep.keep: expected a non-empty array of mode indices");
        rc.sweep.keep.clear();
        for (std::size_t i = 0; i < k.size(); ++i) {
            const long long v = as_int(k[i], "sweep.keep[" + std::to_string(i) + "]");
            if (v < 0) throw ConfigError("sweep.keep[" + std::to_string(i) + "]: expected a mode index >= 0");
            rc.sweep.keep.push_back(static_cast<std::size_t>(v));
        }
    }
}

void parse_basis(const Json& b, RunConfig& rc) {
    check_keys(b, "basis", {"label", "alpha"});
    if (b.contains("label")) rc.basis.label = as_string(b["label"], "basis.label");
    if (b.contains("alpha")) rc.basis.alpha = parse_alpha(b["alpha"], "basis.alpha");
}

void parse_measure(const Json& m, RunConfig& rc) {
    check_keys(m, "measure", {"state", "mode", "alpha", "method", "branch"});
    if (m.contains("state")) rc.measure.state_path = as_string(m["state"], "measure.state");
    if (m.contains("mode")) {
        const long long v = as_int(m["mode"], "measure.mode");
        if (v < 0) throw ConfigError("measure.mode: expected a mode index >= 0");
        rc.measure.mode = static_cast<std::size_t>(v);
    }
    if (m.contains("alpha")) rc.measure.alpha = parse_alpha(m["alpha"], "measure.alpha");
    if (m.contains("method")) {
        rc.measure.method = as_string(m["method"], "measure.method");
        if (rc.measure.method != "povm" && rc.measure.method != "leak") {
            throw ConfigError("measure.method: expected \"povm\" or \"leak\"");
        }
    }
    if (m.contains("branch")) {
        rc.measure.branch = as_string(m["branch"], "measure.branch");
        if (rc.measure.branch != "P" && rc.measure.branch != "Q" && rc.measure.branch != "sample") {
            throw ConfigError("measure.branch: expected \"P\", \"Q\" or \"sample\"");
        }
    }
}

}  // namespace

RunConfig from_json(Json doc, const Overrides& ov) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    if (ov.seed) doc["seed"] = *ov.seed;
    if (ov.backend) doc["backend"] = *ov.backend;
    check_keys(doc, "", {"alpha", "p", "backend", "seed", "outcome", "initial_signs", "memory_budget", "dispersive",
                         "cpg", "feasibility", "sweep", "basis", "measure"});
    RunConfig rc;
    parse_protocol(doc, rc);
    if (doc.contains("feasibility")) parse_feasibility(doc["feasibility"], rc);
    if (doc.contains("sweep")) parse_sweep(doc["sweep"], rc);
    if (doc.contains("basis")) parse_basis(doc["basis"], rc);
    if (doc.contains("measure")) parse_measure(doc["measure"], rc);
    // Key order in the file must not change the hash.
    rc.hash = fnv1a(nlohmann::json::parse(doc.dump()).dump());
    rc.document = std::move(doc);
    return rc;
}

Frequency parse_frequency(std::string_view text, const std::string& where) {
    const auto [v, unit] = split_quantity(text, where);
    if (unit == "coupling") return {v, FrequencyKind::Coupling};
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double scale = lookup(unit,
                                {{"Hz", two_pi},
                                 {"kHz", two_pi * 1e3},
                                 {"MHz", two_pi * 1e6},
                                 {"GHz", two_pi * 1e9},
                                 {"rad/s", 1.0},
                                 {"krad/s", 1e3},
                                 {"Mrad/s", 1e6}},
                                where, text);
    return {v * scale, FrequencyKind::Angular};
}

double parse_time(std::string_view text, const std::string& where) {
    const auto [v, unit] = split_quantity(text, where);
    return v * lookup(unit, {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}}, where, text);
}

std::size_t parse_memory(std::string_view text, const std::string& where) {
    const auto [v, unit] = split_quantity(text, where);
    const double bytes =
        v * lookup(unit, {{"B", 1.0}, {"KiB", 1024.0}, {"MiB", 1048576.0}, {"GiB", 1073741824.0}}, where, text);
    if (!(bytes > 0.0) || bytes > 1e18) throw ConfigError(where + ": memory budget out of range");
    return static_cast<std::size_t>(bytes);
}

Complex parse_alpha(const Json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError(where + ": expected a number or [re, im]");
}

std::vector<double> parse_alpha_grid(const Json& j, const std::string& where) {
    std::vector<double> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number()) throw ConfigError(where + "[" + std::to_string(i) + "]: expected a number");
            out.push_back(j[i].get<double>());
        }
    } else if (j.is_object()) {
        check_keys(j, where, {"start", "stop", "count"});
        if (!j.contains("start") || !j.contains("stop") || !j.contains("count")) {
            throw ConfigError(where + ": expected {start, stop, count}");
        }
        if (!j["start"].is_number() || !j["stop"].is_number()) {
            throw ConfigError(where + ": start and stop must be numbers");
        }
        const double a = j["start"].get<double>();
        const double b = j["stop"].get<double>();
        const long long n = as_int(j["count"], where + ".count");
        if (n < 1) throw ConfigError(where + ".count: expected >= 1");
        for (long long i = 0; i < n; ++i) {
            out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
        }
    } else {
        throw ConfigError(where + ": expected an array or {start, stop, count}");
    }
    if (out.empty()) throw ConfigError(where + ": grid is empty");
    return out;
}

Json read_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // Translate the byte offset into line/column.
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError("config syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": " + e.what());
    }
}

Json load_document(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return read_document(ss.str());
    } catch (const ConfigError& e) {
        throw ConfigError(file + ": " + e.what());
    }
}

RunConfig parse_config(std::string_view text, const Overrides& overrides) {
    return from_json(read_document(text), overrides);
}

RunConfig load_config(const std::string& file, const Overrides& overrides) {
    const Json doc = load_document(file);
    try {
        return from_json(doc, overrides);
    } catch (const ConfigError& e) {
        throw ConfigError(file + ": " + e.what());
    }
}

RunConfig default_config(const Overrides& overrides) { return from_json(Json::object(), overrides); }

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace ctecs::cli
