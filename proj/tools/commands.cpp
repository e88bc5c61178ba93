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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "ctecs/diagnostics.hpp"
#include "ctecs/errors.hpp"
#include "ctecs/format.hpp"
#include "ctecs/measurement.hpp"
#include "ctecs/states.hpp"

namespace ctecs::cli {

namespace {

const char* version() { return CTECS_VERSION; }

// Text output only; adding 0.0 folds -0 into 0. JSON keeps the sign bit.
std::string fmt(double v) { return format_double(v + 0.0, 12); }

std::string fmt_complex(Complex z) { return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")"; }

struct Meta {
    std::string command;
    std::string hash;
    std::uint64_t seed;
};

Meta meta_of(const std::string& command, const RunConfig& rc) { return {command, hex64(rc.hash), rc.seed}; }

Json meta_json(const Meta& m) {
    return {{"tool", "ctecs"}, {"version", version()}, {"command", m.command}, {"config_hash", m.hash},
            {"seed", m.seed}};
}

std::string meta_line(const Meta& m) {
    return "# ctecs " + std::string(version()) + " command=" + m.command + " config_hash=" + m.hash +
           " seed=" + std::to_string(m.seed) + "\n";
}

std::string csv_preamble(const Meta& m, const std::string& columns) {
    return meta_line(m) + "# csv_schema=" + std::to_string(kCsvSchema) + " columns: " + columns + "\n";
}

/// Outputs skeleton with metadata filled in.
Outputs start(const Meta& m) {
    Outputs o;
    o.json = Json::object();
    o.json["meta"] = meta_json(m);
    o.text = meta_line(m);
    return o;
}

std::variant<CtecsLabel, QuasiBellLabel> parse_any_label(const std::string& text) {
    try {
        return parse_ctecs_label(text);
    } catch (const ShapeError&) {
    }
    try {
        return parse_quasi_bell_label(text);
    } catch (const ShapeError&) {
    }
    throw ConfigError("unknown label '" + text + "' (expected a cluster label such as CLUSTER+ or C-, or PHI+/PHI-/PSI+/PSI-)");
}

CoherentSuperposition named_state(const std::string& label, Complex alpha) {
    const auto l = parse_any_label(label);
    if (const auto* c = std::get_if<CtecsLabel>(&l)) return ctecs_basis_element(*c, alpha);
    return quasi_bell(std::get<QuasiBellLabel>(l), alpha);
}

double min_checkpoint_fidelity(const ProtocolRecord& r) {
    double f = 1.0;
    for (const Checkpoint& c : r.checkpoints) f = std::min(f, c.fidelity);
    return f;
}

/// Evaluates fn over the grid with bounded concurrency; results keep grid order.
template <class Fn>
auto ordered_map(const std::vector<double>& grid, Fn fn) {
    using R = decltype(fn(0.0));
    std::vector<R> out;
    out.reserve(grid.size());
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < grid.size(); begin += width) {
        const std::size_t end = std::min(grid.size(), begin + width);
        std::vector<std::future<R>> batch;
        for (std::size_t i = begin; i < end; ++i) batch.push_back(std::async(std::launch::async, fn, grid[i]));
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

std::string bipartition_name(const std::vector<std::size_t>& keep, std::size_t modes) {
    std::string a, b;
    for (std::size_t m = 0; m < modes; ++m) {
        const bool in = std::find(keep.begin(), keep.end(), m) != keep.end();
        std::string& s = in ? a : b;
        s += (s.empty() ? "" : " ") + std::to_string(m + 1);
    }
    return "{" + a + "}|{" + b + "}";
}

Json load_state_document(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ConfigError("cannot open state file '" + file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    Json doc;
    try {
        doc = read_document(ss.str());
    } catch (const ConfigError& e) {
        throw ConfigError(file + ": " + e.what());
    }
    // Accept a bare state, a basis/measure dump, or a generate dump.
    if (doc.is_object() && !doc.contains("kind")) {
        if (doc.contains("record") && doc["record"].is_object()) doc = doc["record"];
        for (const char* key : {"state", "final_state"}) {
            if (doc.contains(key)) return doc[key];
        }
    }
    return doc;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write output file '" + p.string() + "'");
    f << content;
}

}  // namespace

Outputs cmd_generate(const RunConfig& rc) {
    const Meta m = meta_of("generate", rc);
    const ProtocolRecord r = run(rc.protocol);
    Outputs o = start(m);
    Json rec = record_to_json(r);
    rec["time_unit"] = rc.time_unit;
    o.json["record"] = std::move(rec);

    std::ostringstream t;
    t << "backend " << to_string(rc.protocol.backend) << ", alpha " << fmt_complex(rc.protocol.alpha) << ", p "
      << rc.protocol.p << "\n";
    t << "outcome " << to_string(r.outcome) << (rc.protocol.forced_outcome ? " (forced)" : " (sampled)")
      << ", probability " << fmt(r.outcome_probability) << "\n";
    t << "probabilities";
    for (const AtomPair& a : kAtomOutcomes) t << " " << to_string(a) << "=" << fmt(r.outcome_probabilities[atom_index(a)]);
    t << "\n";
    for (const Checkpoint& c : r.checkpoints) {
        t << "checkpoint " << c.name << ": fidelity " << fmt(c.fidelity) << "  [" << c.target << "]\n";
    }
    t << "final state fidelity " << fmt(r.final_fidelity) << "\n";
    if (r.classification) {
        t << "final label " << to_string(r.classification->label) << " (beta = i alpha), fidelity "
          << fmt(r.classification->fidelity) << "\n";
    }
    for (const StageTiming& s : r.timings) {
        t << "stage " << s.stage << ": " << s.symbolic << " = " << fmt(s.duration) << " " << rc.time_unit << "\n";
    }
    t << "total time " << fmt(r.total_time) << " " << rc.time_unit << "\n";
    for (const std::string& w : r.warnings) t << "warning: " << w << "\n";
    o.text += t.str();

    std::ostringstream c;
    c << csv_preamble(m, "section,name,value") << "section,name,value\n";
    for (const Checkpoint& cp : r.checkpoints) c << "checkpoint," << cp.name << "," << format_double(cp.fidelity) << "\n";
    for (const AtomPair& a : kAtomOutcomes) {
        c << "probability," << to_string(a) << "," << format_double(r.outcome_probabilities[atom_index(a)]) << "\n";
    }
    c << "final,fidelity," << format_double(r.final_fidelity) << "\n";
    for (const StageTiming& s : r.timings) c << "timing," << s.stage << "," << format_double(s.duration) << "\n";
    c << "timing,total," << format_double(r.total_time) << "\n";
    o.csv = c.str();
    return o;
}

Outputs cmd_basis(const RunConfig& rc) {
    const Meta m = meta_of("basis", rc);
    const std::string& label = rc.basis.label;
    const Complex alpha = rc.basis.alpha;
    const auto parsed = parse_any_label(label);
    const CoherentSuperposition state = named_state(label, alpha);

    double exact = 0.0, nominal = 0.0;
    Eigen::MatrixXcd gram;
    std::vector<std::string> names;
    if (const auto* l = std::get_if<CtecsLabel>(&parsed)) {
        exact = ctecs_normalization(*l, alpha);
        nominal = 0.5;
        gram = ctecs_gram(alpha);
        for (const CtecsLabel& x : all_ctecs_labels()) names.push_back(to_string(x));
    } else {
        const QuasiBellLabel q = std::get<QuasiBellLabel>(parsed);
        nominal = quasi_bell_norm_closed_form(q.sign, alpha);
        const double s = q.sign == Sign::Plus ? 1.0 : -1.0;
        const Complex a2 = q.family == BellFamily::Phi ? alpha : -alpha;
        exact = normalization_constant(
            CoherentSuperposition(2, false, {Branch{1.0, {}, {alpha, a2}}, Branch{s, {}, {-alpha, -a2}}}));
        const auto& all = all_quasi_bell_labels();
        gram.resize(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            names.push_back(to_string(all[i]));
            for (std::size_t j = 0; j < 4; ++j) {
                gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    overlap(quasi_bell(all[i], alpha), quasi_bell(all[j], alpha));
            }
        }
    }
    double max_off = 0.0;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            if (i != j) max_off = std::max(max_off, std::abs(gram(i, j)));
        }
    }

    Outputs o = start(m);
    o.json["label"] = label;
    o.json["alpha"] = Json::array({alpha.real(), alpha.imag()});
    o.json["normalization"] = {{"exact", exact}, {"nominal", nominal}, {"correction", exact - nominal}};
    o.json["state"] = state_to_json(state);
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        Json rr = Json::array(), ii = Json::array();
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            rr.push_back(gram(i, j).real());
            ii.push_back(gram(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    o.json["gram"] = {{"labels", names}, {"max_offdiagonal_abs", max_off}, {"re", std::move(re)}, {"im", std::move(im)}};

    std::ostringstream t;
    t << "label " << label << ", alpha " << fmt_complex(alpha) << "\n";
    t << "branches " << state.size() << "\n";
    for (const Branch& b : state.branches()) {
        t << "  " << fmt_complex(b.coeff) << " |";
        for (std::size_t k = 0; k < b.modes.size(); ++k) t << (k ? ", " : "") << fmt_complex(b.modes[k]);
        t << ">\n";
    }
    t << "normalization exact " << format_double(exact) << ", nominal " << format_double(nominal)
      << ", correction " << format_double(exact - nominal) << "\n";
    t << "gram " << gram.rows() << "x" << gram.cols() << ", max off-diagonal |entry| " << format_double(max_off)
      << "\n";
    o.text += t.str();

    std::ostringstream c;
    c << csv_preamble(m, "row,col,re,im,abs (gram matrix entries)") << "row,col,re,im,abs\n";
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            c << names[static_cast<std::size_t>(i)] << "," << names[static_cast<std::size_t>(j)] << ","
              << format_double(gram(i, j).real()) << "," << format_double(gram(i, j).imag()) << ","
              << format_double(std::abs(gram(i, j))) << "\n";
        }
    }
    o.csv = c.str();
    return o;
}

Outputs cmd_sweep(const RunConfig& rc) {
    const Meta m = meta_of("sweep", rc);
    const SweepSpec& s = rc.sweep;
    if (s.quantity.empty()) {
        throw ConfigError("sweep: a quantity is required (fidelity, entropy, overlap, outcome-prob)");
    }
    std::vector<double> grid = s.alphas;
    if (grid.empty()) grid = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string description;

    if (s.quantity == "overlap") {
        description = "alpha; overlap = |<alpha|-alpha>| in the coherent algebra; closed_form = exp(-2 alpha^2)";
        columns = {"alpha", "overlap", "closed_form"};
        const auto vals = ordered_map(grid, [](double a) { return std::abs(coherent_overlap(a, -a)); });
        for (std::size_t i = 0; i < grid.size(); ++i) {
            rows.push_back({format_double(grid[i]), format_double(vals[i]),
                            format_double(std::exp(-2.0 * grid[i] * grid[i]))});
        }
    } else if (s.quantity == "entropy") {
        parse_any_label(s.label);
        const std::size_t modes = named_state(s.label, 1.0).mode_count();
        for (std::size_t k : s.keep) {
            if (k >= modes) throw ConfigError("sweep.keep: mode index " + std::to_string(k) + " out of range");
        }
        const std::string cut = bipartition_name(s.keep, modes);
        const auto spectra = ordered_map(grid, [&](double a) {
            return entanglement_spectrum(named_state(s.label, a), s.keep);
        });
        std::size_t width = 0;
        for (const auto& sp : spectra) width = std::max(width, sp.size());
        description = "reduced-state eigenvalues (descending) and entropy in bits of " + s.label + " over " + cut;
        const std::string header = spectrum_csv_header(width);
        std::stringstream hs(header);
        for (std::string col; std::getline(hs, col, ',');) columns.push_back(col);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const SpectrumRow row{grid[i], s.label, cut, spectra[i], von_neumann_entropy(spectra[i])};
            std::stringstream rs(spectrum_csv_row(row, width));
            std::vector<std::string> cells;
            for (std::string cell; std::getline(rs, cell, ',');) cells.push_back(cell);
            rows.push_back(std::move(cells));
        }
    } else if (s.quantity == "fidelity" || s.quantity == "outcome-prob") {
        const auto records = ordered_map(grid, [&](double a) {
            ProtocolConfig pc = rc.protocol;
            pc.alpha = a;
            return run(pc);
        });
        if (s.quantity == "fidelity") {
            description = "final-state and minimum checkpoint fidelity of the generation run";
            columns = {"alpha", "outcome", "final_fidelity", "min_checkpoint_fidelity"};
            for (std::size_t i = 0; i < grid.size(); ++i) {
                rows.push_back({format_double(grid[i]), to_string(records[i].outcome),
                                format_double(records[i].final_fidelity),
                                format_double(min_checkpoint_fidelity(records[i]))});
            }
        } else {
            description = "atomic outcome probabilities after the gate";
            columns = {"alpha", "p_gg", "p_ge", "p_eg", "p_ee"};
            for (std::size_t i = 0; i < grid.size(); ++i) {
                std::vector<std::string> r{format_double(grid[i])};
                for (double p : records[i].outcome_probabilities) r.push_back(format_double(p));
                rows.push_back(std::move(r));
            }
        }
    } else {
        throw ConfigError("sweep: unknown quantity '" + s.quantity + "' (fidelity, entropy, overlap, outcome-prob)");
    }

    Outputs o = start(m);
    o.json["quantity"] = s.quantity;
    o.json["description"] = description;
    o.json["columns"] = columns;
    Json jr = Json::array();
    for (const auto& r : rows) jr.push_back(r);
    o.json["rows"] = std::move(jr);

    std::string header;
    for (const std::string& col : columns) header += (header.empty() ? "" : ",") + col;
    std::ostringstream c;
    c << csv_preamble(m, description) << header << "\n";
    std::ostringstream t;
    t << "sweep " << s.quantity << ": " << description << "\n";
    for (const auto& r : rows) {
        std::string line;
        for (const std::string& cell : r) line += (line.empty() ? "" : ",") + cell;
        c << line << "\n";
        for (std::size_t k = 0; k < r.size(); ++k) t << (k ? "  " : "") << columns[k] << "=" << r[k];
        t << "\n";
    }
    o.csv = c.str();
    o.text += t.str();
    return o;
}

Outputs cmd_measure(const RunConfig& rc) {
    const Meta m = meta_of("measure", rc);
    const MeasureSpec& ms = rc.measure;
    if (ms.state_path.empty()) throw ConfigError("measure: a state file is required (--state or measure.state)");
    const CoherentSuperposition state = state_from_json(load_state_document(ms.state_path));
    if (ms.mode >= state.mode_count()) {
        throw ConfigError("measure.mode: index " + std::to_string(ms.mode) + " out of range for " +
                          std::to_string(state.mode_count()) + " modes");
    }
    MeasurementChoice choice = MeasurementChoice::sample(rc.seed);
    if (ms.branch == "P") choice = MeasurementChoice::force(PovmBranch::P);
    if (ms.branch == "Q") choice = MeasurementChoice::force(PovmBranch::Q);

    Outputs o = start(m);
    o.json["method"] = ms.method;
    o.json["mode"] = ms.mode;
    o.json["alpha"] = Json::array({ms.alpha.real(), ms.alpha.imag()});
    std::ostringstream t, c;
    t << "measure " << ms.method << " on mode " << ms.mode << " with alpha " << fmt_complex(ms.alpha) << "\n";
    c << csv_preamble(m, "quantity,value") << "quantity,value\n";
    if (ms.method == "povm") {
        const auto r = measure_mode(state, ms.mode, CoherentPovm{ms.alpha}, choice);
        const std::string b = r.branch == PovmBranch::P ? "P" : "Q";
        o.json["branch"] = b;
        o.json["probability_p"] = r.probability_p;
        o.json["probability_q"] = r.probability_q;
        o.json["probability"] = r.probability;
        o.json["state"] = state_to_json(r.state);
        t << "branch " << b << " (probability " << fmt(r.probability) << "); P " << fmt(r.probability_p) << ", Q "
          << fmt(r.probability_q) << "\n";
        t << "collapsed state: " << r.state.size() << " branches\n";
        c << "branch," << b << "\nprobability_p," << format_double(r.probability_p) << "\nprobability_q,"
          << format_double(r.probability_q) << "\nprobability," << format_double(r.probability) << "\n";
    } else {
        const LeakResult r = displace_and_leak(state, ms.mode, ms.alpha, choice);
        const std::string d = r.detection == PhotonDetection::Zero ? "zero" : "nonzero";
        o.json["detection"] = d;
        o.json["probability_zero"] = r.probability_zero;
        o.json["probability"] = r.probability;
        o.json["state"] = state_to_json(r.state);
        t << "photon detection " << d << " (probability " << fmt(r.probability) << "); zero-photon probability "
          << fmt(r.probability_zero) << "\n";
        t << "collapsed state: " << r.state.size() << " branches\n";
        c << "detection," << d << "\nprobability_zero," << format_double(r.probability_zero) << "\nprobability,"
          << format_double(r.probability) << "\n";
    }
    o.text += t.str();
    o.csv = c.str();
    return o;
}

Outputs cmd_feasibility(const RunConfig& rc) {
    const Meta m = meta_of("feasibility", rc);
    const FeasibilityReport r = feasibility(rc.feasibility);
    Outputs o = start(m);
    o.json["parameters_source"] = rc.feasibility_from_config ? "config" : "default (quoted setup)";
    o.json["report"] = feasibility_to_json(r);
    o.text += feasibility_text(r);
    std::ostringstream c;
    c << csv_preamble(m, "quantity,value,unit") << "quantity,value,unit\n";
    c << "lambda," << format_double(r.lam) << ",rad/s\n";
    c << "chi," << format_double(r.chi) << ",rad/s\n";
    c << "delta_small," << format_double(r.delta_small) << ",rad/s\n";
    c << "omega_drive," << format_double(r.omega_drive) << ",rad/s\n";
    for (std::size_t i = 0; i < r.stages.size(); ++i) {
        c << "stage_" << i + 1 << "," << format_double(r.stages[i].duration) << ",s\n";
    }
    c << "T_total," << format_double(r.total_time) << ",s\n";
    c << "ratio_r," << format_double(r.ratio_r) << ",1\n";
    c << "ratio_at," << format_double(r.ratio_at) << ",1\n";
    c << "alt_T_total," << format_double(r.alt_total_time) << ",s\n";
    c << "alt_ratio_r," << format_double(r.alt_ratio_r) << ",1\n";
    c << "alt_ratio_at," << format_double(r.alt_ratio_at) << ",1\n";
    c << "quoted_T_total," << format_double(r.targets.total_time) << ",s\n";
    c << "residual," << format_double(r.residual) << ",1\n";
    c << "alt_residual," << format_double(r.alt_residual) << ",1\n";
    o.csv = c.str();
    return o;
}

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
    try {
        for (const std::string& e : inv.emit) {
            if (e != "text" && e != "json" && e != "csv") {
                throw ConfigError("--emit: expected text, json or csv, got '" + e + "'");
            }
        }
        Json doc = inv.config_path ? load_document(*inv.config_path) : Json::object();
        if (!doc.is_object()) throw ConfigError("config: top level must be an object");
        auto section = [&](const char* name) -> Json& {
            if (!doc.contains(name)) doc[name] = Json::object();
            return doc[name];
        };
        const std::string& c = inv.command;
        if (c == "basis") {
            if (inv.label) section("basis")["label"] = *inv.label;
            if (inv.alpha) section("basis")["alpha"] = *inv.alpha;
        } else if (c == "sweep") {
            if (inv.quantity) section("sweep")["quantity"] = *inv.quantity;
            if (inv.label) section("sweep")["label"] = *inv.label;
        } else if (c == "measure") {
            if (inv.state) section("measure")["state"] = *inv.state;
            if (inv.mode) section("measure")["mode"] = *inv.mode;
            if (inv.alpha) section("measure")["alpha"] = *inv.alpha;
            if (inv.method) section("measure")["method"] = *inv.method;
            if (inv.branch) section("measure")["branch"] = *inv.branch;
        } else if (c == "generate") {
            if (inv.alpha) doc["alpha"] = *inv.alpha;
        }
        RunConfig rc;
        try {
            rc = from_json(std::move(doc), inv.overrides);
        } catch (const ConfigError& e) {
            if (inv.config_path) throw ConfigError(*inv.config_path + ": " + e.what());
            throw;
        }

        Outputs o;
        if (c == "generate") {
            o = cmd_generate(rc);
        } else if (c == "basis") {
            o = cmd_basis(rc);
        } else if (c == "sweep") {
            o = cmd_sweep(rc);
        } else if (c == "measure") {
            o = cmd_measure(rc);
        } else if (c == "feasibility") {
            o = cmd_feasibility(rc);
        } else if (c == "selftest") {
            o = cmd_selftest(rc);
        } else {
            throw ConfigError("unknown command '" + c + "'");
        }

        for (const std::string& e : inv.emit) {
            const std::string content = e == "json" ? o.json.dump(2) + "\n" : e == "csv" ? o.csv : o.text;
            if (inv.out_dir) {
                std::filesystem::create_directories(*inv.out_dir);
                const std::string ext = e == "text" ? "txt" : e;
                write_file(std::filesystem::path(*inv.out_dir) / (c + "." + ext), content);
            } else {
                out << content;
            }
        }
        if (inv.out_dir) {
            for (const std::string& e : inv.emit) {
                out << "wrote " << (std::filesystem::path(*inv.out_dir) / (c + "." + (e == "text" ? "txt" : e))).string()
                    << "\n";
            }
        }
        return o.status;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ShapeError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const PhysicsGuardError& e) {
        err << "physics guard: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace ctecs::cli
