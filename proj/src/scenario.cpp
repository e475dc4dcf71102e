/*
   Copyright 2026 The qcasim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qcasim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qcasim {

using nlohmann::json;

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Cell num_cell(double v) { return Cell{true, v, {}}; }
Cell text_cell(std::string s) { return Cell{false, 0.0, std::move(s)}; }

namespace {

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const std::string& k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known)
            throw ParseError("unknown key '" + item.key() + "' in " + where);
    }
}

double json_angle(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>());
    throw ParseError(where + " must be a number or a pi-fraction string");
}

GateKind parse_gate_kind(const std::string& name) {
    if (name == "HL") return GateKind::HL;
    if (name == "CPF") return GateKind::CPF;
    throw ParseError("gate must be HL or CPF, got '" + name + "'");
}

InputSpec parse_input(const json& v) {
    InputSpec spec;
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (!s.empty() && s.front() == '|') s = s.substr(1);
        if (!s.empty() && s.back() == '>') s.pop_back();
        if (s == "0_L" || s == "1_L" || s == "Phi") {
            spec.kind = InputSpec::Kind::Named;
            spec.text = s;
            return spec;
        }
        if (!s.empty() &&
            s.find_first_not_of("01") == std::string::npos) {
            spec.kind = InputSpec::Kind::Basis;
            spec.text = s;
            return spec;
        }
        throw ParseError("unrecognized input '" + v.get<std::string>() + "'");
    }
    if (v.is_array()) {
        spec.kind = InputSpec::Kind::Amplitudes;
        spec.amps.resize(static_cast<Eigen::Index>(v.size()));
        Eigen::Index i = 0;
        for (const json& entry : v) {
            if (entry.is_number()) {
                spec.amps(i++) = entry.get<double>();
            } else if (entry.is_array() && entry.size() == 2 &&
                       entry[0].is_number() && entry[1].is_number()) {
                spec.amps(i++) =
                    Complex(entry[0].get<double>(), entry[1].get<double>());
            } else {
                throw ParseError(
                    "amplitude entries must be numbers or [re, im] pairs");
            }
        }
        const double n = spec.amps.norm();
        if (std::abs(n - 1.0) >= kNormDriftTol)
            throw ValidationError("amplitude list has norm " +
                                  format_number(n) +
                                  ", must be 1 within 1e-6");
        spec.amps /= n;
        return spec;
    }
    throw ParseError("input must be a named state, bit string or amplitude list");
}

// Physical two-spin realization (dim 4), used by gate and sweep commands.
Vector realize_pair_input(const InputSpec& spec) {
    switch (spec.kind) {
        case InputSpec::Kind::Named:
            if (spec.text == "0_L") return basis_state(4, 1);
            if (spec.text == "1_L") return basis_state(4, 2);
            return Vector::Constant(4, 0.5);  // Phi
        case InputSpec::Kind::Basis: {
            if (spec.text.size() != 2)
                throw ValidationError("bit string for a gate input must have 2 bits");
            const Eigen::Index idx =
                ((spec.text[0] - '0') << 1) | (spec.text[1] - '0');
            return basis_state(4, idx);
        }
        case InputSpec::Kind::Amplitudes:
            if (spec.amps.size() != 4)
                throw ValidationError("gate input needs 4 amplitudes");
            return spec.amps;
    }
    throw ValidationError("bad input spec");
}

// Circuit-register realization: bit strings are logical and get encoded.
Vector realize_register_input(const InputSpec& spec, int n_logic) {
    const Eigen::Index dim = Eigen::Index{1} << (2 * n_logic);
    switch (spec.kind) {
        case InputSpec::Kind::Named: {
            if (n_logic != 1)
                throw ValidationError("named pair states need n_logic = 1");
            return realize_pair_input(spec);
        }
        case InputSpec::Kind::Basis: {
            if (static_cast<int>(spec.text.size()) != n_logic)
                throw ValidationError("logical bit string must have n_logic bits");
            std::vector<int> bits;
            for (char c : spec.text) bits.push_back(c - '0');
            return encode_basis(bits).state;
        }
        case InputSpec::Kind::Amplitudes:
            if (spec.amps.size() != dim)
                throw ValidationError("amplitude list dim mismatch");
            return spec.amps;
    }
    throw ValidationError("bad input spec");
}

// Any 4^n-dim state for the dephase command; bit strings are physical.
Vector realize_physical_input(const InputSpec& spec) {
    switch (spec.kind) {
        case InputSpec::Kind::Named:
            return realize_pair_input(spec);
        case InputSpec::Kind::Basis: {
            Eigen::Index idx = 0;
            for (char c : spec.text) idx = (idx << 1) | (c - '0');
            return basis_state(Eigen::Index{1} << spec.text.size(), idx);
        }
        case InputSpec::Kind::Amplitudes:
            return spec.amps;
    }
    throw ValidationError("bad input spec");
}

NoiseParams parse_noise(const json& v) {
    check_keys(v, {"epsilon", "delta"}, "noise");
    NoiseParams noise;
    if (v.contains("epsilon")) noise.epsilon = json_angle(v["epsilon"], "epsilon");
    if (v.contains("delta")) noise.delta = json_angle(v["delta"], "delta");
    noise.validate();
    return noise;
}

}  // namespace

std::string InputSpec::label() const {
    switch (kind) {
        case Kind::Named: return "|" + text + ">";
        case Kind::Basis: return "basis:" + text;
        case Kind::Amplitudes: return "amps";
    }
    return "?";
}

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");
    if (!j.contains("command") || !j["command"].is_string())
        throw ParseError("missing 'command'");

    Scenario s;
    s.raw = j;
    const std::string cmd = j["command"].get<std::string>();

    std::vector<std::string> allowed = {"command", "format", "output"};
    if (cmd == "gate") {
        s.command = Command::Gate;
        allowed.insert(allowed.end(), {"gate", "input", "noise", "params"});
    } else if (cmd == "circuit") {
        s.command = Command::Circuit;
        allowed.insert(allowed.end(), {"n_logic", "circuit", "input", "mode"});
    } else if (cmd == "sweep") {
        s.command = Command::Sweep;
        allowed.insert(allowed.end(), {"grid", "jobs"});
    } else if (cmd == "dephase") {
        s.command = Command::Dephase;
        allowed.insert(allowed.end(),
                       {"input", "samples", "phi_min", "phi_max", "seed"});
    } else if (cmd == "classify") {
        s.command = Command::Classify;
    } else if (cmd == "decouple") {
        s.command = Command::Decouple;
        allowed.insert(allowed.end(), {"group", "compose_with"});
    } else {
        throw ParseError("unknown command '" + cmd + "'");
    }
    check_keys(j, allowed, "scenario");

    if (j.contains("format")) {
        const std::string f = j["format"].get<std::string>();
        if (f == "csv") s.format = ReportFormat::Csv;
        else if (f == "json") s.format = ReportFormat::Json;
        else throw ParseError("format must be csv or json");
    }
    if (j.contains("output")) s.output = j["output"].get<std::string>();

    switch (s.command) {
        case Command::Gate: {
            if (!j.contains("gate")) throw ParseError("gate command needs 'gate'");
            s.gate = parse_gate_kind(j["gate"].get<std::string>());
            if (!j.contains("input")) throw ParseError("gate command needs 'input'");
            s.input = parse_input(j["input"]);
            s.has_input = true;
            if (j.contains("noise")) s.noise = parse_noise(j["noise"]);
            if (j.contains("params")) {
                const json& p = j["params"];
                check_keys(p, {"omega0", "gamma", "duration"}, "params");
                if (p.contains("omega0"))
                    s.params.omega0 = json_angle(p["omega0"], "omega0");
                if (p.contains("gamma"))
                    s.params.gamma = json_angle(p["gamma"], "gamma");
                if (p.contains("duration"))
                    s.params.duration = json_angle(p["duration"], "duration");
                s.params.validate();
            }
            break;
        }
        case Command::Circuit: {
            if (!j.contains("n_logic")) throw ParseError("circuit command needs 'n_logic'");
            s.n_logic = j["n_logic"].get<int>();
            if (!j.contains("circuit")) throw ParseError("circuit command needs 'circuit'");
            if (j["circuit"].is_string()) {
                s.circuit_text = j["circuit"].get<std::string>();
            } else if (j["circuit"].is_array()) {
                std::string text;
                for (const json& line : j["circuit"])
                    text += line.get<std::string>() + "\n";
                s.circuit_text = text;
            } else {
                throw ParseError("'circuit' must be a string or array of lines");
            }
            if (j.contains("input")) {
                s.input = parse_input(j["input"]);
                s.has_input = true;
            }
            if (j.contains("mode")) {
                const std::string m = j["mode"].get<std::string>();
                if (m == "ideal") s.mode = RunMode::Ideal;
                else if (m == "physical") s.mode = RunMode::Physical;
                else throw ParseError("mode must be ideal or physical");
            }
            break;
        }
        case Command::Sweep: {
            if (!j.contains("grid")) throw ParseError("sweep command needs 'grid'");
            const json& g = j["grid"];
            check_keys(g, {"eps_max", "delta_max", "steps"}, "grid");
            if (g.contains("eps_max"))
                s.grid.eps_max = json_angle(g["eps_max"], "eps_max");
            if (g.contains("delta_max"))
                s.grid.delta_max = json_angle(g["delta_max"], "delta_max");
            if (g.contains("steps")) s.grid.steps = g["steps"].get<int>();
            s.grid.validate();
            if (!j.contains("jobs") || !j["jobs"].is_array() || j["jobs"].empty())
                throw ParseError("sweep command needs a non-empty 'jobs' array");
            for (const json& job : j["jobs"]) {
                check_keys(job, {"gate", "input", "label"}, "job");
                SweepJobSpec spec;
                if (!job.contains("gate")) throw ParseError("job needs 'gate'");
                spec.gate = parse_gate_kind(job["gate"].get<std::string>());
                if (!job.contains("input")) throw ParseError("job needs 'input'");
                spec.input = parse_input(job["input"]);
                spec.label = job.contains("label") ? job["label"].get<std::string>()
                                                   : spec.input.label();
                s.jobs.push_back(spec);
            }
            break;
        }
        case Command::Dephase: {
            if (!j.contains("input")) throw ParseError("dephase command needs 'input'");
            s.input = parse_input(j["input"]);
            s.has_input = true;
            if (!j.contains("samples")) throw ParseError("dephase command needs 'samples'");
            s.samples = j["samples"].get<int>();
            if (j.contains("phi_min")) s.phi_min = json_angle(j["phi_min"], "phi_min");
            if (j.contains("phi_max")) s.phi_max = json_angle(j["phi_max"], "phi_max");
            if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
            break;
        }
        case Command::Classify:
            break;
        case Command::Decouple: {
            if (!j.contains("group") || !j["group"].is_array())
                throw ParseError("decouple command needs a 'group' array");
            for (const json& l : j["group"])
                s.group_labels.push_back(l.get<std::string>());
            if (j.contains("compose_with"))
                for (const json& l : j["compose_with"])
                    s.compose_labels.push_back(l.get<std::string>());
            break;
        }
        default:
            break;
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

namespace {

Report run_gate(const Scenario& s) {
    GateCycle cycle = s.gate == GateKind::HL ? hl_cycle() : cpf_cycle();
    cycle.params = s.params;
    const GateCycle noisy = perturb_cycle(cycle, s.noise);

    const Matrix ideal_eff = merged_operator(cycle);
    Matrix noisy_eff = merged_operator_unchecked(noisy);
    bool repaired = false;
    if (unitarity_defect(noisy_eff) > kMergeTol) {
        noisy_eff = nearest_unitary(noisy_eff);
        repaired = true;
    }

    const Vector in = checked_state(realize_pair_input(s.input));
    const Vector ideal_out = ideal_eff * in;
    Vector out = noisy_eff * in;
    out /= out.norm();
    const double fidelity = state_fidelity(ideal_out, out);

    Report r;
    r.columns = {"gate", "input", "epsilon", "delta",
                 "index", "re", "im", "fidelity", "flags"};
    for (Eigen::Index i = 0; i < out.size(); ++i)
        r.rows.push_back({text_cell(gate_name(s.gate)),
                          text_cell(s.input.label()),
                          num_cell(s.noise.epsilon), num_cell(s.noise.delta),
                          num_cell(static_cast<double>(i)),
                          num_cell(out(i).real()), num_cell(out(i).imag()),
                          num_cell(fidelity),
                          text_cell(repaired ? "polar" : "")});
    return r;
}

Report run_circuit_cmd(const Scenario& s) {
    const LogicCircuit circuit = parse_circuit(s.n_logic, s.circuit_text);
    const Vector in = s.has_input
                          ? realize_register_input(s.input, s.n_logic)
                          : init_register(s.n_logic).state;
    const Vector out = run_circuit(circuit, in, s.mode);
    const DecodeResult d = decode(out);

    Report r;
    r.columns = {"section", "index", "re", "im"};
    for (Eigen::Index i = 0; i < out.size(); ++i)
        r.rows.push_back({text_cell("physical"), num_cell(static_cast<double>(i)),
                          num_cell(out(i).real()), num_cell(out(i).imag())});
    for (Eigen::Index i = 0; i < d.logical_amps.size(); ++i)
        r.rows.push_back({text_cell("logical"), num_cell(static_cast<double>(i)),
                          num_cell(d.logical_amps(i).real()),
                          num_cell(d.logical_amps(i).imag())});
    r.rows.push_back({text_cell("leakage"), num_cell(0.0),
                      num_cell(d.leakage_weight), num_cell(0.0)});
    return r;
}

Report run_sweep(const Scenario& s, const RunOptions& options) {
    std::vector<SweepJob> jobs;
    for (const SweepJobSpec& spec : s.jobs)
        jobs.push_back({spec.gate, realize_pair_input(spec.input), spec.label});
    const std::vector<FidelityRecord> records =
        sweep(jobs, s.grid, options.threads);

    Report r;
    r.columns = {"epsilon", "delta", "gate", "input", "fidelity", "flags"};
    for (const FidelityRecord& rec : records)
        r.rows.push_back({num_cell(rec.epsilon), num_cell(rec.delta),
                          text_cell(gate_name(rec.gate)),
                          text_cell(rec.input_label), num_cell(rec.fidelity),
                          text_cell(rec.repaired ? "polar" : "")});
    return r;
}

Report run_dephase(const Scenario& s, const RunOptions& options) {
    std::optional<std::uint64_t> seed = options.seed ? options.seed : s.seed;
    if (!seed)
        throw ValidationError("dephase is stochastic and requires a seed");
    const Vector in = realize_physical_input(s.input);
    const DephasingStats stats =
        monte_carlo_dephasing(in, s.samples, s.phi_min, s.phi_max, *seed);

    Report r;
    r.columns = {"sample", "phi", "fidelity"};
    for (std::size_t i = 0; i < stats.per_sample.size(); ++i)
        r.rows.push_back({num_cell(static_cast<double>(i)),
                          num_cell(stats.phis[i]),
                          num_cell(stats.per_sample[i])});
    r.rows.push_back({text_cell("mean"), text_cell(""),
                      num_cell(stats.mean_fidelity)});
    return r;
}

Report run_classify() {
    Report r;
    r.columns = {"pauli", "class"};
    const Pauli letters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli a : letters)
        for (Pauli b : letters) {
            PauliString p;
            p.factors = {a, b};
            r.rows.push_back({text_cell(pauli_label(p)),
                              text_cell(error_class_name(classify_pauli(p)))});
        }
    return r;
}

Report run_decouple(const Scenario& s) {
    PulseGroup group = pulse_group_from_labels(s.group_labels);
    if (!s.compose_labels.empty())
        group = compose_groups(group,
                               pulse_group_from_labels(s.compose_labels));

    std::vector<ErrorTerm> terms;
    std::vector<std::string> kinds;
    for (const std::string& l : leakage_operator_labels()) {
        terms.push_back({pauli_from_label(l), 1.0});
        kinds.push_back("leakage");
    }
    for (const std::string& l : logic_operator_labels()) {
        terms.push_back({pauli_from_label(l), 1.0});
        kinds.push_back("logic");
    }
    const AverageReport avg = average_hamiltonian(terms, group);

    Report r;
    r.columns = {"term", "kind", "original", "surviving", "suppressed"};
    for (std::size_t i = 0; i < avg.terms.size(); ++i) {
        const AveragedTerm& t = avg.terms[i];
        r.rows.push_back({text_cell(pauli_label(t.pauli)), text_cell(kinds[i]),
                          num_cell(t.original), num_cell(t.surviving),
                          text_cell(std::abs(t.surviving) <= 1e-12 ? "yes"
                                                                   : "no")});
    }
    return r;
}

}  // namespace

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
    switch (scenario.command) {
        case Command::Gate: return run_gate(scenario);
        case Command::Circuit: return run_circuit_cmd(scenario);
        case Command::Sweep: return run_sweep(scenario, options);
        case Command::Dephase: return run_dephase(scenario, options);
        case Command::Classify: return run_classify();
        case Command::Decouple: return run_decouple(scenario);
    }
    throw ValidationError("bad command");
}

std::string report_to_csv(const Report& report) {
    std::string out;
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        if (c) out += ',';
        out += report.columns[c];
    }
    out += '\n';
    for (const std::vector<Cell>& row : report.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c].numeric ? format_number(row[c].number) : row[c].text;
        }
        out += '\n';
    }
    return out;
}

std::string report_to_json(const Report& report, const Scenario& scenario) {
    json rows = json::array();
    for (const std::vector<Cell>& row : report.rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c].numeric) {
                // round to the documented 12 significant digits
                obj[report.columns[c]] =
                    std::strtod(format_number(row[c].number).c_str(), nullptr);
            } else {
                obj[report.columns[c]] = row[c].text;
            }
        }
        rows.push_back(obj);
    }
    json doc;
    doc["schema"] = 1;
    doc["scenario"] = scenario.raw;
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

void run_scenario_to_file(const Scenario& scenario, const RunOptions& options,
                          const std::string& out_path) {
    const Report report = run_scenario(scenario, options);
    const std::string path =
        !out_path.empty() ? out_path : scenario.output;
    const std::string payload = scenario.format == ReportFormat::Csv
                                    ? report_to_csv(report)
                                    : report_to_json(report, scenario);
    if (path.empty()) {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    out << payload;
}

}  // namespace qcasim
