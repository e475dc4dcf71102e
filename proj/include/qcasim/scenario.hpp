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

#pragma once

#include "qcasim/decoupling.hpp"
#include "qcasim/dfs.hpp"
#include "qcasim/noise.hpp"

#include <json.hpp>  // vendored single-header nlohmann/json

#include <optional>

// Scenario front end: JSON configs parsed in strict mode (unknown keys are
// fatal), flat deterministic CSV/JSON reports. Angles may be given as
// numbers (radians) or exact pi fractions like "pi/2".

namespace qcasim {

enum class Command { Gate, Circuit, Sweep, Dephase, Classify, Decouple };
enum class ReportFormat { Csv, Json };

struct InputSpec {
    enum class Kind { Named, Basis, Amplitudes };
    Kind kind = Kind::Named;
    std::string text;  // named token or bit string
    Vector amps;       // Amplitudes only

    std::string label() const;
};

struct SweepJobSpec {
    GateKind gate = GateKind::HL;
    InputSpec input;
    std::string label;
};

struct Scenario {
    Command command = Command::Gate;
    ReportFormat format = ReportFormat::Csv;
    std::string output;

    // gate
    GateKind gate = GateKind::HL;
    InputSpec input;
    bool has_input = false;
    NoiseParams noise;
    QcaParams params;  // omega0 = 0, gamma = 1, duration = pi/2 by default

    // circuit
    int n_logic = 1;
    std::string circuit_text;
    RunMode mode = RunMode::Physical;

    // sweep
    SweepGrid grid;
    std::vector<SweepJobSpec> jobs;

    // dephase
    int samples = 1;
    double phi_min = 0.0;
    double phi_max = 2 * kPi;
    std::optional<std::uint64_t> seed;

    // decouple
    std::vector<std::string> group_labels;
    std::vector<std::string> compose_labels;

    nlohmann::json raw;  // echoed into JSON reports
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

struct Cell {
    bool numeric = false;
    double number = 0.0;
    std::string text;
};

Cell num_cell(double v);
Cell text_cell(std::string s);

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct RunOptions {
    int threads = 1;
    std::optional<std::uint64_t> seed;  // overrides the scenario seed
};

/// Executes the scenario and returns the report table.
Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

std::string report_to_csv(const Report& report);
std::string report_to_json(const Report& report, const Scenario& scenario);

/// Runs the scenario and writes the report to the resolved output path
/// (options path wins over the scenario's own); empty path writes nowhere.
void run_scenario_to_file(const Scenario& scenario, const RunOptions& options,
                          const std::string& out_path);

/// %.12g formatting used for every numeric report field.
std::string format_number(double v);

}  // namespace qcasim
