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

#include <doctest.h>

#include <sstream>

using namespace qcasim;

namespace {

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("parse_scenario defaults and strict keys") {
    const Scenario s = parse_scenario(
        R"({"command": "gate", "gate": "HL", "input": "0_L"})");
    CHECK(s.command == Command::Gate);
    CHECK(s.gate == GateKind::HL);
    CHECK(s.format == ReportFormat::Csv);
    CHECK(s.noise.epsilon == 0.0);
    CHECK(s.noise.delta == 0.0);
    CHECK(s.params.omega0 == 0.0);
    CHECK(s.params.gamma == 1.0);
    CHECK(s.params.duration == doctest::Approx(kPi / 2));

    // unknown keys are fatal, including near-misses
    CHECK_THROWS_AS(parse_scenario(R"({"command": "gate", "gate": "HL",
        "input": "0_L", "noise": {"epsilonn": 0.1}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"command": "gate", "gate": "HL",
        "input": "0_L", "grid": {}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"command": "warp"})"), ParseError);
    CHECK_THROWS_AS(parse_scenario("not json"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"(["command"])"), ParseError);

    // angles accept exact pi fractions
    const Scenario pi_noise = parse_scenario(
        R"({"command": "gate", "gate": "CPF", "input": "Phi",
            "noise": {"epsilon": "pi/16"}})");
    CHECK(pi_noise.noise.epsilon == doctest::Approx(kPi / 16));
}

TEST_CASE("amplitude inputs are validated") {
    // norm within 1e-6 of 1 is accepted and renormalized
    CHECK_NOTHROW(parse_scenario(
        R"({"command": "gate", "gate": "HL",
            "input": [0, 1.0000001, 0, 0]})"));
    CHECK_THROWS_AS(parse_scenario(
                        R"({"command": "gate", "gate": "HL",
            "input": [0, 0, 0, 0]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_scenario(
                        R"({"command": "gate", "gate": "HL",
            "input": [0, 0.5, 0.5, 0]})"),
                    ValidationError);
    // complex entries as [re, im] pairs
    const Scenario s = parse_scenario(
        R"({"command": "gate", "gate": "HL",
            "input": [0, [0, 1], 0, 0]})");
    CHECK(s.input.amps(1) == Complex(0, 1));
}

TEST_CASE("sweep report has the documented header and corner value") {
    const Scenario s = parse_scenario(
        R"({"command": "sweep",
            "grid": {"eps_max": 0.3, "delta_max": 0.3, "steps": 3},
            "jobs": [{"gate": "HL", "input": "0_L"},
                     {"gate": "CPF", "input": "Phi"}]})");
    const Report r = run_scenario(s);
    const std::string csv = report_to_csv(r);
    CHECK(first_line(csv) == "epsilon,delta,gate,input,fidelity,flags");
    REQUIRE(r.rows.size() == 9 * 2);
    // the noise-free corner is exact
    CHECK(r.rows[0][0].number == 0.0);
    CHECK(r.rows[0][1].number == 0.0);
    CHECK(r.rows[0][4].number == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.rows[0][2].text == "HL");
    CHECK(r.rows[1][3].text == "|Phi>");
}

TEST_CASE("gate report carries the output amplitudes") {
    const Scenario s = parse_scenario(
        R"({"command": "gate", "gate": "HL", "input": "0_L",
            "format": "json"})");
    const Report r = run_scenario(s);
    REQUIRE(r.rows.size() == 4);
    // HL|0_L> = (|01> + |10>)/sqrt(2)
    CHECK(r.rows[0][5].number == doctest::Approx(0.0));
    CHECK(r.rows[1][5].number == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(r.rows[2][5].number == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(r.rows[3][7].number == doctest::Approx(1.0));
    CHECK(r.rows[0][8].text == "");  // no polar repair without noise

    const std::string payload = report_to_json(r, s);
    const nlohmann::json doc = nlohmann::json::parse(payload);
    CHECK(doc["schema"] == 1);
    CHECK(doc["scenario"]["command"] == "gate");
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][1]["re"].get<double>() ==
          doctest::Approx(1 / std::sqrt(2.0)));

    // noisy merges get flagged
    const Scenario noisy = parse_scenario(
        R"({"command": "gate", "gate": "HL", "input": "0_L",
            "noise": {"epsilon": 0.2, "delta": 0.1}})");
    const Report nr = run_scenario(noisy);
    CHECK(nr.rows[0][8].text == "polar");
    CHECK(nr.rows[0][7].number < 1.0);
}

TEST_CASE("circuit report decodes the register") {
    const Scenario s = parse_scenario(
        R"({"command": "circuit", "n_logic": 2,
            "circuit": "HL 0\nHL 1\nCPF 0 1\nHL 1\n"})");
    const Report r = run_scenario(s);
    // 16 physical rows, 4 logical rows, 1 leakage row
    REQUIRE(r.rows.size() == 21);
    CHECK(r.rows[0][0].text == "physical");
    CHECK(r.rows[16][0].text == "logical");
    // Bell state: |00> and |11> logical amplitudes of equal magnitude
    const double a00 = std::hypot(r.rows[16][2].number, r.rows[16][3].number);
    const double a11 = std::hypot(r.rows[19][2].number, r.rows[19][3].number);
    CHECK(a00 == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(a11 == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(r.rows[20][0].text == "leakage");
    CHECK(r.rows[20][2].number <= 1e-9);
}

TEST_CASE("dephase requires a seed and honors the override") {
    const Scenario s = parse_scenario(
        R"({"command": "dephase", "input": "Phi", "samples": 8})");
    CHECK_THROWS_AS(run_scenario(s), ValidationError);

    RunOptions opts;
    opts.seed = 99;
    const Report r = run_scenario(s, opts);
    REQUIRE(r.rows.size() == 9);
    CHECK(r.rows[8][0].text == "mean");
    for (int i = 0; i < 8; ++i)
        CHECK(r.rows[i][1].number == sample_phase(99, i, 0.0, 2 * kPi));

    // an explicit option seed beats the scenario seed
    const Scenario seeded = parse_scenario(
        R"({"command": "dephase", "input": "Phi", "samples": 8, "seed": 5})");
    const Report from_option = run_scenario(seeded, opts);
    for (int i = 0; i < 8; ++i)
        CHECK(from_option.rows[i][1].number == r.rows[i][1].number);
}

TEST_CASE("classify report lists the fixed taxonomy") {
    const Scenario s = parse_scenario(R"({"command": "classify"})");
    const Report r = run_scenario(s);
    REQUIRE(r.rows.size() == 16);
    int leakage = 0, logic = 0, identity = 0;
    for (const std::vector<Cell>& row : r.rows) {
        if (row[1].text == "Leakage") ++leakage;
        else if (row[1].text == "LogicError") ++logic;
        else ++identity;
    }
    CHECK(leakage == 8);
    CHECK(logic == 6);
    CHECK(identity == 2);
}

TEST_CASE("decouple report") {
    const Scenario s = parse_scenario(
        R"({"command": "decouple", "group": ["II", "XX", "YY", "ZZ"]})");
    const Report r = run_scenario(s);
    REQUIRE(r.rows.size() == 11);
    for (int i = 0; i < 8; ++i) {
        CHECK(r.rows[i][1].text == "leakage");
        CHECK(r.rows[i][4].text == "yes");
    }
    for (int i = 8; i < 11; ++i) {
        CHECK(r.rows[i][1].text == "logic");
        CHECK(r.rows[i][4].text == "no");
    }

    const Scenario composed = parse_scenario(
        R"({"command": "decouple", "group": ["II", "XX", "YY", "ZZ"],
            "compose_with": ["II", "ZI"]})");
    const Report cr = run_scenario(composed);
    int surviving = 0;
    for (const std::vector<Cell>& row : cr.rows)
        if (row[4].text == "no") ++surviving;
    CHECK(surviving == 1);  // only ZZ
}

TEST_CASE("round trip: reported amplitudes reproduce the state") {
    const Scenario s = parse_scenario(
        R"({"command": "gate", "gate": "CPF", "input": "Phi",
            "noise": {"epsilon": 0.15, "delta": 0.05}})");
    const Report r = run_scenario(s);
    REQUIRE(r.rows.size() == 4);

    // feed the 12-digit amplitudes back in as an explicit input list
    std::ostringstream cfg;
    cfg << R"({"command": "gate", "gate": "HL", "input": [)";
    for (int i = 0; i < 4; ++i) {
        if (i) cfg << ", ";
        cfg << "[" << format_number(r.rows[i][5].number) << ", "
            << format_number(r.rows[i][6].number) << "]";
    }
    cfg << "]}";
    const Scenario next = parse_scenario(cfg.str());
    Vector expected(4);
    for (int i = 0; i < 4; ++i)
        expected(i) = Complex(r.rows[i][5].number, r.rows[i][6].number);
    expected /= expected.norm();
    CHECK((next.input.amps - expected).cwiseAbs().maxCoeff() <= 1e-10);

    const Report chained = run_scenario(next);
    CHECK(chained.rows[0][7].number == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("format_number uses 12 significant digits") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-2.5e-13) == "-2.5e-13");
}
