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

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

struct CommonArgs {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    bool has_seed = false;
    int threads = 1;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config, "scenario config file (JSON)")
        ->required();
    sub->add_option("--out", args.out, "report output path (default: stdout)");
    sub->add_option("--seed", args.seed, "seed for stochastic commands")
        ->each([&args](const std::string&) { args.has_seed = true; });
    sub->add_option("--threads", args.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
}

const char* command_name(qcasim::Command c) {
    using qcasim::Command;
    switch (c) {
        case Command::Gate: return "gate";
        case Command::Circuit: return "circuit";
        case Command::Sweep: return "sweep";
        case Command::Dephase: return "dephase";
        case Command::Classify: return "classify";
        case Command::Decouple: return "decouple";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QCA spin-pair gate simulator and analysis reports"};
    app.require_subcommand(1);

    CommonArgs args;
    const char* names[] = {"gate", "circuit", "sweep",
                           "dephase", "classify", "decouple"};
    for (const char* name : names) add_common(app.add_subcommand(name), args);

    CLI11_PARSE(app, argc, argv);
    const std::string invoked = app.get_subcommands().front()->get_name();

    try {
        const qcasim::Scenario scenario = qcasim::load_scenario(args.config);
        if (invoked != command_name(scenario.command))
            throw qcasim::ValidationError("config command '" +
                                          std::string(command_name(scenario.command)) +
                                          "' does not match subcommand '" +
                                          invoked + "'");
        qcasim::RunOptions options;
        options.threads = args.threads;
        if (args.has_seed) options.seed = args.seed;
        qcasim::run_scenario_to_file(scenario, options, args.out);
        return 0;
    } catch (const qcasim::ContractError& e) {
        std::fprintf(stderr, "numerical contract violation: %s\n", e.what());
        return 3;
    } catch (const qcasim::ValidationError& e) {
        std::fprintf(stderr, "invalid scenario: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
