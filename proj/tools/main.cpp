// Copyright 2026 The qmalocal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <iostream>

#include <CLI11.hpp>

#include "qmalocal/cli.hpp"

int main(int argc, char **argv) {
    using qmalocal::cli::RunConfig;
    RunConfig cfg;
    std::string mode = "3local";

    CLI::App app{"Compile verifier circuits into 3-local Hamiltonians and "
                 "certify their spectra"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--mode", mode, "Construction: 3local or reference")
            ->check(CLI::IsMember({"3local", "reference"}));
        sub->add_option("--penalty-exponent", cfg.penalty_exponent,
                        "Clock penalty T^k exponent");
        sub->add_option("--epsilon", cfg.epsilon, "Promise parameter in (0, 1/3]");
        sub->add_option("--seed", cfg.seed, "Start-vector seed of the iterative solver");
        sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"text"}));
    };

    auto *compile = app.add_subcommand("compile", "Circuit file to Hamiltonian");
    auto *spectrum = app.add_subcommand("spectrum", "Smallest eigenvalue of a Hamiltonian file");
    auto *verify = app.add_subcommand("verify", "Completeness or soundness report");
    auto *sat2ham = app.add_subcommand("sat2ham", "DIMACS CNF to diagonal Hamiltonian");
    auto *angle = app.add_subcommand("angle", "Null-space angle diagnostic");
    for (auto *sub : {compile, spectrum, verify, sat2ham, angle}) {
        add_common(sub);
        sub->add_option("input", cfg.inputs, "Input file")->required();
    }
    std::string proof_path;
    auto *complete_opt =
        verify->add_option("--complete", proof_path, "Proof vector file");
    auto *sound_flag = verify->add_flag("--sound", cfg.sound, "Soundness check");
    complete_opt->excludes(sound_flag);
    verify->add_flag("--summary", cfg.summary, "Single-line report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : qmalocal::cli::kParseError;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.mode = qmalocal::parse_reduction_mode(mode);
    if (!proof_path.empty()) {
        cfg.proof_path = proof_path;
    }
    return qmalocal::cli::run(cfg, std::cout, std::cerr);
}
