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
#include "qmalocal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qmalocal/io.hpp"
#include "qmalocal/spectra.hpp"
#include "qmalocal/verify.hpp"

namespace qmalocal::cli {

namespace {

const std::string &single_input(const RunConfig &cfg) {
    if (cfg.inputs.size() != 1) {
        throw std::invalid_argument(cfg.command + ": expected one input file");
    }
    return cfg.inputs.front();
}

/// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig &cfg, std::ostream &out, const std::string &text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write '" + cfg.out_path + "'");
    }
    file << text;
}

Circuit load_circuit(const std::string &path, std::ostream &err) {
    Circuit c = parse_circuit(read_text_file(path));
    if (!c.satisfies_size_assumption()) {
        err << "warning: T = " << c.num_gates() << " < N = " << c.num_qubits()
            << "; the 4T norm bound is reported but not assumed\n";
    }
    return c;
}

ReductionParams params_of(const RunConfig &cfg) {
    ReductionParams p;
    p.mode = cfg.mode;
    p.penalty_exponent = cfg.penalty_exponent;
    return p;
}

SpectralOptions spectral_of(const RunConfig &cfg) {
    SpectralOptions o;
    o.seed = cfg.seed;
    return o;
}

int exit_code_of(Verdict v) {
    switch (v) {
    case Verdict::complete_ok:
    case Verdict::sound_ok:
        return kPass;
    case Verdict::promise_violated:
        return kPromiseViolated;
    case Verdict::fail:
        break;
    }
    return kFail;
}

} // namespace

void RunConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon <= 1.0 / 3.0)) {
        throw std::invalid_argument("--epsilon must lie in (0, 1/3]");
    }
    if (penalty_exponent < 1) {
        throw std::invalid_argument("--penalty-exponent must be >= 1");
    }
    if (format != "text") {
        throw std::invalid_argument("--format supports only 'text'");
    }
}

int cmd_compile(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const Circuit c = load_circuit(single_input(cfg), err);
    if (cfg.mode == ReductionMode::reference) {
        emit(cfg, out, write_dense_matrix(build_reference(c)));
    } else {
        emit(cfg, out, write_hamiltonian(build_3local(c, params_of(cfg))));
    }
    return kPass;
}

int cmd_spectrum(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    const auto op = read_operator(read_text_file(single_input(cfg)));
    const auto options = spectral_of(cfg);
    SpectralResult res;
    std::optional<Thresholds> thresholds;
    if (const auto *h = std::get_if<LocalHamiltonian>(&op)) {
        res = min_eigenvalue(*h, options);
        thresholds = h->thresholds;
    } else {
        res = min_eigenvalue(std::get<Matrix>(op), options);
    }
    std::string text = "lambda_min = " + format_double(res.lambda_min) + "\n" +
                       "residual = " + format_double(res.residual) + "\n" +
                       "method = " + std::string(to_string(res.method)) + "\n" +
                       "iterations = " + std::to_string(res.iterations) + "\n";
    if (thresholds) {
        text += "decision = " +
                std::string(to_string(
                    decide(res.lambda_min, thresholds->a, thresholds->b))) +
                "\n";
    }
    emit(cfg, out, text);
    return kPass;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const auto &path = single_input(cfg);
    if (cfg.sound == cfg.proof_path.has_value()) {
        throw std::invalid_argument(
            "verify: give exactly one of --complete <proof> or --sound");
    }
    const Circuit c = load_circuit(path, err);
    VerifyOptions options;
    options.params = params_of(cfg);
    options.spectral = spectral_of(cfg);
    options.instance_id = std::filesystem::path(path).stem().string();

    VerificationReport report;
    if (cfg.sound) {
        report = verify_soundness(c, cfg.epsilon, options);
    } else {
        const auto proof =
            read_proof(read_text_file(*cfg.proof_path), c.proof_qubits());
        if (std::abs(proof.raw_norm - 1.0) > 1e-6) {
            err << "warning: proof norm " << format_double(proof.raw_norm)
                << " normalized to 1\n";
        }
        report = verify_completeness(c, proof.state, cfg.epsilon, options);
    }
    emit(cfg, out,
         cfg.summary ? format_report_summary(report) : format_report(report));
    return exit_code_of(report.verdict);
}

int cmd_sat2ham(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    const Cnf cnf = parse_dimacs(read_text_file(single_input(cfg)));
    LocalHamiltonian h;
    try {
        h = sat_to_hamiltonian(cnf);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    emit(cfg, out, write_hamiltonian(h));
    return kPass;
}

int cmd_angle(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const Circuit c = load_circuit(single_input(cfg), err);
    const auto diag = angle_diagnostic(c);
    emit(cfg, out,
         "cos_theta = " + format_double(diag.cos_theta) + "\n" +
             "sin2_theta_T = " + format_double(diag.sin2_theta_T) + "\n");
    return kPass;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        cfg.validate();
        if (cfg.command == "compile") {
            return cmd_compile(cfg, out, err);
        }
        if (cfg.command == "spectrum") {
            return cmd_spectrum(cfg, out, err);
        }
        if (cfg.command == "verify") {
            return cmd_verify(cfg, out, err);
        }
        if (cfg.command == "sat2ham") {
            return cmd_sat2ham(cfg, out, err);
        }
        if (cfg.command == "angle") {
            return cmd_angle(cfg, out, err);
        }
        err << "error: unknown command '" << cfg.command << "'\n";
        return kParseError;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << "\n";
        return kDimensionError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const ConvergenceError &e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

} // namespace qmalocal::cli
