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
#include "qmalocal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qmalocal/io.hpp"

namespace qmalocal {

namespace {

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    }
}

struct Analysis {
    VerificationReport report;
    LocalHamiltonian three_local;
    Matrix reference;
};

/// Fills every measured field; the verdict is left to the caller.
Analysis analyze(const Circuit &circuit, double epsilon,
                 const VerifyOptions &options) {
    const int nq = circuit.num_qubits();
    const int T = circuit.num_gates();
    Analysis an;
    auto &r = an.report;
    r.instance_id = options.instance_id;
    r.mode = std::string(to_string(options.params.mode));
    r.N = nq;
    r.m = circuit.proof_qubits();
    r.T = T;
    r.epsilon = epsilon;
    r.p_max = optimal_acceptance(circuit).p_max;

    an.three_local = build_3local(circuit, options.params);
    an.reference = build_reference(circuit);

    r.lambda_min_3local =
        min_eigenvalue(an.three_local, options.spectral).lambda_min;
    r.lambda_min_reference =
        min_eigenvalue(an.reference, options.spectral).lambda_min;
    r.a = epsilon / (T + 1.0);
    r.chain_slack = r.lambda_min_3local -
                    (r.lambda_min_reference - 9.0 / std::pow(T, 4));
    r.c_est = r.lambda_min_reference * std::pow(T, 3);

    r.sin2_theta_T = angle_diagnostic(circuit).sin2_theta_T;

    r.penalty_floor_ok =
        clock_penalty_audit(an.three_local, nq, T,
                            options.params.penalty_weight(T))
            .passed();

    const auto comp = select_groups(
        an.three_local, {TermGroup::in, TermGroup::out, TermGroup::prop});
    r.equivalence_maxdiff =
        (compress_legal(assemble(comp), nq, T) - an.reference)
            .cwiseAbs()
            .maxCoeff();
    return an;
}

} // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::complete_ok:
        return "complete-ok";
    case Verdict::sound_ok:
        return "sound-ok";
    case Verdict::promise_violated:
        return "promise-violated";
    case Verdict::fail:
        break;
    }
    return "fail";
}

std::string_view to_string(Decision d) {
    switch (d) {
    case Decision::yes:
        return "1";
    case Decision::no:
        return "0";
    case Decision::promise_violated:
        break;
    }
    return "promise-violated";
}

namespace {

std::vector<std::pair<std::string, std::string>>
report_fields(const VerificationReport &r) {
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    return {
        {"instance_id", r.instance_id},
        {"mode", r.mode},
        {"N", std::to_string(r.N)},
        {"m", std::to_string(r.m)},
        {"T", std::to_string(r.T)},
        {"epsilon", format_double(r.epsilon)},
        {"p_max", format_double(r.p_max)},
        {"lambda_min_3local", format_double(r.lambda_min_3local)},
        {"lambda_min_reference", format_double(r.lambda_min_reference)},
        {"a", format_double(r.a)},
        {"chain_slack", format_double(r.chain_slack)},
        {"c_est", format_double(r.c_est)},
        {"sin2_theta_T", format_double(r.sin2_theta_T)},
        {"penalty_floor_ok", b(r.penalty_floor_ok)},
        {"equivalence_maxdiff", format_double(r.equivalence_maxdiff)},
        {"verdict", std::string(to_string(r.verdict))},
    };
}

} // namespace

std::string format_report(const VerificationReport &report) {
    std::string out;
    for (const auto &[k, v] : report_fields(report)) {
        out += k + " = " + v + "\n";
    }
    return out;
}

std::string format_report_summary(const VerificationReport &report) {
    std::string out;
    for (const auto &[k, v] : report_fields(report)) {
        if (!out.empty()) {
            out += ' ';
        }
        out += k + "=" + v;
    }
    return out + "\n";
}

VerificationReport verify_completeness(const Circuit &circuit,
                                       const StateVector &proof, double epsilon,
                                       const VerifyOptions &options) {
    require_epsilon(epsilon);
    auto an = analyze(circuit, epsilon, options);
    auto &r = an.report;

    const double p_acc = acceptance_probability(circuit, proof);
    if (p_acc < 1.0 - epsilon - 1e-12) {
        r.verdict = Verdict::promise_violated;
        return r;
    }
    const auto history = history_state(circuit, proof);
    double energy = 0.0;
    double lambda = 0.0;
    if (options.params.mode == ReductionMode::three_local) {
        energy = rayleigh(an.three_local, history.unary.amplitudes());
        lambda = r.lambda_min_3local;
    } else {
        energy = rayleigh(an.reference, history.reference);
        lambda = r.lambda_min_reference;
    }
    const bool ok = energy <= r.a + kCompletenessTol &&
                    lambda <= r.a + kCompletenessTol;
    r.verdict = ok ? Verdict::complete_ok : Verdict::fail;
    return r;
}

VerificationReport verify_soundness(const Circuit &circuit, double epsilon,
                                    const VerifyOptions &options) {
    require_epsilon(epsilon);
    auto an = analyze(circuit, epsilon, options);
    auto &r = an.report;
    if (r.p_max >= epsilon) {
        r.verdict = Verdict::promise_violated;
        return r;
    }
    const double floor =
        std::min(1.0, r.lambda_min_reference - 9.0 / std::pow(r.T, 4));
    const bool ok = r.lambda_min_3local >= floor - kSoundnessTol &&
                    r.lambda_min_reference > 0.0;
    r.verdict = ok ? Verdict::sound_ok : Verdict::fail;
    return r;
}

double energy_identity_check(const Circuit &circuit, const StateVector &proof,
                             const ReductionParams &params) {
    const auto h = build_3local(circuit, params);
    const auto history = history_state(circuit, proof);
    const double energy = rayleigh(h, history.unary.amplitudes());
    const double p_acc = acceptance_probability(circuit, proof);
    return std::abs(energy - (1.0 - p_acc) / (circuit.num_gates() + 1.0));
}

ClockPenaltyAudit clock_penalty_audit(const LocalHamiltonian &h, int num_qubits,
                                      int num_gates, double penalty) {
    if (h.n != num_qubits + num_gates) {
        throw std::invalid_argument("clock_penalty_audit: n != N + T");
    }
    if (h.n > 24) {
        throw DimensionError("clock_penalty_audit: basis enumeration limited "
                             "to 24 qubits");
    }
    const auto clock = select_groups(h, {TermGroup::clock});
    const Eigen::VectorXd energy = hamiltonian_diagonal(clock);

    ClockPenaltyAudit audit;
    audit.min_illegal_energy = std::numeric_limits<double>::infinity();
    for (long i = 0; i < energy.size(); ++i) {
        if (is_legal_clock(i, num_qubits, num_gates)) {
            audit.max_legal_energy = std::max(audit.max_legal_energy, energy(i));
        } else {
            audit.min_illegal_energy =
                std::min(audit.min_illegal_energy, energy(i));
        }
    }
    audit.floor_ok = audit.min_illegal_energy >= penalty;
    audit.legal_zero = audit.max_legal_energy == 0.0;

    const auto comp =
        select_groups(h, {TermGroup::in, TermGroup::out, TermGroup::prop});
    audit.comp_norm_sum = norm_bound(comp);
    audit.norm_bound_applies = num_gates >= num_qubits;
    audit.norm_bound_ok = audit.comp_norm_sum <= 4.0 * num_gates;
    return audit;
}

AngleDiagnostic angle_diagnostic(const Circuit &circuit) {
    const auto parts = build_reference_parts(circuit);
    const double cos_theta = principal_angle(nullspace_basis(parts.in + parts.out),
                                             nullspace_basis(parts.prop));
    const double sin2 = std::max(0.0, 1.0 - cos_theta * cos_theta);
    return AngleDiagnostic{cos_theta, sin2 * circuit.num_gates()};
}

Decision decide(double lambda_min, double a, double b, double tol) {
    if (!(b - a > 0.0)) {
        throw std::invalid_argument("decide: thresholds need b > a");
    }
    if (lambda_min <= a + tol) {
        return Decision::yes;
    }
    if (lambda_min > b - tol) {
        return Decision::no;
    }
    return Decision::promise_violated;
}

Decision decide(const Matrix &op, double a, double b, double tol) {
    return decide(min_eigenvalue(op).lambda_min, a, b, tol);
}

Decision decide(const LocalHamiltonian &h, double a, double b, double tol,
                const SpectralOptions &options) {
    return decide(min_eigenvalue(h, options).lambda_min, a, b, tol);
}

double default_soundness_threshold(const Circuit &circuit) {
    const double T = circuit.num_gates();
    const double c_est =
        min_eigenvalue(build_reference(circuit)).lambda_min * std::pow(T, 3);
    return c_est * 0.5 / std::pow(T, 3);
}

double equivalence_maxdiff(const Circuit &circuit,
                           const ReductionParams &params) {
    const auto comp = select_groups(build_3local(circuit, params),
                                    {TermGroup::in, TermGroup::out,
                                     TermGroup::prop});
    return (compress_legal(assemble(comp), circuit.num_qubits(),
                           circuit.num_gates()) -
            build_reference(circuit))
        .cwiseAbs()
        .maxCoeff();
}

} // namespace qmalocal
