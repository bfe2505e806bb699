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
/**
 * @file
 * Completeness and soundness certificates for compiled instances.
 */
#pragma once

#include <string>
#include <string_view>

#include "qmalocal/circuit.hpp"
#include "qmalocal/operators.hpp"
#include "qmalocal/reduction.hpp"
#include "qmalocal/spectra.hpp"

namespace qmalocal {

/// Pass tolerance on the completeness side.
inline constexpr double kCompletenessTol = 1e-10;
/// Pass tolerance on the soundness chain.
inline constexpr double kSoundnessTol = 1e-9;

enum class Verdict { complete_ok, sound_ok, fail, promise_violated };

std::string_view to_string(Verdict v);

struct VerificationReport {
    std::string instance_id;
    std::string mode;
    int N = 0;
    int m = 0;
    int T = 0;
    double epsilon = 0.0;
    double p_max = 0.0;
    double lambda_min_3local = 0.0;
    double lambda_min_reference = 0.0;
    double a = 0.0; ///< epsilon / (T + 1)
    double chain_slack = 0.0; ///< lambda_3local - (lambda_ref - 9 / T^4)
    double c_est = 0.0;       ///< lambda_ref * T^3
    double sin2_theta_T = 0.0;
    bool penalty_floor_ok = false;
    double equivalence_maxdiff = 0.0;
    Verdict verdict = Verdict::fail;
};

/// `key = value` lines, keys equal to the field names, 15 significant digits.
std::string format_report(const VerificationReport &report);
/// Single line of space-separated key=value pairs.
std::string format_report_summary(const VerificationReport &report);

struct VerifyOptions {
    ReductionParams params;
    SpectralOptions spectral;
    std::string instance_id = "instance";
};

/// Certifies that the compiled Hamiltonian has an eigenvalue at most
/// epsilon / (T+1) when `proof` is accepted with probability >= 1 - epsilon.
VerificationReport verify_completeness(const Circuit &circuit,
                                       const StateVector &proof, double epsilon,
                                       const VerifyOptions &options = {});

/// Certifies lambda_3local >= min(1, lambda_ref - 9/T^4) and lambda_ref > 0
/// when every proof is accepted with probability < epsilon.
VerificationReport verify_soundness(const Circuit &circuit, double epsilon,
                                    const VerifyOptions &options = {});

/// |<eta|H|eta> - (1 - p_acc) / (T+1)| for the history state of `proof`.
double energy_identity_check(const Circuit &circuit, const StateVector &proof,
                             const ReductionParams &params = {});

struct ClockPenaltyAudit {
    double min_illegal_energy = 0.0; ///< over illegal-clock basis states
    double max_legal_energy = 0.0;   ///< over legal-clock basis states
    bool floor_ok = false;           ///< every illegal state >= penalty
    bool legal_zero = false;         ///< every legal state exactly 0
    double comp_norm_sum = 0.0;      ///< sum of in/out/prop term norms
    bool norm_bound_applies = false; ///< T >= N
    bool norm_bound_ok = false;      ///< comp_norm_sum <= 4T

    /// The norm bound is reported, not enforced, when T < N.
    bool passed() const {
        return floor_ok && legal_zero && (!norm_bound_applies || norm_bound_ok);
    }
};

/// Evaluates the clock group on every computational basis state.
ClockPenaltyAudit clock_penalty_audit(const LocalHamiltonian &h, int num_qubits,
                                      int num_gates, double penalty);

struct AngleDiagnostic {
    double cos_theta;
    double sin2_theta_T;
};

/// Angle between the null spaces of H_in + H_out and H_prop (reference form).
AngleDiagnostic angle_diagnostic(const Circuit &circuit);

enum class Decision { yes = 1, no = 0, promise_violated = -1 };

std::string_view to_string(Decision d);

/// 1 if lambda_min <= a + tol, 0 if lambda_min > b - tol, otherwise the
/// promise is violated.
Decision decide(double lambda_min, double a, double b, double tol = 1e-10);
Decision decide(const Matrix &op, double a, double b, double tol = 1e-10);
Decision decide(const LocalHamiltonian &h, double a, double b,
                double tol = 1e-10, const SpectralOptions &options = {});

/// c_est * 0.5 / T^3 = lambda_ref / 2, the default soundness threshold.
double default_soundness_threshold(const Circuit &circuit);

/// max |compress_legal(H_comp) - H_reference| entry.
double equivalence_maxdiff(const Circuit &circuit,
                           const ReductionParams &params = {});

} // namespace qmalocal
