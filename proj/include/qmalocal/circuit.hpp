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
 * Verifier circuits: gates, states, exact simulation and the optimal
 * acceptance oracle.
 *
 * Bit ordering: qubit i is bit i of a basis-state index (least significant
 * first). Two-qubit gate matrices are indexed by 2*b(q1) + b(q2), where q1 is
 * the first listed target, so textbook CNOT/CZ matrices read naturally.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmalocal/core.hpp"

namespace qmalocal {

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kNormTol = 1e-12;

struct Gate {
    std::string name;
    std::vector<int> targets;
    Matrix matrix;

    int arity() const { return static_cast<int>(targets.size()); }
};

/// Matrix of a built-in gate (I, X, Y, Z, H, S, TG, CNOT, CZ).
/// Throws std::invalid_argument for unknown names.
Matrix named_gate_matrix(std::string_view name);

/// Checked gate construction; throws std::invalid_argument.
Gate make_gate(std::string name, std::vector<int> targets, Matrix matrix);
Gate make_named_gate(std::string_view name, std::vector<int> targets);

class Circuit {
  public:
    /// @param num_qubits N, computation qubits
    /// @param proof_qubits m, qubits 0..m-1 carry the proof; the rest start in |0>
    Circuit(int num_qubits, int proof_qubits, std::vector<Gate> gates);

    int num_qubits() const { return num_qubits_; }
    int proof_qubits() const { return proof_qubits_; }
    int num_gates() const { return static_cast<int>(gates_.size()); }
    const std::vector<Gate> &gates() const { return gates_; }
    const Gate &gate(int t) const { return gates_.at(t - 1); } // 1-based, U_t

    /// T >= N is assumed by the norm bound of the soundness argument only.
    bool satisfies_size_assumption() const {
        return num_gates() >= num_qubits_;
    }

  private:
    int num_qubits_;
    int proof_qubits_;
    std::vector<Gate> gates_;
};

class StateVector {
  public:
    /// Throws std::invalid_argument unless the length is 2^n and the norm is 1.
    StateVector(int num_qubits, Vector amplitudes);

    static StateVector basis(int num_qubits, long index);
    /// Rescales to unit norm; throws on a zero vector.
    static StateVector normalized(int num_qubits, Vector amplitudes);

    int num_qubits() const { return num_qubits_; }
    long dim() const { return amplitudes_.size(); }
    const Vector &amplitudes() const { return amplitudes_; }

  private:
    int num_qubits_;
    Vector amplitudes_;
};

/// Parses the line-oriented circuit format. Throws ParseError.
Circuit parse_circuit(std::string_view text);

/// Applies one gate in place to a state over n qubits.
void apply_gate(const Gate &gate, Vector &state, int num_qubits);

/// Full 2^n operator of a gate, identity on the other qubits.
Matrix gate_operator(const Gate &gate, int num_qubits);

/// U_T...U_1 (proof (x) |0...0>).
StateVector run_circuit(const Circuit &circuit, const StateVector &proof);

/// Probability of reading 1 on qubit 0 of a state.
double output_probability(const Vector &state);

double acceptance_probability(const Circuit &circuit, const StateVector &proof);

struct OptimalAcceptance {
    double p_max;
    StateVector proof;
};

/// Largest eigenvalue of the m-qubit acceptance operator and a maximizing
/// proof. Dense, so m is limited to 12.
OptimalAcceptance optimal_acceptance(const Circuit &circuit);

/// Acceptance operator (I (x) <0|_anc) U^dagger P_1 U (I (x) |0>_anc).
Matrix acceptance_operator(const Circuit &circuit);

} // namespace qmalocal
