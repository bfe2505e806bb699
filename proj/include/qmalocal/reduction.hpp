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
 * Circuit-to-Hamiltonian compilers.
 *
 * Three-local layout: N computation qubits followed by T clock qubits; clock
 * qubit t (1-based) is global qubit N + t - 1. Time t is the unary clock
 * string with qubits 1..t set.
 *
 * Reference layout: an explicit (T+1)-level clock; basis index x + 2^N * t.
 */
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qmalocal/circuit.hpp"
#include "qmalocal/operators.hpp"

namespace qmalocal {

enum class ReductionMode { three_local, reference };

std::string_view to_string(ReductionMode mode);
/// Accepts "3local" / "three_local" and "reference".
ReductionMode parse_reduction_mode(std::string_view text);

struct ReductionParams {
    ReductionMode mode = ReductionMode::three_local;
    int penalty_exponent = 12;
    std::optional<double> penalty_override;

    /// T^penalty_exponent unless overridden.
    double penalty_weight(int num_gates) const;
};

inline int clock_qubit(int num_qubits, int t) { return num_qubits + t - 1; }

/// Basis index of |x> (x) |t^> in the three-local layout.
long unary_index(int num_qubits, long x, int t);

/// True iff the clock bits of `global_index` are 1...10...0.
bool is_legal_clock(long global_index, int num_qubits, int num_gates);

/// H_in + H_out + H_prop + H_clock on N + T qubits. Terms are ordered
/// in, out, prop (by t; sub-terms a, b, hop), clock (by (i, j)).
LocalHamiltonian build_3local(const Circuit &circuit,
                              const ReductionParams &params = {});

struct ReferenceParts {
    Matrix in;
    Matrix out;
    Matrix prop;

    Matrix total() const { return in + out + prop; }
};

/// H_in, H_out and H_prop with an explicit (T+1)-level clock.
ReferenceParts build_reference_parts(const Circuit &circuit);
Matrix build_reference(const Circuit &circuit);

struct HistoryState {
    StateVector unary; ///< N + T qubits
    Vector reference;  ///< length 2^N (T+1)
};

/// (T+1)^{-1/2} sum_t U_t...U_1 |xi,0> (x) |t>.
HistoryState history_state(const Circuit &circuit, const StateVector &proof);

/// Diagonal projector onto legal clock strings, on N + T qubits.
Matrix legal_projector(int num_qubits, int num_gates);

/// Pi A Pi restricted to the legal basis {|x> (x) |t^>}, ordered by t.
Matrix compress_legal(const Matrix &full_op, int num_qubits, int num_gates);

struct LegalDecomposition {
    double alpha1;
    Vector eta1; ///< zero when alpha1 == 0
    double alpha2;
    Vector eta2; ///< zero when alpha2 == 0
};

LegalDecomposition decompose_legal(const StateVector &state, int num_qubits,
                                   int num_gates);

/// CNF clause list; literals are signed 1-based variable numbers.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// Parses "p cnf v c" followed by 0-terminated clauses. Throws ParseError.
Cnf parse_dimacs(std::string_view text);

/// One diagonal projector per clause onto its violating assignment.
LocalHamiltonian sat_to_hamiltonian(const Cnf &cnf);

} // namespace qmalocal
