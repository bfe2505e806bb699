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
 * Text formats: Hamiltonian interchange, dense matrix dumps, proof vectors.
 *
 * Interchange layout:
 *
 *     n <n>
 *     thresholds <a> <b>        (optional)
 *     terms <r>
 *     <label> k <k> q <i1..ik> w <weight>
 *     <2^k rows of 2^k entries "re,im">
 *     ...
 *
 * Dense dumps start with `matrix <dim>` followed by dim rows.
 */
#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qmalocal/circuit.hpp"
#include "qmalocal/operators.hpp"

namespace qmalocal {

/// 15 significant digits.
std::string format_double(double x);
std::string format_complex(Complex z);

std::string write_hamiltonian(const LocalHamiltonian &h);
LocalHamiltonian read_hamiltonian(std::string_view text);

std::string write_dense_matrix(const Matrix &m);
Matrix read_dense_matrix(std::string_view text);

/// Either format, detected from the first keyword.
std::variant<LocalHamiltonian, Matrix> read_operator(std::string_view text);

struct ProofLoad {
    StateVector state;
    double raw_norm; ///< norm before normalization
};

/// 2^m lines of "re,im"; the vector is normalized on load.
ProofLoad read_proof(std::string_view text, int proof_qubits);

/// Whole file as a string; throws std::runtime_error if unreadable.
std::string read_text_file(const std::string &path);

} // namespace qmalocal
