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
 * Local-operator algebra: Hermitian terms on a few qubits, their embedding
 * into the full 2^n space, and the [0,1] normalization of term lists.
 *
 * A term's matrix is indexed by local basis states whose bit j is the value
 * of qubit support[j], matching the global least-significant-first order.
 */
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmalocal/core.hpp"

namespace qmalocal {

inline constexpr double kHermitianTol = 1e-12;

/// Group tags used in term labels ("<group>:<index...>").
enum class TermGroup { in, out, prop, clock, sat, other };

std::string_view to_string(TermGroup g);
TermGroup group_of_label(std::string_view label);

struct LocalTerm {
    std::string label;
    std::vector<int> support; ///< sorted ascending, distinct
    Matrix matrix;            ///< Hermitian, 2^k x 2^k
    double weight = 1.0;

    int locality() const { return static_cast<int>(support.size()); }
    TermGroup group() const { return group_of_label(label); }
};

/// Checked construction; throws std::invalid_argument.
LocalTerm make_term(std::string label, std::vector<int> support, Matrix matrix,
                    double weight = 1.0);

struct Thresholds {
    double a;
    double b;
};

struct LocalHamiltonian {
    int n = 0;
    std::vector<LocalTerm> terms;
    std::optional<Thresholds> thresholds;

    /// Throws std::invalid_argument if a support index is out of range or the
    /// thresholds have no gap.
    void validate() const;
    int num_terms() const { return static_cast<int>(terms.size()); }
};

/// Terms whose group is one of the given groups, in original order.
LocalHamiltonian select_groups(const LocalHamiltonian &h,
                               std::initializer_list<TermGroup> groups);

/// Re-indexes an operator given on `qubits` (first entry most significant,
/// the gate-matrix convention) into the local basis of `support`, acting as
/// identity on the remaining support qubits.
Matrix lift_to_support(const Matrix &op, std::span<const int> qubits,
                       std::span<const int> support);

/// weight * matrix on the support, identity elsewhere. Dense, n <= 13.
Matrix embed(const LocalTerm &term, int n);

/// Dense sum of all embedded terms in list order. n <= 13.
Matrix assemble(const LocalHamiltonian &h);

/// y += (weight * matrix on support) x, without forming the 2^n operator.
void apply_term(const LocalTerm &term, const Vector &x, Vector &y);

/// y = H x, summing terms in list order. n <= 30.
void apply_hamiltonian(const LocalHamiltonian &h, const Vector &x, Vector &y);

/// Diagonal of the full operator.
Eigen::VectorXd hamiltonian_diagonal(const LocalHamiltonian &h);

/// Maximum support size; 0 for an empty Hamiltonian.
int locality(const LocalHamiltonian &h);

/// Exact spectral norm |weight| * ||matrix||.
double term_norm(const LocalTerm &term);

/// Sum of term norms, an upper bound on ||H||.
double norm_bound(const LocalHamiltonian &h);

struct NormalizedInstance {
    LocalHamiltonian hamiltonian; ///< thresholds set to (a', b')
    double scale;                 ///< s = 1 / (2 max_j ||H_j||)
};

/// Scales every term by s so its norm is at most 1/2, then adds I/2 to each;
/// thresholds map to s*a + r/2 and s*b + r/2. Throws on a zero Hamiltonian.
NormalizedInstance normalize_terms(const LocalHamiltonian &h, double a,
                                   double b);

} // namespace qmalocal
