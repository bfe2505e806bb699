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
#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qmalocal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest qubit count any operator may address.
inline constexpr int kMaxQubits = 30;
/// Largest qubit count for which full dense matrices are formed.
inline constexpr int kMaxDenseQubits = 13;
/// Largest dimension handled by dense eigendecomposition.
inline constexpr long kMaxDenseDim = 1L << kMaxDenseQubits;

/// Malformed textual input (circuit, Hamiltonian, DIMACS, proof files).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested object would exceed a size guard.
class DimensionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver hit its iteration cap.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Max |M - M^dagger| entry.
inline double hermiticity_defect(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Max |M^dagger M - I| entry.
inline double unitarity_defect(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()))
        .cwiseAbs()
        .maxCoeff();
}

inline long pow2(int k) { return 1L << k; }

} // namespace qmalocal
