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
 * Smallest eigenvalues, Rayleigh quotients, null spaces and principal angles.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "qmalocal/core.hpp"
#include "qmalocal/operators.hpp"

namespace qmalocal {

enum class SpectralMethod { dense, iterative };

std::string_view to_string(SpectralMethod method);

struct SpectralResult {
    double lambda_min = 0.0;
    double residual = 0.0; ///< ||H v - lambda v||
    SpectralMethod method = SpectralMethod::dense;
    int iterations = 0;
    Vector eigenvector;
};

struct SpectralOptions {
    /// Residual target of the iterative method.
    double tol = 1e-9;
    /// Operators of dimension above this go to the iterative method.
    long dense_limit = kMaxDenseDim;
    bool force_iterative = false;
    int max_iterations = 5000;
    int max_subspace = 48;
    std::uint64_t seed = 0;
};

/// Applies a Hermitian operator: y = H x.
using MatVec = std::function<void(const Vector &x, Vector &y)>;

/// Dense eigendecomposition, refined by a Rayleigh-Ritz step over the lowest
/// eigenvectors. Throws std::invalid_argument for non-Hermitian input and
/// DimensionError above kMaxDenseDim.
SpectralResult min_eigenvalue(const Matrix &op,
                              const SpectralOptions &options = {});

/// Dense for 2^n <= dense_limit, Davidson iteration otherwise.
SpectralResult min_eigenvalue(const LocalHamiltonian &h,
                              const SpectralOptions &options = {});

/// Davidson iteration with diagonal preconditioning and a seeded random start.
/// Throws ConvergenceError when the iteration cap is reached.
SpectralResult davidson_min_eigenvalue(const MatVec &apply,
                                       const Eigen::VectorXd &diagonal,
                                       const SpectralOptions &options = {});

/// <v|H|v> / <v|v>. Throws std::invalid_argument on a zero vector.
double rayleigh(const Matrix &op, const Vector &state);
double rayleigh(const LocalHamiltonian &h, const Vector &state);

/// Orthonormal columns spanning the eigenspace of eigenvalues <= tol.
Matrix nullspace_basis(const Matrix &op, double tol = 1e-8);

/// Cosine of the smallest principal angle: largest singular value of A^dagger B.
double principal_angle(const Matrix &basis_a, const Matrix &basis_b);

} // namespace qmalocal
