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
#include "qmalocal/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qmalocal {

namespace {

constexpr int kRitzRefineSize = 4;
constexpr double kPreconditionFloor = 1e-6;

void require_hermitian(const Matrix &op, const char *what) {
    if (op.rows() != op.cols()) {
        throw std::invalid_argument(std::string(what) + ": operator not square");
    }
    if (op.size() == 0) {
        throw std::invalid_argument(std::string(what) + ": empty operator");
    }
    if (op.rows() > kMaxDenseDim) {
        throw DimensionError(std::string(what) + ": dimension " +
                             std::to_string(op.rows()) +
                             " exceeds the dense limit");
    }
    const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
    if (hermiticity_defect(op) > kHermitianTol * scale) {
        throw std::invalid_argument(std::string(what) +
                                    ": operator is not Hermitian");
    }
}

bool is_diagonal(const Matrix &op) {
    for (long c = 0; c < op.cols(); ++c) {
        for (long r = 0; r < op.rows(); ++r) {
            if (r != c && op(r, c) != Complex(0.0, 0.0)) {
                return false;
            }
        }
    }
    return true;
}

/// Projects out span(basis) twice; returns false if little is left.
bool orthogonalize(const Matrix &basis, Vector &v) {
    const double before = v.norm();
    if (before == 0.0) {
        return false;
    }
    for (int pass = 0; pass < 2 && basis.cols() > 0; ++pass) {
        v -= basis * (basis.adjoint() * v);
    }
    const double after = v.norm();
    if (after <= 1e-10 * before) {
        return false;
    }
    v /= after;
    return true;
}

} // namespace

std::string_view to_string(SpectralMethod method) {
    return method == SpectralMethod::dense ? "dense" : "iterative";
}

SpectralResult min_eigenvalue(const Matrix &op, const SpectralOptions &) {
    require_hermitian(op, "min_eigenvalue");
    const long dim = op.rows();
    SpectralResult out;
    out.method = SpectralMethod::dense;
    out.iterations = 1;

    if (is_diagonal(op)) {
        long best = 0;
        for (long i = 1; i < dim; ++i) {
            if (op(i, i).real() < op(best, best).real()) {
                best = i;
            }
        }
        out.lambda_min = op(best, best).real();
        out.eigenvector = Vector::Unit(dim, best);
        out.residual = 0.0;
        return out;
    }

    Eigen::SelfAdjointEigenSolver<Matrix> eig(op);
    if (eig.info() != Eigen::Success) {
        throw ConvergenceError("min_eigenvalue: dense eigensolver failed");
    }
    // Rayleigh-Ritz over the lowest eigenvectors. Entries of H V are formed
    // directly, so large diagonal penalties do not swamp small eigenvalues.
    const long k = std::min<long>(dim, kRitzRefineSize);
    const Matrix basis = eig.eigenvectors().leftCols(k);
    const Matrix image = op * basis;
    Matrix projected = basis.adjoint() * image;
    projected = 0.5 * (projected + projected.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> ritz(projected);
    Vector v = basis * ritz.eigenvectors().col(0);
    v /= v.norm();
    const Vector hv = op * v;
    out.lambda_min = v.dot(hv).real();
    out.residual = (hv - out.lambda_min * v).norm();
    out.eigenvector = std::move(v);
    return out;
}

SpectralResult min_eigenvalue(const LocalHamiltonian &h,
                              const SpectralOptions &options) {
    h.validate();
    const long dim = pow2(h.n);
    if (dim <= options.dense_limit && dim <= kMaxDenseDim &&
        !options.force_iterative) {
        return min_eigenvalue(assemble(h), options);
    }
    const MatVec apply = [&h](const Vector &x, Vector &y) {
        apply_hamiltonian(h, x, y);
    };
    return davidson_min_eigenvalue(apply, hamiltonian_diagonal(h), options);
}

SpectralResult davidson_min_eigenvalue(const MatVec &apply,
                                       const Eigen::VectorXd &diagonal,
                                       const SpectralOptions &options) {
    const long dim = diagonal.size();
    if (dim == 0) {
        throw std::invalid_argument("davidson: empty operator");
    }
    const int max_subspace =
        static_cast<int>(std::min<long>(std::max(options.max_subspace, 4), dim));
    const double d_min = diagonal.minCoeff();

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto random_vector = [&] {
        Vector v(dim);
        for (long i = 0; i < dim; ++i) {
            // damp directions with large diagonal so penalties start small
            const double damp = 1.0 / (1.0 + std::max(0.0, diagonal(i) - d_min));
            v(i) = damp * Complex(normal(rng), normal(rng));
        }
        return v;
    };

    Matrix basis(dim, 0);
    Matrix image(dim, 0);
    auto extend = [&](Vector v) {
        if (!orthogonalize(basis, v)) {
            return false;
        }
        Vector hv(dim);
        apply(v, hv);
        basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
        image.conservativeResize(Eigen::NoChange, image.cols() + 1);
        basis.col(basis.cols() - 1) = v;
        image.col(image.cols() - 1) = hv;
        return true;
    };
    while (!extend(random_vector())) {
    }

    SpectralResult out;
    out.method = SpectralMethod::iterative;
    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        Matrix projected = basis.adjoint() * image;
        projected = 0.5 * (projected + projected.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Matrix> ritz(projected);
        const double theta = ritz.eigenvalues()(0);

        Vector u = basis * ritz.eigenvectors().col(0);
        u /= u.norm();
        Vector hu(dim);
        apply(u, hu);
        const double lambda = u.dot(hu).real();
        Vector r = hu - lambda * u;
        const double rnorm = r.norm();
        out.iterations = iter;
        if (rnorm <= options.tol || basis.cols() == dim) {
            out.lambda_min = lambda;
            out.residual = rnorm;
            out.eigenvector = std::move(u);
            return out;
        }

        if (basis.cols() >= max_subspace) {
            const long keep = std::min<long>(kRitzRefineSize, basis.cols());
            const Matrix y = ritz.eigenvectors().leftCols(keep);
            basis = (basis * y).eval();
            image = (image * y).eval();
        }

        Vector t(dim);
        for (long i = 0; i < dim; ++i) {
            double denom = diagonal(i) - theta;
            if (std::abs(denom) < kPreconditionFloor) {
                denom = denom < 0 ? -kPreconditionFloor : kPreconditionFloor;
            }
            t(i) = -r(i) / denom;
        }
        if (!extend(std::move(t)) && !extend(r)) {
            while (!extend(random_vector())) {
            }
        }
    }
    throw ConvergenceError("davidson: no convergence after " +
                           std::to_string(options.max_iterations) +
                           " iterations");
}

double rayleigh(const Matrix &op, const Vector &state) {
    if (op.rows() != op.cols() || op.cols() != state.size()) {
        throw std::invalid_argument("rayleigh: dimension mismatch");
    }
    const double nrm2 = state.squaredNorm();
    if (nrm2 == 0.0) {
        throw std::invalid_argument("rayleigh: zero vector");
    }
    return state.dot(op * state).real() / nrm2;
}

double rayleigh(const LocalHamiltonian &h, const Vector &state) {
    const double nrm2 = state.squaredNorm();
    if (nrm2 == 0.0) {
        throw std::invalid_argument("rayleigh: zero vector");
    }
    Vector hv(state.size());
    apply_hamiltonian(h, state, hv);
    return state.dot(hv).real() / nrm2;
}

Matrix nullspace_basis(const Matrix &op, double tol) {
    require_hermitian(op, "nullspace_basis");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(op);
    long count = 0;
    while (count < op.rows() && eig.eigenvalues()(count) <= tol) {
        ++count;
    }
    return eig.eigenvectors().leftCols(count);
}

double principal_angle(const Matrix &basis_a, const Matrix &basis_b) {
    if (basis_a.cols() == 0 || basis_b.cols() == 0) {
        throw std::invalid_argument("principal_angle: empty basis");
    }
    if (basis_a.rows() != basis_b.rows()) {
        throw std::invalid_argument("principal_angle: ambient dimension mismatch");
    }
    const Matrix overlap = basis_a.adjoint() * basis_b;
    Eigen::JacobiSVD<Matrix> svd(overlap);
    return std::clamp(svd.singularValues()(0), 0.0, 1.0);
}

} // namespace qmalocal
