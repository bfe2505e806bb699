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
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qmalocal/reduction.hpp"
#include "qmalocal/spectra.hpp"

using namespace qmalocal;

namespace {

Matrix diag(std::initializer_list<double> d) {
    Vector v(static_cast<long>(d.size()));
    long i = 0;
    for (double x : d) {
        v(i++) = x;
    }
    return v.asDiagonal();
}

LocalHamiltonian random_local(int n, int r, std::mt19937_64 &rng) {
    LocalHamiltonian h;
    h.n = n;
    std::uniform_int_distribution<int> q(0, n - 1);
    for (int j = 0; j < r; ++j) {
        int a = q(rng);
        int b = q(rng);
        while (b == a) {
            b = q(rng);
        }
        h.terms.push_back(make_term("other", {std::min(a, b), std::max(a, b)},
                                    oracle::random_hermitian(4, rng)));
    }
    return h;
}

} // namespace

TEST(MinEigenvalue, Examples) {
    EXPECT_EQ(min_eigenvalue(diag({0, 1})).lambda_min, 0.0);
    EXPECT_EQ(min_eigenvalue(Matrix(-named_gate_matrix("Z"))).lambda_min, -1.0);

    const auto h = build_3local(parse_circuit("qubits 1\nproof 1\nX 0\n"));
    const auto res = min_eigenvalue(h);
    EXPECT_NEAR(res.lambda_min, 0.0, 1e-10);
    EXPECT_EQ(res.method, SpectralMethod::dense);
    EXPECT_LE(res.residual, 1e-8);
}

TEST(MinEigenvalue, RejectsBadInput) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(min_eigenvalue(m), std::invalid_argument);
    EXPECT_THROW(min_eigenvalue(Matrix(2, 3)), std::invalid_argument);
    EXPECT_THROW(min_eigenvalue(Matrix(0, 0)), std::invalid_argument);
}

TEST(MinEigenvalue, MatchesPlainSolverOnRandomMatrices) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix h = oracle::random_hermitian(16, rng);
        const auto res = min_eigenvalue(h);
        EXPECT_NEAR(res.lambda_min, oracle::min_eig_plain(h), 1e-10);
        EXPECT_LE(res.residual, 1e-8 * std::max(1.0, h.norm()));
    }
}

TEST(MinEigenvalue, AccurateUnderLargePenalty) {
    // Accepting circuit with T = 4: the clock penalty is 4^12 ~ 1.7e7 while
    // the ground energy sits a few 1e-8 below zero (leakage of the hopping
    // terms into illegal clock states).
    const auto c = parse_circuit("qubits 2\nproof 1\nX 1\nCNOT 1 0\nZ 1\nH 1\n");
    const auto h = build_3local(c);
    const auto res = min_eigenvalue(h);
    const long double exact = oracle::min_eig_extended(assemble(h));
    EXPECT_NEAR(res.lambda_min, static_cast<double>(exact), 1e-10);
    EXPECT_LT(exact, 0.0L);
    EXPECT_GE(res.lambda_min, oracle::leakage_floor(norm_bound(select_groups(
                                                        h, {TermGroup::in, TermGroup::out,
                                                            TermGroup::prop})),
                                                    std::pow(4.0, 12)));
}

TEST(MinEigenvalue, IterativeAgreesWithDense) {
    std::mt19937_64 rng(53);
    SpectralOptions iterative;
    iterative.force_iterative = true;
    std::vector<LocalHamiltonian> instances;
    for (int i = 0; i < 4; ++i) {
        instances.push_back(random_local(6 + i, 10, rng));
    }
    for (int i = 0; i < 4; ++i) {
        instances.push_back(build_3local(oracle::random_circuit(rng, 3, 4)));
    }
    instances.push_back(build_3local(oracle::rejecting_circuit(3, 1, 4, rng)));
    instances.push_back(sat_to_hamiltonian(Cnf{8, oracle::random_3sat(8, 20, rng)}));
    for (const auto &h : instances) {
        const auto dense = min_eigenvalue(h);
        const auto iter = min_eigenvalue(h, iterative);
        EXPECT_EQ(iter.method, SpectralMethod::iterative);
        EXPECT_NEAR(dense.lambda_min, iter.lambda_min, 1e-6);
        EXPECT_LE(iter.residual, 1e-8 * std::max(1.0, norm_bound(h)));
    }
}

TEST(MinEigenvalue, IterativeIsDeterministicPerSeed) {
    std::mt19937_64 rng(55);
    const auto h = random_local(7, 12, rng);
    SpectralOptions o;
    o.force_iterative = true;
    o.seed = 42;
    const auto a = min_eigenvalue(h, o);
    const auto b = min_eigenvalue(h, o);
    EXPECT_EQ(a.lambda_min, b.lambda_min);
    EXPECT_EQ(a.iterations, b.iterations);
}

TEST(MinEigenvalue, IterationCapIsReported) {
    std::mt19937_64 rng(57);
    const auto h = random_local(8, 12, rng);
    SpectralOptions o;
    o.force_iterative = true;
    o.max_iterations = 2;
    EXPECT_THROW(min_eigenvalue(h, o), ConvergenceError);
}

TEST(MinEigenvalue, LargeInstanceUsesIterativePath) {
    // 14 qubits exceeds the dense limit
    std::mt19937_64 rng(59);
    const auto h = sat_to_hamiltonian(Cnf{14, oracle::random_3sat(14, 40, rng)});
    const auto res = min_eigenvalue(h);
    EXPECT_EQ(res.method, SpectralMethod::iterative);
    const Eigen::VectorXd d = hamiltonian_diagonal(h);
    EXPECT_NEAR(res.lambda_min, d.minCoeff(), 1e-6);
}

TEST(Rayleigh, Examples) {
    std::mt19937_64 rng(61);
    const Matrix h = oracle::random_hermitian(8, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    EXPECT_NEAR(rayleigh(h, eig.eigenvectors().col(3)), eig.eigenvalues()(3), 1e-12);
    EXPECT_THROW(rayleigh(h, Vector::Zero(8)), std::invalid_argument);

    const auto acc = parse_circuit("qubits 1\nproof 1\nX 0\nX 0\nX 0\n");
    const auto rej = parse_circuit("qubits 1\nproof 1\nX 0\nX 0\n");
    const auto proof = StateVector::basis(1, 0);
    EXPECT_NEAR(rayleigh(build_3local(acc), history_state(acc, proof).unary.amplitudes()),
                0.0, 1e-12);
    // proof |0> stays |0>: the output check fires on the final time step only
    EXPECT_NEAR(rayleigh(build_3local(rej), history_state(rej, proof).unary.amplitudes()),
                1.0 / 3.0, 1e-12);
}

TEST(Rayleigh, VariationalUpperBound) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_local(5, 8, rng);
        const double lambda = min_eigenvalue(h).lambda_min;
        for (int k = 0; k < 20; ++k) {
            EXPECT_GE(rayleigh(h, oracle::random_vector(32, rng)), lambda - 1e-12);
        }
    }
}

TEST(NullspaceBasis, Examples) {
    EXPECT_EQ(nullspace_basis(Matrix::Zero(4, 4)).cols(), 4);

    const Matrix p = diag({1, 0, 1, 0});
    const Matrix ker = nullspace_basis(p);
    ASSERT_EQ(ker.cols(), 2);
    EXPECT_LT((p * ker).norm(), 1e-12);
    EXPECT_LT((ker.adjoint() * ker - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-10);

    const auto c = parse_circuit("qubits 2\nproof 1\nI 0\nI 1\n");
    const Matrix prop = build_reference_parts(c).prop;
    const Matrix basis = nullspace_basis(prop);
    EXPECT_EQ(basis.cols(), 4); // one history state per computational input
    EXPECT_LE((prop * basis).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(PrincipalAngle, Examples) {
    const Matrix e0 = Vector::Unit(3, 0);
    const Matrix e1 = Vector::Unit(3, 1);
    EXPECT_NEAR(principal_angle(e0, e0), 1.0, 1e-15);
    EXPECT_NEAR(principal_angle(e0, e1), 0.0, 1e-15);
    Matrix diag01(3, 1);
    diag01 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
    EXPECT_NEAR(principal_angle(e0, diag01), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(principal_angle(Matrix(3, 0), e0), std::invalid_argument);
}
