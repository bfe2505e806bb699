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
#include "qmalocal/circuit.hpp"

using namespace qmalocal;

namespace {

StateVector ket(int n, long index) { return StateVector::basis(n, index); }

} // namespace

TEST(ParseCircuit, SingleNamedGate) {
    const auto c = parse_circuit("qubits 1\nproof 1\nX 0\n");
    EXPECT_EQ(c.num_qubits(), 1);
    EXPECT_EQ(c.proof_qubits(), 1);
    ASSERT_EQ(c.num_gates(), 1);
    EXPECT_EQ(c.gate(1).name, "X");
    EXPECT_EQ(c.gate(1).targets, std::vector<int>{0});
}

TEST(ParseCircuit, TwoQubitGateAndComments) {
    const auto c = parse_circuit("# header\nqubits 2\n\nproof 1  # one proof qubit\n"
                                 "CNOT 0 1\n");
    EXPECT_EQ(c.num_qubits(), 2);
    EXPECT_EQ(c.num_gates(), 1);
    EXPECT_EQ(c.gate(1).targets, (std::vector<int>{0, 1}));
}

TEST(ParseCircuit, ExplicitMatrices) {
    const auto c = parse_circuit(
        "qubits 2\nproof 2\n"
        "U1 1 0,0 1,0 1,0 0,0\n"
        "U2 0 1 1 0 0 0 0 0 0 0  0 0 0 0 1 0 0 0  0 0 1 0 0 0 0 0  0 0 0 0 0 0 1 0\n");
    ASSERT_EQ(c.num_gates(), 2);
    EXPECT_LT((c.gate(1).matrix - named_gate_matrix("X")).norm(), 1e-15);
    // rows 1 and 2 swapped: SWAP
    EXPECT_EQ(c.gate(2).matrix(1, 2), Complex(1.0, 0.0));
}

TEST(ParseCircuit, Errors) {
    EXPECT_THROW(parse_circuit("qubits 1\nproof 1\nU1 0 1,0 1,0 0,0 0,0\n"),
                 ParseError); // not unitary
    EXPECT_THROW(parse_circuit("qubits 1\nproof 1\nX 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 1\nproof 2\nX 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nproof 1\nCNOT 0 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nproof 1\nFOO 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nproof 1\nX 0 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nproof 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("proof 1\nqubits 2\nX 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 1\nproof 1\nU1 0 1,0 0,0 0,0\n"),
                 ParseError);
}

TEST(RunCircuit, Examples) {
    const auto x = parse_circuit("qubits 1\nproof 1\nX 0\n");
    EXPECT_NEAR(std::abs(run_circuit(x, ket(1, 0)).amplitudes()(1)), 1.0, 1e-15);

    const auto xx = parse_circuit("qubits 1\nproof 1\nX 0\nX 0\n");
    EXPECT_NEAR(std::abs(run_circuit(xx, ket(1, 0)).amplitudes()(0)), 1.0, 1e-15);

    const auto cnot = parse_circuit("qubits 2\nproof 1\nCNOT 0 1\n");
    EXPECT_NEAR(std::abs(run_circuit(cnot, ket(1, 1)).amplitudes()(3)), 1.0,
                1e-15);

    EXPECT_THROW(run_circuit(cnot, ket(2, 0)), std::invalid_argument);
}

TEST(AcceptanceProbability, Examples) {
    const auto x = parse_circuit("qubits 1\nproof 1\nX 0\n");
    const auto xx = parse_circuit("qubits 1\nproof 1\nX 0\nX 0\n");
    const auto h = parse_circuit("qubits 1\nproof 1\nH 0\n");
    EXPECT_DOUBLE_EQ(acceptance_probability(x, ket(1, 0)), 1.0);
    EXPECT_DOUBLE_EQ(acceptance_probability(xx, ket(1, 0)), 0.0);
    EXPECT_NEAR(acceptance_probability(h, ket(1, 0)), 0.5, 1e-15);
}

TEST(OptimalAcceptance, Examples) {
    const auto x = parse_circuit("qubits 1\nproof 1\nX 0\n");
    EXPECT_NEAR(optimal_acceptance(x).p_max, 1.0, 1e-12);

    // The output qubit is a proof qubit, so the identity circuit accepts |1>.
    const auto id = parse_circuit("qubits 1\nproof 1\nI 0\n");
    const auto best = optimal_acceptance(id);
    EXPECT_NEAR(best.p_max, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(best.proof.amplitudes()(1)), 1.0, 1e-10);

    // An ancilla swapped into the output: nothing is accepted.
    const auto swap_out = parse_circuit("qubits 2\nproof 1\nCNOT 0 1\nCNOT 1 0\n");
    EXPECT_NEAR(optimal_acceptance(swap_out).p_max, 0.0, 1e-12);
}

TEST(OptimalAcceptance, MatchesUnitaryOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = oracle::random_circuit(rng);
        const Matrix u = oracle::circuit_unitary(c);
        const long pdim = 1L << c.proof_qubits();
        // columns of U restricted to proof inputs, rows with output bit 1
        Matrix acc = Matrix::Zero(pdim, pdim);
        for (long i = 0; i < pdim; ++i) {
            for (long j = 0; j < pdim; ++j) {
                for (long x = 1; x < u.rows(); x += 2) {
                    acc(i, j) += std::conj(u(x, i)) * u(x, j);
                }
            }
        }
        Eigen::SelfAdjointEigenSolver<Matrix> eig(acc, Eigen::EigenvaluesOnly);
        EXPECT_NEAR(optimal_acceptance(c).p_max, eig.eigenvalues()(pdim - 1),
                    1e-10);
    }
}

TEST(CircuitProperties, UnitarityPreservation) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const int t = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<Gate> gates;
        for (int i = 0; i < t; ++i) {
            gates.push_back(oracle::random_gate(n, rng));
        }
        const Circuit c(n, std::uniform_int_distribution<int>(1, n)(rng), gates);
        const auto proof = StateVector::normalized(
            c.proof_qubits(), oracle::random_vector(1L << c.proof_qubits(), rng));
        EXPECT_NEAR(run_circuit(c, proof).amplitudes().norm(), 1.0, 1e-12);
    }
}

TEST(CircuitProperties, OracleConsistency) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = oracle::random_circuit(rng);
        const auto best = optimal_acceptance(c);
        EXPECT_NEAR(acceptance_probability(c, best.proof), best.p_max, 1e-10);
        for (int k = 0; k < 100; ++k) {
            const auto proof = StateVector::normalized(
                c.proof_qubits(),
                oracle::random_vector(1L << c.proof_qubits(), rng));
            EXPECT_LE(acceptance_probability(c, proof), best.p_max + 1e-10);
        }
    }
}

TEST(CircuitProperties, CompositionMatchesEmbeddedProduct) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = oracle::random_circuit(rng, 4, 6);
        const int n = c.num_qubits();
        Matrix product = Matrix::Identity(1L << n, 1L << n);
        for (const auto &g : c.gates()) {
            const Matrix op = gate_operator(g, n);
            EXPECT_LT((op - oracle::full_gate(g, n)).cwiseAbs().maxCoeff(), 1e-14);
            product = op * product;
        }
        const auto proof = StateVector::normalized(
            c.proof_qubits(), oracle::random_vector(1L << c.proof_qubits(), rng));
        Vector start = Vector::Zero(1L << n);
        start.head(proof.dim()) = proof.amplitudes();
        const Vector once = product * start;
        EXPECT_LT((run_circuit(c, proof).amplitudes() - once).cwiseAbs().maxCoeff(),
                  1e-12);
    }
}

TEST(Gate, Validation) {
    EXPECT_THROW(make_gate("U1", {0}, Matrix::Zero(2, 2)), std::invalid_argument);
    EXPECT_THROW(make_gate("U1", {0, 1}, Matrix::Identity(2, 2)),
                 std::invalid_argument);
    EXPECT_THROW(make_named_gate("CNOT", {0}), std::invalid_argument);
    EXPECT_THROW(named_gate_matrix("SWAP"), std::invalid_argument);
    for (const char *name : {"I", "X", "Y", "Z", "H", "S", "TG", "CNOT", "CZ"}) {
        EXPECT_LT(unitarity_defect(named_gate_matrix(name)), 1e-15) << name;
    }
}

TEST(Circuit, Validation) {
    EXPECT_THROW(Circuit(2, 3, {make_named_gate("X", {0})}), std::invalid_argument);
    EXPECT_THROW(Circuit(2, 1, {}), std::invalid_argument);
    EXPECT_THROW(Circuit(1, 1, {make_named_gate("X", {1})}), std::invalid_argument);
    EXPECT_FALSE(Circuit(3, 1, {make_named_gate("X", {0})}).satisfies_size_assumption());
}

TEST(StateVectorType, NormInvariant) {
    EXPECT_THROW(StateVector(1, Vector::Ones(2)), std::invalid_argument);
    EXPECT_THROW(StateVector(2, Vector::Ones(2)), std::invalid_argument);
    EXPECT_THROW(StateVector::normalized(1, Vector::Zero(2)), std::invalid_argument);
    EXPECT_NEAR(StateVector::normalized(1, Vector::Ones(2)).amplitudes().norm(),
                1.0, 1e-15);
}
