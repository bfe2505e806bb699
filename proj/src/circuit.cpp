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
#include "qmalocal/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qmalocal {

namespace {

constexpr int kMaxOracleProofQubits = 12;

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

} // namespace

Matrix named_gate_matrix(std::string_view name) {
    const Complex i{0.0, 1.0};
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "I") {
        return Matrix::Identity(2, 2);
    }
    if (name == "X") {
        return mat2(0, 1, 1, 0);
    }
    if (name == "Y") {
        return mat2(0, -i, i, 0);
    }
    if (name == "Z") {
        return mat2(1, 0, 0, -1);
    }
    if (name == "H") {
        return mat2(r, r, r, -r);
    }
    if (name == "S") {
        return mat2(1, 0, 0, i);
    }
    if (name == "TG") {
        return mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
    }
    if (name == "CNOT") {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
        return m;
    }
    if (name == "CZ") {
        Matrix m = Matrix::Identity(4, 4);
        m(3, 3) = -1.0;
        return m;
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

Gate make_gate(std::string name, std::vector<int> targets, Matrix matrix) {
    if (targets.empty() || targets.size() > 2) {
        throw std::invalid_argument("gate " + name +
                                    ": expected 1 or 2 targets");
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("gate " + name + ": repeated target");
    }
    for (int q : targets) {
        if (q < 0) {
            throw std::invalid_argument("gate " + name +
                                        ": negative qubit index");
        }
    }
    const long dim = pow2(static_cast<int>(targets.size()));
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("gate " + name +
                                    ": matrix dimension does not match arity");
    }
    if (unitarity_defect(matrix) > kUnitarityTol) {
        throw std::invalid_argument("gate " + name + ": matrix is not unitary");
    }
    return Gate{std::move(name), std::move(targets), std::move(matrix)};
}

Gate make_named_gate(std::string_view name, std::vector<int> targets) {
    Matrix m = named_gate_matrix(name);
    const auto expected = (m.rows() == 2) ? 1u : 2u;
    if (targets.size() != expected) {
        throw std::invalid_argument("gate " + std::string(name) + " takes " +
                                    std::to_string(expected) + " target(s)");
    }
    return make_gate(std::string(name), std::move(targets), std::move(m));
}

Circuit::Circuit(int num_qubits, int proof_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), proof_qubits_(proof_qubits),
      gates_(std::move(gates)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
    if (proof_qubits_ < 1 || proof_qubits_ > num_qubits_) {
        throw std::invalid_argument("proof qubit count must satisfy 1 <= m <= N");
    }
    if (gates_.empty()) {
        throw std::invalid_argument("circuit needs at least one gate");
    }
    for (const auto &g : gates_) {
        for (int q : g.targets) {
            if (q >= num_qubits_) {
                throw std::invalid_argument("gate " + g.name +
                                            ": qubit index out of range");
            }
        }
    }
}

StateVector::StateVector(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 0 || num_qubits_ > kMaxQubits ||
        amplitudes_.size() != pow2(num_qubits_)) {
        throw std::invalid_argument("state length is not 2^n");
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTol) {
        throw std::invalid_argument("state is not normalized");
    }
}

StateVector StateVector::basis(int num_qubits, long index) {
    if (num_qubits < 0 || num_qubits > kMaxQubits || index < 0 ||
        index >= pow2(num_qubits)) {
        throw std::invalid_argument("basis index out of range");
    }
    Vector v = Vector::Zero(pow2(num_qubits));
    v(index) = 1.0;
    return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::normalized(int num_qubits, Vector amplitudes) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    amplitudes /= norm;
    return StateVector(num_qubits, std::move(amplitudes));
}

Circuit parse_circuit(std::string_view text) {
    std::vector<std::string> lines;
    std::vector<int> line_numbers;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            if (auto hash = raw.find('#'); hash != std::string::npos) {
                raw.erase(hash);
            }
            auto line = trim(raw);
            if (!line.empty()) {
                lines.push_back(std::move(line));
                line_numbers.push_back(lineno);
            }
        }
    }
    auto fail = [&](std::size_t idx, const std::string &what) -> ParseError {
        const int no = idx < line_numbers.size() ? line_numbers[idx] : 0;
        return ParseError("circuit line " + std::to_string(no) + ": " + what);
    };
    auto header = [&](std::size_t idx, const char *key) {
        if (idx >= lines.size()) {
            throw ParseError(std::string("circuit: missing '") + key +
                             "' line");
        }
        std::istringstream ls(lines[idx]);
        std::string word;
        long value = 0;
        std::string extra;
        if (!(ls >> word >> value) || word != key || (ls >> extra)) {
            throw fail(idx, std::string("expected '") + key + " <int>'");
        }
        return value;
    };
    const long n = header(0, "qubits");
    const long m = header(1, "proof");
    if (n < 1 || n > kMaxQubits) {
        throw fail(0, "qubit count out of range");
    }
    if (m < 1 || m > n) {
        throw fail(1, "proof qubit count must satisfy 1 <= m <= N");
    }

    std::vector<Gate> gates;
    for (std::size_t idx = 2; idx < lines.size(); ++idx) {
        std::string line = lines[idx];
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::string name;
        ls >> name;
        int arity = 0;
        bool explicit_matrix = false;
        if (name == "U1" || name == "U2") {
            explicit_matrix = true;
            arity = name == "U1" ? 1 : 2;
        } else {
            try {
                arity = named_gate_matrix(name).rows() == 2 ? 1 : 2;
            } catch (const std::invalid_argument &) {
                throw fail(idx, "unknown gate '" + name + "'");
            }
        }
        std::vector<int> targets;
        for (int k = 0; k < arity; ++k) {
            long q = 0;
            if (!(ls >> q)) {
                throw fail(idx, "expected " + std::to_string(arity) +
                                    " qubit index(es)");
            }
            if (q < 0 || q >= n) {
                throw fail(idx, "qubit index " + std::to_string(q) +
                                    " out of range");
            }
            targets.push_back(static_cast<int>(q));
        }
        Matrix matrix;
        if (explicit_matrix) {
            const long dim = pow2(arity);
            matrix.resize(dim, dim);
            for (long r = 0; r < dim; ++r) {
                for (long c = 0; c < dim; ++c) {
                    double re = 0.0;
                    double im = 0.0;
                    if (!(ls >> re >> im)) {
                        throw fail(idx, "expected " +
                                            std::to_string(2 * dim * dim) +
                                            " matrix entries");
                    }
                    matrix(r, c) = Complex(re, im);
                }
            }
        } else {
            matrix = named_gate_matrix(name);
        }
        std::string extra;
        if (ls >> extra) {
            throw fail(idx, "trailing token '" + extra + "'");
        }
        try {
            gates.push_back(
                make_gate(name, std::move(targets), std::move(matrix)));
        } catch (const std::invalid_argument &e) {
            throw fail(idx, e.what());
        }
    }
    if (gates.empty()) {
        throw ParseError("circuit: no gates");
    }
    return Circuit(static_cast<int>(n), static_cast<int>(m), std::move(gates));
}

void apply_gate(const Gate &gate, Vector &state, int num_qubits) {
    if (state.size() != pow2(num_qubits)) {
        throw std::invalid_argument("apply_gate: state dimension mismatch");
    }
    const long dim = state.size();
    const Matrix &u = gate.matrix;
    if (gate.arity() == 1) {
        const long bit = 1L << gate.targets[0];
        for (long i = 0; i < dim; ++i) {
            if (i & bit) {
                continue;
            }
            const Complex a0 = state(i);
            const Complex a1 = state(i | bit);
            state(i) = u(0, 0) * a0 + u(0, 1) * a1;
            state(i | bit) = u(1, 0) * a0 + u(1, 1) * a1;
        }
        return;
    }
    // local index 2*b(q1) + b(q2)
    const long hi = 1L << gate.targets[0];
    const long lo = 1L << gate.targets[1];
    for (long i = 0; i < dim; ++i) {
        if (i & (hi | lo)) {
            continue;
        }
        const long idx[4] = {i, i | lo, i | hi, i | hi | lo};
        Complex in[4];
        for (int k = 0; k < 4; ++k) {
            in[k] = state(idx[k]);
        }
        for (int r = 0; r < 4; ++r) {
            Complex acc = 0.0;
            for (int c = 0; c < 4; ++c) {
                acc += u(r, c) * in[c];
            }
            state(idx[r]) = acc;
        }
    }
}

Matrix gate_operator(const Gate &gate, int num_qubits) {
    if (num_qubits > kMaxDenseQubits) {
        throw DimensionError("gate_operator: more than " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    }
    const long dim = pow2(num_qubits);
    Matrix op(dim, dim);
    for (long c = 0; c < dim; ++c) {
        Vector col = Vector::Unit(dim, c);
        apply_gate(gate, col, num_qubits);
        op.col(c) = col;
    }
    return op;
}

StateVector run_circuit(const Circuit &circuit, const StateVector &proof) {
    if (proof.num_qubits() != circuit.proof_qubits()) {
        throw std::invalid_argument("run_circuit: proof has " +
                                    std::to_string(proof.num_qubits()) +
                                    " qubits, circuit expects " +
                                    std::to_string(circuit.proof_qubits()));
    }
    const int n = circuit.num_qubits();
    Vector state = Vector::Zero(pow2(n));
    state.head(proof.dim()) = proof.amplitudes();
    for (const auto &g : circuit.gates()) {
        apply_gate(g, state, n);
    }
    return StateVector(n, std::move(state));
}

double output_probability(const Vector &state) {
    double p = 0.0;
    for (long i = 1; i < state.size(); i += 2) {
        p += std::norm(state(i));
    }
    return p;
}

double acceptance_probability(const Circuit &circuit,
                              const StateVector &proof) {
    return std::clamp(output_probability(run_circuit(circuit, proof).amplitudes()),
                      0.0, 1.0);
}

Matrix acceptance_operator(const Circuit &circuit) {
    const int m = circuit.proof_qubits();
    if (m > kMaxOracleProofQubits) {
        throw DimensionError("acceptance oracle limited to " +
                             std::to_string(kMaxOracleProofQubits) +
                             " proof qubits");
    }
    const long pdim = pow2(m);
    const long dim = pow2(circuit.num_qubits());
    // Columns: accepted branch of U|j,0> for each proof basis state j.
    Matrix accepted = Matrix::Zero(dim / 2, pdim);
    for (long j = 0; j < pdim; ++j) {
        const auto out = run_circuit(circuit, StateVector::basis(m, j));
        for (long x = 1, row = 0; x < dim; x += 2, ++row) {
            accepted(row, j) = out.amplitudes()(x);
        }
    }
    return accepted.adjoint() * accepted;
}

OptimalAcceptance optimal_acceptance(const Circuit &circuit) {
    const Matrix a = acceptance_operator(circuit);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a);
    const long top = a.rows() - 1;
    const double p = std::clamp(eig.eigenvalues()(top), 0.0, 1.0);
    Vector proof = eig.eigenvectors().col(top);
    return OptimalAcceptance{
        p, StateVector::normalized(circuit.proof_qubits(), std::move(proof))};
}

} // namespace qmalocal
