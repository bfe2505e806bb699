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
#include "qmalocal/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qmalocal {

namespace {

/// |l><l| on k qubits.
Matrix basis_projector(int k, long l) {
    Matrix m = Matrix::Zero(pow2(k), pow2(k));
    m(l, l) = 1.0;
    return m;
}

/// |10><10| on clock qubits (s, s+1): clock s set, clock s+1 clear.
LocalTerm clock_step_projector(std::string label, int num_qubits, int s) {
    return make_term(std::move(label),
                     {clock_qubit(num_qubits, s), clock_qubit(num_qubits, s + 1)},
                     basis_projector(2, 0b01), 0.5);
}

/// -(U (x) |1><0|_t + U^dagger (x) |0><1|_t), weight 1/2.
LocalTerm hopping_term(const Gate &gate, int num_qubits, int t) {
    const int clock = clock_qubit(num_qubits, t);
    std::vector<int> support = gate.targets;
    support.push_back(clock);
    std::sort(support.begin(), support.end());
    const Matrix lifted = lift_to_support(gate.matrix, gate.targets, support);
    // The clock qubit is the highest index, hence the top local bit.
    const long clock_bit = pow2(static_cast<int>(support.size()) - 1);
    const long dim = lifted.rows();
    Matrix forward = Matrix::Zero(dim, dim);
    for (long r = 0; r < dim; ++r) {
        if (!(r & clock_bit)) {
            continue;
        }
        for (long c = 0; c < dim; ++c) {
            if (!(c & clock_bit)) {
                forward(r, c) = lifted(r ^ clock_bit, c);
            }
        }
    }
    Matrix m = -(forward + forward.adjoint());
    return make_term("prop:" + std::to_string(t) + ":hop", std::move(support),
                     std::move(m), 0.5);
}

void require_reference_dim(int num_qubits, int num_gates) {
    if (num_qubits > kMaxDenseQubits ||
        pow2(num_qubits) * (num_gates + 1L) > kMaxDenseDim) {
        throw DimensionError("reference construction exceeds dense dimension " +
                             std::to_string(kMaxDenseDim));
    }
}

} // namespace

std::string_view to_string(ReductionMode mode) {
    return mode == ReductionMode::three_local ? "3local" : "reference";
}

ReductionMode parse_reduction_mode(std::string_view text) {
    if (text == "3local" || text == "three_local") {
        return ReductionMode::three_local;
    }
    if (text == "reference") {
        return ReductionMode::reference;
    }
    throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

double ReductionParams::penalty_weight(int num_gates) const {
    if (penalty_override) {
        if (!(*penalty_override > 0.0)) {
            throw std::invalid_argument("penalty override must be positive");
        }
        return *penalty_override;
    }
    if (penalty_exponent < 1) {
        throw std::invalid_argument("penalty exponent must be >= 1");
    }
    return std::pow(static_cast<double>(num_gates), penalty_exponent);
}

long unary_index(int num_qubits, long x, int t) {
    return x | ((pow2(t) - 1) << num_qubits);
}

bool is_legal_clock(long global_index, int num_qubits, int num_gates) {
    const long clock = global_index >> num_qubits;
    return clock < pow2(num_gates) && (clock & (clock + 1)) == 0;
}

LocalHamiltonian build_3local(const Circuit &circuit,
                              const ReductionParams &params) {
    const int nq = circuit.num_qubits();
    const int m = circuit.proof_qubits();
    const int T = circuit.num_gates();
    if (nq + T > kMaxQubits) {
        throw DimensionError("three-local instance needs " +
                             std::to_string(nq + T) + " qubits (limit " +
                             std::to_string(kMaxQubits) + ")");
    }
    const double penalty = params.penalty_weight(T);

    LocalHamiltonian h;
    h.n = nq + T;
    auto &terms = h.terms;

    for (int i = m; i < nq; ++i) {
        // ancilla i set while the clock reads 0
        terms.push_back(make_term("in:" + std::to_string(i),
                                  {i, clock_qubit(nq, 1)},
                                  basis_projector(2, 0b01)));
    }
    // output clear while the clock reads T
    terms.push_back(
        make_term("out", {0, clock_qubit(nq, T)}, basis_projector(2, 0b10)));

    for (int t = 1; t <= T; ++t) {
        const std::string tag = "prop:" + std::to_string(t);
        if (T == 1) {
            terms.push_back(make_term(tag + ":id", {clock_qubit(nq, 1)},
                                      Matrix::Identity(2, 2), 0.5));
        } else if (t == 1) {
            terms.push_back(clock_step_projector(tag + ":a", nq, 1));
            terms.push_back(make_term(tag + ":b", {clock_qubit(nq, 1)},
                                      basis_projector(1, 0), 0.5));
        } else if (t == T) {
            terms.push_back(make_term(tag + ":a", {clock_qubit(nq, T)},
                                      basis_projector(1, 1), 0.5));
            terms.push_back(clock_step_projector(tag + ":b", nq, T - 1));
        } else {
            terms.push_back(clock_step_projector(tag + ":a", nq, t));
            terms.push_back(clock_step_projector(tag + ":b", nq, t - 1));
        }
        terms.push_back(hopping_term(circuit.gate(t), nq, t));
    }

    for (int i = 1; i <= T; ++i) {
        for (int j = i + 1; j <= T; ++j) {
            // clock i clear, clock j set
            terms.push_back(make_term(
                "clock:" + std::to_string(i) + ":" + std::to_string(j),
                {clock_qubit(nq, i), clock_qubit(nq, j)},
                basis_projector(2, 0b10), penalty));
        }
    }
    return h;
}

ReferenceParts build_reference_parts(const Circuit &circuit) {
    const int nq = circuit.num_qubits();
    const int m = circuit.proof_qubits();
    const int T = circuit.num_gates();
    require_reference_dim(nq, T);
    const long block = pow2(nq);
    const long dim = block * (T + 1);

    ReferenceParts parts{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                         Matrix::Zero(dim, dim)};
    for (long x = 0; x < block; ++x) {
        for (int i = m; i < nq; ++i) {
            if ((x >> i) & 1L) {
                parts.in(x, x) += 1.0;
            }
        }
        if (!(x & 1L)) {
            parts.out(x + block * T, x + block * T) = 1.0;
        }
    }
    const Matrix id = Matrix::Identity(block, block);
    for (int t = 1; t <= T; ++t) {
        const Matrix u = gate_operator(circuit.gate(t), nq);
        const long now = block * t;
        const long before = block * (t - 1);
        parts.prop.block(now, now, block, block) += 0.5 * id;
        parts.prop.block(before, before, block, block) += 0.5 * id;
        parts.prop.block(now, before, block, block) -= 0.5 * u;
        parts.prop.block(before, now, block, block) -= 0.5 * u.adjoint();
    }
    return parts;
}

Matrix build_reference(const Circuit &circuit) {
    return build_reference_parts(circuit).total();
}

HistoryState history_state(const Circuit &circuit, const StateVector &proof) {
    if (proof.num_qubits() != circuit.proof_qubits()) {
        throw std::invalid_argument("history_state: proof size mismatch");
    }
    const int nq = circuit.num_qubits();
    const int T = circuit.num_gates();
    if (nq + T > kMaxQubits) {
        throw DimensionError("history_state: too many qubits");
    }
    const long block = pow2(nq);
    const double amp = 1.0 / std::sqrt(static_cast<double>(T + 1));

    Vector step = Vector::Zero(block);
    step.head(proof.dim()) = proof.amplitudes();
    Vector unary = Vector::Zero(pow2(nq + T));
    Vector reference = Vector::Zero(block * (T + 1));
    for (int t = 0; t <= T; ++t) {
        if (t > 0) {
            apply_gate(circuit.gate(t), step, nq);
        }
        for (long x = 0; x < block; ++x) {
            unary(unary_index(nq, x, t)) = amp * step(x);
        }
        reference.segment(block * t, block) = amp * step;
    }
    return HistoryState{StateVector(nq + T, std::move(unary)),
                        std::move(reference)};
}

Matrix legal_projector(int num_qubits, int num_gates) {
    const int n = num_qubits + num_gates;
    if (num_qubits < 0 || num_gates < 1) {
        throw std::invalid_argument("legal_projector: need N >= 0, T >= 1");
    }
    if (n > kMaxDenseQubits) {
        throw DimensionError("legal_projector: too many qubits for dense form");
    }
    const long dim = pow2(n);
    Matrix p = Matrix::Zero(dim, dim);
    for (long i = 0; i < dim; ++i) {
        if (is_legal_clock(i, num_qubits, num_gates)) {
            p(i, i) = 1.0;
        }
    }
    return p;
}

Matrix compress_legal(const Matrix &full_op, int num_qubits, int num_gates) {
    const int n = num_qubits + num_gates;
    if (n > kMaxQubits || full_op.rows() != pow2(n) ||
        full_op.cols() != pow2(n)) {
        throw std::invalid_argument(
            "compress_legal: operator does not act on N + T qubits");
    }
    const long block = pow2(num_qubits);
    const long dim = block * (num_gates + 1);
    Matrix out(dim, dim);
    for (int t = 0; t <= num_gates; ++t) {
        for (int s = 0; s <= num_gates; ++s) {
            for (long x = 0; x < block; ++x) {
                for (long y = 0; y < block; ++y) {
                    out(x + block * t, y + block * s) =
                        full_op(unary_index(num_qubits, x, t),
                                unary_index(num_qubits, y, s));
                }
            }
        }
    }
    return out;
}

LegalDecomposition decompose_legal(const StateVector &state, int num_qubits,
                                   int num_gates) {
    if (state.num_qubits() != num_qubits + num_gates) {
        throw std::invalid_argument("decompose_legal: state size mismatch");
    }
    const Vector &v = state.amplitudes();
    Vector legal = Vector::Zero(v.size());
    Vector illegal = Vector::Zero(v.size());
    for (long i = 0; i < v.size(); ++i) {
        (is_legal_clock(i, num_qubits, num_gates) ? legal : illegal)(i) = v(i);
    }
    LegalDecomposition out{legal.norm(), std::move(legal), illegal.norm(),
                           std::move(illegal)};
    if (out.alpha1 > 0.0) {
        out.eta1 /= out.alpha1;
    }
    if (out.alpha2 > 0.0) {
        out.eta2 /= out.alpha2;
    }
    return out;
}

Cnf parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Cnf cnf;
    long declared = -1;
    std::vector<int> current;
    int lineno = 0;
    auto fail = [&](const std::string &what) {
        return ParseError("dimacs line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") {
            continue;
        }
        if (first == "%") {
            break;
        }
        if (first == "p") {
            std::string fmt;
            long v = 0;
            long c = 0;
            if (declared >= 0 || !(ls >> fmt >> v >> c) || fmt != "cnf" ||
                v < 1 || v > kMaxQubits || c < 0) {
                throw fail("bad 'p cnf <vars> <clauses>' header");
            }
            cnf.num_vars = static_cast<int>(v);
            declared = c;
            continue;
        }
        if (declared < 0) {
            throw fail("clause before 'p cnf' header");
        }
        ls.clear();
        ls.str(line);
        std::string token;
        while (ls >> token) {
            char *end = nullptr;
            const long lit = std::strtol(token.c_str(), &end, 10);
            if (*end != '\0') {
                throw fail("bad literal '" + token + "'");
            }
            if (lit == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::abs(lit) > cnf.num_vars) {
                throw fail("variable " + token + " out of range");
            }
            current.push_back(static_cast<int>(lit));
        }
    }
    if (declared < 0) {
        throw ParseError("dimacs: missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw ParseError("dimacs: last clause not terminated by 0");
    }
    if (static_cast<long>(cnf.clauses.size()) != declared) {
        throw ParseError("dimacs: header declares " + std::to_string(declared) +
                         " clauses, found " +
                         std::to_string(cnf.clauses.size()));
    }
    return cnf;
}

LocalHamiltonian sat_to_hamiltonian(const Cnf &cnf) {
    if (cnf.num_vars < 1 || cnf.num_vars > kMaxQubits) {
        throw std::invalid_argument("sat_to_hamiltonian: variable count out of range");
    }
    LocalHamiltonian h;
    h.n = cnf.num_vars;
    for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
        const auto &clause = cnf.clauses[j];
        const std::string label = "sat:" + std::to_string(j + 1);
        if (clause.empty() || clause.size() > 3) {
            throw std::invalid_argument(label + ": clause needs 1 to 3 literals");
        }
        std::vector<std::pair<int, int>> vars; // (qubit, violating value)
        for (int lit : clause) {
            const int var = std::abs(lit);
            if (lit == 0 || var > cnf.num_vars) {
                throw std::invalid_argument(label + ": literal out of range");
            }
            vars.emplace_back(var - 1, lit > 0 ? 0 : 1);
        }
        std::sort(vars.begin(), vars.end());
        std::vector<int> support;
        long violating = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (k > 0 && vars[k].first == vars[k - 1].first) {
                throw std::invalid_argument(label + ": repeated variable");
            }
            support.push_back(vars[k].first);
            violating |= static_cast<long>(vars[k].second) << k;
        }
        const int k = static_cast<int>(support.size());
        h.terms.push_back(
            make_term(label, std::move(support), basis_projector(k, violating)));
    }
    return h;
}

} // namespace qmalocal
