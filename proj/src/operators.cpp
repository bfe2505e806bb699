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
#include "qmalocal/operators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qmalocal {

namespace {

constexpr int kMaxTermLocality = 10;

struct SupportLayout {
    long mask = 0;
    std::vector<long> offsets; // global bit pattern of each local index
};

SupportLayout layout_of(std::span<const int> support) {
    SupportLayout out;
    const long dim = pow2(static_cast<int>(support.size()));
    out.offsets.resize(dim);
    for (int q : support) {
        out.mask |= 1L << q;
    }
    for (long l = 0; l < dim; ++l) {
        long g = 0;
        for (std::size_t j = 0; j < support.size(); ++j) {
            if ((l >> j) & 1L) {
                g |= 1L << support[j];
            }
        }
        out.offsets[l] = g;
    }
    return out;
}

long local_index(long global, std::span<const int> support) {
    long l = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
        l |= ((global >> support[j]) & 1L) << j;
    }
    return l;
}

void require_dense(int n, const char *what) {
    if (n > kMaxDenseQubits) {
        throw DimensionError(std::string(what) + ": n = " + std::to_string(n) +
                             " exceeds the dense limit of " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    }
}

} // namespace

std::string_view to_string(TermGroup g) {
    switch (g) {
    case TermGroup::in:
        return "in";
    case TermGroup::out:
        return "out";
    case TermGroup::prop:
        return "prop";
    case TermGroup::clock:
        return "clock";
    case TermGroup::sat:
        return "sat";
    case TermGroup::other:
        break;
    }
    return "other";
}

TermGroup group_of_label(std::string_view label) {
    const auto head = label.substr(0, label.find(':'));
    for (auto g : {TermGroup::in, TermGroup::out, TermGroup::prop,
                   TermGroup::clock, TermGroup::sat}) {
        if (head == to_string(g)) {
            return g;
        }
    }
    return TermGroup::other;
}

LocalTerm make_term(std::string label, std::vector<int> support, Matrix matrix,
                    double weight) {
    if (label.empty() ||
        std::any_of(label.begin(), label.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
        throw std::invalid_argument("term label must be a non-empty token");
    }
    if (support.empty() || support.size() > kMaxTermLocality) {
        throw std::invalid_argument("term " + label +
                                    ": support size out of range");
    }
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (support[j] < 0 || (j > 0 && support[j] <= support[j - 1])) {
            throw std::invalid_argument(
                "term " + label + ": support must be sorted and distinct");
        }
    }
    const long dim = pow2(static_cast<int>(support.size()));
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("term " + label +
                                    ": matrix dimension is not 2^k");
    }
    if (hermiticity_defect(matrix) > kHermitianTol) {
        throw std::invalid_argument("term " + label + ": matrix is not Hermitian");
    }
    if (!std::isfinite(weight)) {
        throw std::invalid_argument("term " + label + ": weight is not finite");
    }
    return LocalTerm{std::move(label), std::move(support), std::move(matrix),
                     weight};
}

void LocalHamiltonian::validate() const {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
    for (const auto &t : terms) {
        if (t.support.empty() || t.support.back() >= n) {
            throw std::invalid_argument("term " + t.label +
                                        ": support index out of range");
        }
    }
    if (thresholds && !(thresholds->b - thresholds->a > 0.0)) {
        throw std::invalid_argument("thresholds need b - a > 0");
    }
}

LocalHamiltonian select_groups(const LocalHamiltonian &h,
                               std::initializer_list<TermGroup> groups) {
    LocalHamiltonian out;
    out.n = h.n;
    for (const auto &t : h.terms) {
        if (std::find(groups.begin(), groups.end(), t.group()) != groups.end()) {
            out.terms.push_back(t);
        }
    }
    return out;
}

Matrix lift_to_support(const Matrix &op, std::span<const int> qubits,
                       std::span<const int> support) {
    const int a = static_cast<int>(qubits.size());
    if (op.rows() != pow2(a) || op.cols() != pow2(a)) {
        throw std::invalid_argument("lift_to_support: operator size mismatch");
    }
    std::vector<int> pos(a);
    long op_mask = 0;
    for (int j = 0; j < a; ++j) {
        auto it = std::find(support.begin(), support.end(), qubits[j]);
        if (it == support.end()) {
            throw std::invalid_argument(
                "lift_to_support: qubit not in support");
        }
        pos[j] = static_cast<int>(it - support.begin());
        op_mask |= 1L << pos[j];
    }
    auto op_index = [&](long l) {
        long idx = 0;
        for (int j = 0; j < a; ++j) {
            idx |= ((l >> pos[j]) & 1L) << (a - 1 - j);
        }
        return idx;
    };
    const long dim = pow2(static_cast<int>(support.size()));
    Matrix out = Matrix::Zero(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            if ((r & ~op_mask) == (c & ~op_mask)) {
                out(r, c) = op(op_index(r), op_index(c));
            }
        }
    }
    return out;
}

Matrix embed(const LocalTerm &term, int n) {
    require_dense(n, "embed");
    if (term.support.empty() || term.support.back() >= n) {
        throw std::invalid_argument("embed: support out of range");
    }
    const long dim = pow2(n);
    const auto lay = layout_of(term.support);
    const long ldim = static_cast<long>(lay.offsets.size());
    Matrix out = Matrix::Zero(dim, dim);
    for (long base = 0; base < dim; ++base) {
        if (base & lay.mask) {
            continue;
        }
        for (long r = 0; r < ldim; ++r) {
            for (long c = 0; c < ldim; ++c) {
                out(base | lay.offsets[r], base | lay.offsets[c]) =
                    term.weight * term.matrix(r, c);
            }
        }
    }
    return out;
}

Matrix assemble(const LocalHamiltonian &h) {
    require_dense(h.n, "assemble");
    h.validate();
    const long dim = pow2(h.n);
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto &t : h.terms) {
        const auto lay = layout_of(t.support);
        const long ldim = static_cast<long>(lay.offsets.size());
        for (long base = 0; base < dim; ++base) {
            if (base & lay.mask) {
                continue;
            }
            for (long r = 0; r < ldim; ++r) {
                for (long c = 0; c < ldim; ++c) {
                    out(base | lay.offsets[r], base | lay.offsets[c]) +=
                        t.weight * t.matrix(r, c);
                }
            }
        }
    }
    return out;
}

void apply_term(const LocalTerm &term, const Vector &x, Vector &y) {
    const auto lay = layout_of(term.support);
    const long ldim = static_cast<long>(lay.offsets.size());
    const Matrix m = term.weight * term.matrix;
    const long dim = x.size();
    if (y.size() != dim || (lay.mask >= dim && dim > 0)) {
        throw std::invalid_argument("apply_term: dimension mismatch");
    }
    Vector in(ldim);
    for (long base = 0; base < dim; ++base) {
        if (base & lay.mask) {
            continue;
        }
        for (long c = 0; c < ldim; ++c) {
            in(c) = x(base | lay.offsets[c]);
        }
        for (long r = 0; r < ldim; ++r) {
            Complex acc = 0.0;
            for (long c = 0; c < ldim; ++c) {
                acc += m(r, c) * in(c);
            }
            y(base | lay.offsets[r]) += acc;
        }
    }
}

void apply_hamiltonian(const LocalHamiltonian &h, const Vector &x, Vector &y) {
    if (h.n > kMaxQubits || x.size() != pow2(h.n)) {
        throw DimensionError("apply_hamiltonian: vector length is not 2^n");
    }
    y = Vector::Zero(x.size());
    for (const auto &t : h.terms) {
        apply_term(t, x, y);
    }
}

Eigen::VectorXd hamiltonian_diagonal(const LocalHamiltonian &h) {
    if (h.n > kMaxQubits) {
        throw DimensionError("hamiltonian_diagonal: too many qubits");
    }
    const long dim = pow2(h.n);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
    for (const auto &t : h.terms) {
        for (long i = 0; i < dim; ++i) {
            const long l = local_index(i, t.support);
            d(i) += t.weight * t.matrix(l, l).real();
        }
    }
    return d;
}

int locality(const LocalHamiltonian &h) {
    int k = 0;
    for (const auto &t : h.terms) {
        k = std::max(k, t.locality());
    }
    return k;
}

double term_norm(const LocalTerm &term) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(term.matrix,
                                              Eigen::EigenvaluesOnly);
    return std::abs(term.weight) * eig.eigenvalues().cwiseAbs().maxCoeff();
}

double norm_bound(const LocalHamiltonian &h) {
    double s = 0.0;
    for (const auto &t : h.terms) {
        s += term_norm(t);
    }
    return s;
}

NormalizedInstance normalize_terms(const LocalHamiltonian &h, double a,
                                   double b) {
    if (!(b - a > 0.0)) {
        throw std::invalid_argument("normalize_terms: thresholds need b > a");
    }
    double max_norm = 0.0;
    for (const auto &t : h.terms) {
        max_norm = std::max(max_norm, term_norm(t));
    }
    if (max_norm == 0.0) {
        throw std::invalid_argument(
            "normalize_terms: zero Hamiltonian has no scale");
    }
    const double s = 1.0 / (2.0 * max_norm);
    NormalizedInstance out;
    out.scale = s;
    out.hamiltonian.n = h.n;
    for (const auto &t : h.terms) {
        const long dim = t.matrix.rows();
        Matrix m = (s * t.weight) * t.matrix +
                   0.5 * Matrix::Identity(dim, dim);
        out.hamiltonian.terms.push_back(
            LocalTerm{t.label, t.support, std::move(m), 1.0});
    }
    const double shift = 0.5 * static_cast<double>(h.terms.size());
    out.hamiltonian.thresholds = Thresholds{s * a + shift, s * b + shift};
    return out;
}

} // namespace qmalocal
