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
#include "qmalocal/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qmalocal {

namespace {

/// Comment-stripped, non-empty lines with their 1-based line numbers.
class LineReader {
  public:
    explicit LineReader(std::string_view text, std::string source)
        : source_(std::move(source)) {
        std::istringstream in{std::string(text)};
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            if (auto hash = raw.find('#'); hash != std::string::npos) {
                raw.erase(hash);
            }
            if (raw.find_first_not_of(" \t\r") != std::string::npos) {
                lines_.emplace_back(no, std::move(raw));
            }
        }
    }

    bool done() const { return pos_ >= lines_.size(); }

    std::istringstream next(const std::string &expect) {
        if (done()) {
            throw ParseError(source_ + ": unexpected end of input, expected " +
                             expect);
        }
        current_ = lines_[pos_].first;
        std::string line = lines_[pos_++].second;
        std::replace(line.begin(), line.end(), ',', ' ');
        return std::istringstream(line);
    }

    std::string peek_keyword() const {
        if (done()) {
            return {};
        }
        std::istringstream ls(lines_[pos_].second);
        std::string w;
        ls >> w;
        return w;
    }

    ParseError error(const std::string &what) const {
        return ParseError(source_ + " line " + std::to_string(current_) + ": " +
                          what);
    }

  private:
    std::string source_;
    std::vector<std::pair<int, std::string>> lines_;
    std::size_t pos_ = 0;
    int current_ = 0;
};

void expect_end(std::istringstream &ls, const LineReader &reader) {
    std::string extra;
    if (ls >> extra) {
        throw reader.error("trailing token '" + extra + "'");
    }
}

Matrix read_rows(LineReader &reader, long dim) {
    Matrix m(dim, dim);
    for (long r = 0; r < dim; ++r) {
        auto ls = reader.next("matrix row");
        for (long c = 0; c < dim; ++c) {
            double re = 0.0;
            double im = 0.0;
            if (!(ls >> re >> im)) {
                throw reader.error("expected " + std::to_string(dim) +
                                   " complex entries");
            }
            m(r, c) = Complex(re, im);
        }
        expect_end(ls, reader);
    }
    return m;
}

void write_rows(std::string &out, const Matrix &m) {
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += format_complex(m(r, c));
        }
        out += '\n';
    }
}

} // namespace

std::string format_double(double x) {
    if (x == 0.0) {
        x = 0.0; // no "-0"
    }
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

std::string format_complex(Complex z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

std::string write_hamiltonian(const LocalHamiltonian &h) {
    std::string out = "n " + std::to_string(h.n) + "\n";
    if (h.thresholds) {
        out += "thresholds " + format_double(h.thresholds->a) + " " +
               format_double(h.thresholds->b) + "\n";
    }
    out += "terms " + std::to_string(h.terms.size()) + "\n";
    for (const auto &t : h.terms) {
        out += t.label + " k " + std::to_string(t.support.size()) + " q";
        for (int q : t.support) {
            out += " " + std::to_string(q);
        }
        out += " w " + format_double(t.weight) + "\n";
        write_rows(out, t.matrix);
    }
    return out;
}

LocalHamiltonian read_hamiltonian(std::string_view text) {
    LineReader reader(text, "hamiltonian");
    LocalHamiltonian h;
    {
        auto ls = reader.next("'n <n>'");
        std::string key;
        if (!(ls >> key >> h.n) || key != "n" || h.n < 0 || h.n > kMaxQubits) {
            throw reader.error("expected 'n <n>' with 0 <= n <= 30");
        }
        expect_end(ls, reader);
    }
    if (reader.peek_keyword() == "thresholds") {
        auto ls = reader.next("thresholds");
        std::string key;
        Thresholds th{};
        if (!(ls >> key >> th.a >> th.b)) {
            throw reader.error("expected 'thresholds <a> <b>'");
        }
        expect_end(ls, reader);
        h.thresholds = th;
    }
    long count = 0;
    {
        auto ls = reader.next("'terms <r>'");
        std::string key;
        if (!(ls >> key >> count) || key != "terms" || count < 0) {
            throw reader.error("expected 'terms <r>'");
        }
        expect_end(ls, reader);
    }
    for (long j = 0; j < count; ++j) {
        auto ls = reader.next("term header");
        std::string label;
        std::string kw;
        int k = 0;
        if (!(ls >> label >> kw >> k) || kw != "k" || k < 1 || k > 10) {
            throw reader.error("expected '<label> k <k> q <...> w <weight>'");
        }
        if (!(ls >> kw) || kw != "q") {
            throw reader.error("expected 'q' before the support list");
        }
        std::vector<int> support(k);
        for (auto &q : support) {
            if (!(ls >> q)) {
                throw reader.error("expected " + std::to_string(k) +
                                   " support indices");
            }
        }
        double weight = 0.0;
        if (!(ls >> kw >> weight) || kw != "w") {
            throw reader.error("expected 'w <weight>'");
        }
        expect_end(ls, reader);
        Matrix m = read_rows(reader, pow2(k));
        try {
            h.terms.push_back(
                make_term(label, std::move(support), std::move(m), weight));
        } catch (const std::invalid_argument &e) {
            throw reader.error(e.what());
        }
    }
    if (!reader.done()) {
        reader.next("");
        throw reader.error("content after the last term");
    }
    try {
        h.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("hamiltonian: ") + e.what());
    }
    return h;
}

std::string write_dense_matrix(const Matrix &m) {
    std::string out = "matrix " + std::to_string(m.rows()) + "\n";
    write_rows(out, m);
    return out;
}

Matrix read_dense_matrix(std::string_view text) {
    LineReader reader(text, "matrix");
    auto ls = reader.next("'matrix <dim>'");
    std::string key;
    long dim = 0;
    if (!(ls >> key >> dim) || key != "matrix" || dim < 1 || dim > kMaxDenseDim) {
        throw reader.error("expected 'matrix <dim>' within the dense limit");
    }
    expect_end(ls, reader);
    Matrix m = read_rows(reader, dim);
    if (!reader.done()) {
        reader.next("");
        throw reader.error("content after the last row");
    }
    return m;
}

std::variant<LocalHamiltonian, Matrix> read_operator(std::string_view text) {
    LineReader reader(text, "operator");
    if (reader.peek_keyword() == "matrix") {
        return read_dense_matrix(text);
    }
    return read_hamiltonian(text);
}

ProofLoad read_proof(std::string_view text, int proof_qubits) {
    LineReader reader(text, "proof");
    const long dim = pow2(proof_qubits);
    Vector v(dim);
    for (long i = 0; i < dim; ++i) {
        auto ls = reader.next(std::to_string(dim) + " amplitudes");
        double re = 0.0;
        double im = 0.0;
        if (!(ls >> re >> im)) {
            throw reader.error("expected 're,im'");
        }
        expect_end(ls, reader);
        v(i) = Complex(re, im);
    }
    if (!reader.done()) {
        reader.next("");
        throw reader.error("more than 2^m amplitudes");
    }
    const double norm = v.norm();
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw ParseError("proof: vector has zero or non-finite norm");
    }
    return ProofLoad{StateVector::normalized(proof_qubits, std::move(v)), norm};
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace qmalocal
