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
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmalocal/circuit.hpp"
#include "qmalocal/io.hpp"
#include "qmalocal/operators.hpp"
#include "qmalocal/reduction.hpp"
#include "qmalocal/spectra.hpp"
#include "qmalocal/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace qmalocal;

namespace {

StateVector to_state(const Vector &amplitudes) {
    const long dim = amplitudes.size();
    int n = 0;
    while ((1L << n) < dim) {
        ++n;
    }
    return StateVector::normalized(n, amplitudes);
}

} // namespace

PYBIND11_MODULE(_qmalocal, m) {
    m.doc() = "Circuit-to-Hamiltonian compiler and spectral verification";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                             PyExc_RuntimeError);

    py::class_<Gate>(m, "Gate")
        .def_readonly("name", &Gate::name)
        .def_readonly("targets", &Gate::targets)
        .def_readonly("matrix", &Gate::matrix);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("proof_qubits", &Circuit::proof_qubits)
        .def_property_readonly("num_gates", &Circuit::num_gates)
        .def_property_readonly("gates", &Circuit::gates);

    m.def("parse_circuit", &parse_circuit, "text"_a);

    // Proofs cross the boundary as plain amplitude arrays.
    m.def(
        "run_circuit",
        [](const Circuit &c, const Vector &proof) {
            return run_circuit(c, to_state(proof)).amplitudes();
        },
        "circuit"_a, "proof"_a);
    m.def(
        "acceptance_probability",
        [](const Circuit &c, const Vector &proof) {
            return acceptance_probability(c, to_state(proof));
        },
        "circuit"_a, "proof"_a);
    m.def(
        "optimal_acceptance",
        [](const Circuit &c) {
            auto res = optimal_acceptance(c);
            return py::make_tuple(res.p_max, res.proof.amplitudes());
        },
        "circuit"_a);

    py::class_<LocalTerm>(m, "LocalTerm")
        .def_readonly("label", &LocalTerm::label)
        .def_readonly("support", &LocalTerm::support)
        .def_readonly("matrix", &LocalTerm::matrix)
        .def_readonly("weight", &LocalTerm::weight);

    py::class_<LocalHamiltonian>(m, "LocalHamiltonian")
        .def_readonly("n", &LocalHamiltonian::n)
        .def_readonly("terms", &LocalHamiltonian::terms)
        .def_property_readonly("thresholds", [](const LocalHamiltonian &h) {
            return h.thresholds ? py::make_tuple(h.thresholds->a, h.thresholds->b)
                                : py::object(py::none());
        });

    m.def("assemble", &assemble, "hamiltonian"_a);
    m.def("locality", &locality, "hamiltonian"_a);
    m.def("write_hamiltonian", &write_hamiltonian, "hamiltonian"_a);
    m.def("read_hamiltonian", &read_hamiltonian, "text"_a);
    m.def(
        "normalize_terms",
        [](const LocalHamiltonian &h, double a, double b) {
            auto res = normalize_terms(h, a, b);
            return py::make_tuple(res.hamiltonian, res.hamiltonian.thresholds->a,
                                  res.hamiltonian.thresholds->b);
        },
        "hamiltonian"_a, "a"_a, "b"_a);

    m.def(
        "build_3local",
        [](const Circuit &c, int penalty_exponent) {
            ReductionParams p;
            p.penalty_exponent = penalty_exponent;
            return build_3local(c, p);
        },
        "circuit"_a, "penalty_exponent"_a = 12);
    m.def("build_reference", &build_reference, "circuit"_a);
    m.def(
        "history_state",
        [](const Circuit &c, const Vector &proof) {
            auto h = history_state(c, to_state(proof));
            return py::make_tuple(h.unary.amplitudes(), h.reference);
        },
        "circuit"_a, "proof"_a);
    m.def("legal_projector", &legal_projector, "num_qubits"_a, "num_gates"_a);
    m.def("compress_legal", &compress_legal, "op"_a, "num_qubits"_a,
          "num_gates"_a);
    m.def(
        "sat_to_hamiltonian",
        [](int num_vars, std::vector<std::vector<int>> clauses) {
            return sat_to_hamiltonian(Cnf{num_vars, std::move(clauses)});
        },
        "num_vars"_a, "clauses"_a);

    m.def(
        "min_eigenvalue",
        [](const Matrix &op) {
            auto r = min_eigenvalue(op);
            return py::make_tuple(r.lambda_min, r.residual);
        },
        "op"_a);
    m.def(
        "min_eigenvalue_local",
        [](const LocalHamiltonian &h, bool iterative, std::uint64_t seed) {
            SpectralOptions o;
            o.force_iterative = iterative;
            o.seed = seed;
            auto r = min_eigenvalue(h, o);
            return py::make_tuple(r.lambda_min, r.residual,
                                  std::string(to_string(r.method)));
        },
        "hamiltonian"_a, "iterative"_a = false, "seed"_a = 0);
    m.def("rayleigh", py::overload_cast<const Matrix &, const Vector &>(&rayleigh),
          "op"_a, "state"_a);
    m.def("principal_angle", &principal_angle, "basis_a"_a, "basis_b"_a);

    m.def(
        "verify_completeness",
        [](const Circuit &c, const Vector &proof, double epsilon,
           int penalty_exponent) {
            VerifyOptions o;
            o.params.penalty_exponent = penalty_exponent;
            return format_report(
                verify_completeness(c, to_state(proof), epsilon, o));
        },
        "circuit"_a, "proof"_a, "epsilon"_a = 1e-3, "penalty_exponent"_a = 12);
    m.def(
        "verify_soundness",
        [](const Circuit &c, double epsilon, int penalty_exponent) {
            VerifyOptions o;
            o.params.penalty_exponent = penalty_exponent;
            return format_report(verify_soundness(c, epsilon, o));
        },
        "circuit"_a, "epsilon"_a = 1e-3, "penalty_exponent"_a = 12);
    m.def(
        "energy_identity_check",
        [](const Circuit &c, const Vector &proof) {
            return energy_identity_check(c, to_state(proof));
        },
        "circuit"_a, "proof"_a);
    m.def(
        "angle_diagnostic",
        [](const Circuit &c) {
            auto d = angle_diagnostic(c);
            return py::make_tuple(d.cos_theta, d.sin2_theta_T);
        },
        "circuit"_a);
    m.def(
        "decide",
        [](const LocalHamiltonian &h, double a, double b) {
            return static_cast<int>(decide(h, a, b));
        },
        "hamiltonian"_a, "a"_a, "b"_a,
        "1 (yes), 0 (no) or -1 (promise violated).");
}
