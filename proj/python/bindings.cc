// Copyright 2026 The opmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include <sstream>

#include "opmagic/circuit.h"
#include "opmagic/cli.h"
#include "opmagic/dense_oracle.h"
#include "opmagic/haar_stats.h"
#include "opmagic/heisenberg.h"
#include "opmagic/io.h"
#include "opmagic/magic.h"
#include "opmagic/pauli_string.h"
#include "opmagic/sparse_operator.h"
#include "opmagic/xxz.h"

namespace py = pybind11;
using namespace opmagic;

namespace {

SparseOperator operator_from_pairs(size_t n, const std::vector<std::pair<std::string, double>> &terms) {
    std::vector<PauliTerm> v;
    v.reserve(terms.size());
    for (const auto &[s, c] : terms) {
        PauliString p = PauliString::from_letters(s);
        if (p.num_qubits() != n) {
            throw std::invalid_argument("Pauli string '" + s + "' does not have " + std::to_string(n) + " letters.");
        }
        v.push_back(PauliTerm{p, c});
    }
    return SparseOperator::from_terms(n, std::move(v));
}

std::vector<std::pair<std::string, double>> operator_pairs(const SparseOperator &op) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto &t : op.terms()) {
        out.emplace_back(t.pauli.str(), t.coeff);
    }
    return out;
}

Gate make_gate(const std::string &name, const std::vector<size_t> &sites, double theta) {
    auto kind = gate_kind_from_name(name);
    if (!kind) {
        throw std::invalid_argument("Unknown gate kind '" + name + "'.");
    }
    if (sites.size() != gate_arity(*kind)) {
        throw std::invalid_argument("Gate '" + name + "' takes " + std::to_string(gate_arity(*kind)) + " sites.");
    }
    Gate g = sites.size() == 1 ? Gate::single(*kind, sites[0]) : Gate::pair(*kind, sites[0], sites[1]);
    g.theta = gate_has_angle(*kind) ? theta : 0;
    return g;
}

py::dict report_dict(const OseReport &r) {
    py::dict d;
    d["alpha"] = r.alpha;
    d["purity"] = r.purity;
    d["ose"] = r.ose;
    d["linear_ose"] = r.linear_ose;
    d["rank"] = r.rank;
    d["support_size"] = r.support_size;
    return d;
}

py::dict estimate_dict(const McEstimate &e) {
    py::dict d;
    d["mean"] = e.mean;
    d["std_error"] = e.std_error;
    d["n_samples"] = e.n_samples;
    d["seed"] = e.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_opmagic, m) {
    m.doc() = "Sparse Heisenberg-picture Pauli propagation and operator stabilizer entropies.";
    m.attr("__version__") = OPMAGIC_VERSION;
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init([](const std::string &letters) { return PauliString::from_letters(letters); }))
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("weight", &PauliString::weight)
        .def("commutes", [](const PauliString &a, const PauliString &b) { return commutes(a, b); })
        .def("__mul__",
             [](const PauliString &a, const PauliString &b) {
                 PauliProduct p = pauli_mul(a, b);
                 return std::make_pair(p.phase(), p.result);
             })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; })
        .def("__hash__", [](const PauliString &p) { return std::hash<std::string>{}(p.str()); })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });
    m.def("enumerate_paulis", [](size_t n) {
        std::vector<std::string> out;
        for (const auto &p : enumerate_paulis(n)) {
            out.push_back(p.str());
        }
        return out;
    });

    py::class_<SparseOperator>(m, "SparseOperator")
        .def(py::init(&operator_from_pairs), py::arg("num_qubits"), py::arg("terms"))
        .def_static("pauli", [](const std::string &s, double c) { return SparseOperator::from_pauli(PauliString::from_letters(s), c); },
                    py::arg("letters"), py::arg("coeff") = 1.0)
        .def_static("local", &SparseOperator::from_local, py::arg("site"), py::arg("a_x"), py::arg("a_y"),
                    py::arg("a_z"), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &SparseOperator::num_qubits)
        .def_property_readonly("rank", &SparseOperator::rank)
        .def_property_readonly("l2_weight", &SparseOperator::l2_weight)
        .def("terms", &operator_pairs)
        .def("coefficient", [](const SparseOperator &op, const std::string &s) {
            return op.coefficient(PauliString::from_letters(s));
        })
        .def("tensor", &SparseOperator::tensor)
        .def("to_json", [](const SparseOperator &op) { return operator_to_json(op).dump(); })
        .def_static("from_json", [](const std::string &s) { return operator_from_json(nlohmann::json::parse(s)); })
        .def("__eq__", [](const SparseOperator &a, const SparseOperator &b) { return a == b; })
        .def("__len__", &SparseOperator::rank);

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<size_t>(), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("t_count", &Circuit::t_count)
        .def_property_readonly("is_clifford", &Circuit::is_clifford)
        .def(
            "append",
            [](Circuit &c, const std::string &name, const std::vector<size_t> &sites, double theta) -> Circuit & {
                c.append(make_gate(name, sites, theta));
                return c;
            },
            py::arg("kind"), py::arg("sites"), py::arg("theta") = 0.0, py::return_value_policy::reference_internal)
        .def("gates",
             [](const Circuit &c) {
                 py::list out;
                 for (const auto &g : c.gates()) {
                     std::vector<size_t> sites = {g.q0};
                     if (g.arity() == 2) {
                         sites.push_back(g.q1);
                     }
                     out.append(py::make_tuple(std::string(gate_name(g.kind)), sites, g.theta));
                 }
                 return out;
             })
        .def("to_text", &format_gate_list)
        .def_static("from_text", [](const std::string &s) { return parse_gate_list(s); })
        .def("to_json", [](const Circuit &c) { return circuit_to_json(c).dump(); })
        .def_static("from_json", [](const std::string &s) { return circuit_from_json(nlohmann::json::parse(s)); })
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; })
        .def("__len__", &Circuit::size);

    m.def("xxz_brick", &xxz_brick, py::arg("coupling"));
    m.def("brickwork_circuit", &brickwork_circuit, py::arg("num_qubits"), py::arg("layers"), py::arg("brick"));
    m.def("random_clifford_circuit", &random_clifford_circuit, py::arg("num_qubits"), py::arg("depth"), py::arg("seed"));
    m.def("doped_circuit", &doped_circuit, py::arg("num_qubits"), py::arg("t_count"), py::arg("clifford_depth") = 0,
          py::arg("seed") = 1);
    m.def("random_mixed_circuit", &random_mixed_circuit, py::arg("num_qubits"), py::arg("num_gates"), py::arg("seed"));

    m.def("evolve", &evolve_heisenberg, py::arg("op"), py::arg("circuit"),
          py::arg("prune_tolerance") = DEFAULT_PRUNE_TOLERANCE);
    m.def("support", &support);

    m.def("ose", [](const SparseOperator &e, const SparseOperator &i, double a) { return report_dict(ose(e, i, a)); },
          py::arg("evolved"), py::arg("initial"), py::arg("alpha"));
    m.def("purity", &purity, py::arg("op"), py::arg("alpha"));
    m.def("t_count_lower_bound", &t_count_lower_bound, py::arg("evolved"), py::arg("initial"), py::arg("alpha"));
    m.def(
        "truncate_top",
        [](const SparseOperator &op, size_t chi) {
            TruncationResult r = truncate_top(op, chi);
            py::dict d;
            d["kept"] = r.kept;
            d["normalized"] = r.normalized();
            d["epsilon"] = r.epsilon;
            d["kept_weight"] = r.kept_weight;
            return d;
        },
        py::arg("op"), py::arg("chi"));
    m.def("expectation_error_bound", &expectation_error_bound, py::arg("epsilon"));

    m.def("xxz_closed_form", [](double J, size_t t, double ax, double ay, double az, double alpha) {
        XxzParams p{J, t, ax, ay, az, alpha};
        return alpha == 1 ? alpha1_ose(p) : closed_form_ose(p);
    }, py::arg("J"), py::arg("t"), py::arg("a_x") = 1.0, py::arg("a_y") = 0.0, py::arg("a_z") = 0.0, py::arg("alpha") = 2.0);
    m.def("xxz_saturation", [](double ax, double ay, double az, double alpha) {
        return saturation_ose(XxzParams{0, 0, ax, ay, az, alpha});
    }, py::arg("a_x"), py::arg("a_y"), py::arg("a_z"), py::arg("alpha") = 2.0);
    m.def("xxz_simulate", [](double J, size_t t, double ax, double ay, double az, double alpha) {
        XxzComparison c = simulate_vs_closed(XxzParams{J, t, ax, ay, az, alpha});
        return py::make_tuple(c.simulated, c.closed);
    }, py::arg("J"), py::arg("t"), py::arg("a_x") = 1.0, py::arg("a_y") = 0.0, py::arg("a_z") = 0.0, py::arg("alpha") = 2.0);

    m.def("closed_form_avg_purity", &closed_form_avg_purity, py::arg("dim"), py::arg("alpha"));
    m.def("asymptotic_avg_purity", &asymptotic_avg_purity, py::arg("dim"), py::arg("alpha"));
    m.def("asymptotic_ose", &asymptotic_ose, py::arg("num_qubits"), py::arg("alpha"));
    m.def("mc_average_purity", [](size_t n, double a, size_t s, uint64_t seed, size_t w) {
        py::gil_scoped_release release;
        McEstimate e = mc_average_purity(n, a, s, seed, w);
        py::gil_scoped_acquire acquire;
        return estimate_dict(e);
    }, py::arg("num_qubits"), py::arg("alpha"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
    m.def("relative_fluctuation", [](size_t n, size_t s, uint64_t seed, size_t w) {
        return estimate_dict(relative_fluctuation(n, s, seed, w));
    }, py::arg("num_qubits"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
    m.def("haar_unitary", [](size_t dim, uint64_t seed) { return sample_haar_unitary(dim, seed); },
          py::arg("dim"), py::arg("seed"));

    m.def("circuit_unitary", &dense::circuit_unitary, py::arg("circuit"));
    m.def("stabilizer_nullity", [](const Circuit &c) {
        dense::NullityReport r = dense::stabilizer_nullity(dense::circuit_unitary(c));
        return py::make_tuple(r.s_count, r.nu);
    }, py::arg("circuit"));

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::stringstream out;
        std::stringstream err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
