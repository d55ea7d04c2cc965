// Copyright 2026 The pecsim Authors
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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "pecsim/bias.h"
#include "pecsim/channel.h"
#include "pecsim/errors.h"
#include "pecsim/experiments.h"
#include "pecsim/implementability.h"
#include "pecsim/measures.h"
#include "pecsim/noise_map.h"
#include "pecsim/pauli.h"
#include "pecsim/sampler.h"

namespace py = pybind11;
using namespace pecsim;

namespace {

template <typename T>
DenseMatrix<T> to_dense(const std::vector<std::vector<T>> &rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    DenseMatrix<T> out(r, c);
    for (size_t i = 0; i < r; i++) {
        if (rows[i].size() != c) {
            throw std::invalid_argument("matrix rows must have equal length");
        }
        for (size_t j = 0; j < c; j++) {
            out(i, j) = rows[i][j];
        }
    }
    return out;
}

template <typename T>
std::vector<std::vector<T>> from_dense(const DenseMatrix<T> &m) {
    std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

ExperimentConfig config_from_str(const std::string &json_text) {
    ExperimentConfig c = config_from_json(nlohmann::json::parse(json_text));
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_pecsim, m) {
    m.doc() = "Pauli channel cancellation with noisy gates";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::from_label))
        .def_static("from_index", [](size_t index, size_t n) { return PauliString(n, index); })
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("index", &PauliString::index)
        .def_property_readonly("weight", &PauliString::weight)
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; })
        .def("__eq__", [](const PauliString &a, const PauliString &b) { return a == b; });
    m.def("commutation_sign", &commutation_sign);
    m.def("pauli_product", &pauli_product);
    m.def("fast_symplectic_transform", [](const std::vector<double> &v, size_t n) {
        return fast_symplectic_transform(v, n);
    });

    py::class_<PauliChannel>(m, "PauliChannel")
        .def(py::init<size_t, std::vector<double>>(), py::arg("num_qubits"), py::arg("coeffs"))
        .def_static("identity", &PauliChannel::identity)
        .def_static("depolarizing", &PauliChannel::depolarizing)
        .def_static("from_eigenvalues",
                    [](size_t n, const std::vector<double> &chi) { return from_eigenvalues(n, chi); })
        .def_property_readonly("num_qubits", &PauliChannel::num_qubits)
        .def_property_readonly("coeffs", &PauliChannel::coeffs)
        .def("eigenvalues", [](const PauliChannel &c) { return eigenvalues(c); })
        .def("inverse", [](const PauliChannel &c) { return inverse(c); })
        .def("power", [](const PauliChannel &c, int k) { return channel_power(c, k); })
        .def("is_cptp", [](const PauliChannel &c) { return is_cptp(c); })
        .def("p_pauli", &p_pauli)
        .def("__matmul__", &compose)
        .def("__repr__", [](const PauliChannel &c) {
            return "PauliChannel(n=" + std::to_string(c.num_qubits()) + ")";
        });
    m.def("compose", &compose);
    m.def("tensor", &tensor);
    m.def("p_pauli", &p_pauli);
    m.def("robustness", &robustness);

    py::class_<LindbladModel>(m, "LindbladModel")
        .def(py::init([](size_t n, const std::vector<std::pair<std::string, double>> &terms) {
                 std::vector<LindbladTerm> t;
                 for (const auto &[label, rate] : terms) {
                     t.push_back({PauliString::from_label(label), rate});
                 }
                 return LindbladModel(n, std::move(t));
             }),
             py::arg("num_qubits"), py::arg("terms"))
        .def_static("from_rates",
                    [](size_t n, const std::vector<double> &r) { return LindbladModel::from_rates(n, r); })
        .def_static("random", &random_pauli_lindblad, py::arg("num_qubits"), py::arg("total_rate"),
                    py::arg("seed"))
        .def_property_readonly("num_qubits", &LindbladModel::num_qubits)
        .def_property_readonly("total_rate", &LindbladModel::total_rate)
        .def("dense_rates", &LindbladModel::dense_rates)
        .def("scaled", &LindbladModel::scaled)
        .def("channel", &lindblad_channel);

    py::class_<NoiseMap>(m, "NoiseMap")
        .def(py::init([](size_t n, const std::vector<std::vector<double>> &theta) {
            return NoiseMap(n, to_dense(theta));
        }))
        .def_static("identity", &NoiseMap::identity)
        .def_static("from_gate_noises",
                    [](const std::vector<PauliChannel> &g) { return noise_map_from_gate_noises(g); })
        .def_property_readonly("num_qubits", &NoiseMap::num_qubits)
        .def_property_readonly("theta", [](const NoiseMap &nm) { return from_dense(nm.theta()); })
        .def("gate", &NoiseMap::gate)
        .def("apply", &apply_noise)
        .def("theta_lambda", &theta_lambda)
        .def("modified_quasiprobability",
             [](const NoiseMap &nm, const std::vector<double> &r) { return modified_quasiprobability(nm, r); });

    py::class_<InvertibilityCheck>(m, "InvertibilityCheck")
        .def_readonly("passes", &InvertibilityCheck::passes)
        .def_readonly("threshold", &InvertibilityCheck::threshold)
        .def_readonly("norm", &InvertibilityCheck::norm)
        .def_readonly("failure_bound", &InvertibilityCheck::failure_bound);
    m.def("invertibility_criterion", &invertibility_criterion, py::arg("noise_map"), py::arg("shots"),
          py::arg("delta"));
    m.def("simulate_estimation", &simulate_estimation, py::arg("noise_map"), py::arg("shots"), py::arg("seed"));

    py::class_<LpReport>(m, "LpReport")
        .def_readonly("p", &LpReport::p)
        .def_readonly("x", &LpReport::x)
        .def_readonly("iterations", &LpReport::iterations);
    m.def(
        "implementability",
        [](const std::vector<std::vector<double>> &points, const std::vector<double> &target,
           const std::vector<double> &functional, bool affine) {
            if (points.empty()) {
                throw std::invalid_argument("free set is empty");
            }
            FreeSet fs(points[0].size(), points, functional);
            LpOptions opts;
            opts.affine = affine;
            return implementability_lp(fs, target, opts);
        },
        py::arg("points"), py::arg("target"), py::arg("functional") = std::vector<double>{},
        py::arg("affine") = true);

    py::enum_<CancelMethod>(m, "CancelMethod")
        .value("SEPARATE", CancelMethod::Separate)
        .value("DIRECT", CancelMethod::Direct);
    py::class_<NamedBound>(m, "NamedBound")
        .def_readonly("name", &NamedBound::name)
        .def_readonly("value", &NamedBound::value);
    py::class_<BiasReport>(m, "BiasReport")
        .def_readonly("layer", &BiasReport::layer)
        .def_readonly("method", &BiasReport::method)
        .def_readonly("biases", &BiasReport::biases)
        .def_readonly("p_distance", &BiasReport::p_distance)
        .def_readonly("p_canceled", &BiasReport::p_canceled)
        .def_readonly("cptp", &BiasReport::cptp)
        .def_readonly("bounds", &BiasReport::bounds)
        .def_property_readonly("max_bias", &BiasReport::max_bias)
        .def_property_readonly("headline_bound", &BiasReport::headline_bound);
    m.def("canceled_error", &canceled_error, py::arg("error"), py::arg("noise_map"), py::arg("layers"),
          py::arg("method"));
    m.def("analyze_cancellation", &analyze_cancellation, py::arg("error"), py::arg("noise_map"),
          py::arg("layers"), py::arg("method"));
    m.def("mitigation_bias_bound", [](const std::vector<double> &d) { return mitigation_bias_bound(d); });

    py::class_<PecEstimate>(m, "PecEstimate")
        .def_readonly("mean", &PecEstimate::mean)
        .def_readonly("std_error", &PecEstimate::std_error)
        .def_readonly("shots", &PecEstimate::shots)
        .def_readonly("cost", &PecEstimate::cost)
        .def_readonly("seed", &PecEstimate::seed)
        .def_property_readonly("observable", [](const PecEstimate &e) { return e.observable.str(); });
    m.def(
        "run_pec",
        [](const std::vector<double> &quasi, const PauliChannel &error, const std::vector<double> &ideal,
           const std::string &observable, uint64_t shots, uint64_t seed, std::optional<NoiseMap> realized) {
            QuasiProgram prog = QuasiProgram::from_dense(error.num_qubits(), quasi);
            return run_pec(prog, realized, error, ideal, PauliString::from_label(observable), shots, seed);
        },
        py::arg("quasi"), py::arg("error"), py::arg("ideal"), py::arg("observable"), py::arg("shots"),
        py::arg("seed"), py::arg("realized") = std::nullopt);

    m.def("trace_norm", [](const std::vector<std::vector<complex>> &h) { return trace_norm(to_dense(h)); });
    m.def("log_negativity", [](const std::vector<std::vector<complex>> &rho, const std::vector<size_t> &b) {
        return log_negativity(to_dense(rho), b);
    });
    m.def("purity", [](const std::vector<std::vector<complex>> &rho) { return purity(to_dense(rho)); });
    m.def("diamond_lower_bound", &diamond_lower_bound, py::arg("channel"), py::arg("samples"), py::arg("seed"),
          py::arg("include_max_entangled") = true);

    m.def("_run_fig3", [](const std::string &cfg) { return run_fig3(config_from_str(cfg)).to_csv(); });
    m.def("_run_fig4", [](const std::string &cfg) { return run_fig4(config_from_str(cfg)).to_csv(); });
    m.def("_run_invertibility",
          [](const std::string &cfg) { return run_invertibility_study(config_from_str(cfg)).to_csv(); });
}
