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

#include "pecsim/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pecsim {

namespace {

const json &require(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::vector<double> real_array(const json &j, const char *what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto &e : j) {
        if (!e.is_number()) {
            throw std::invalid_argument(std::string(what) + " must be an array of numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

size_t qubit_count(const json &j) {
    const auto &n = require(j, "n");
    if (!n.is_number_integer() || n.get<long>() < 1 || n.get<long>() > static_cast<long>(MAX_QUBITS)) {
        throw std::invalid_argument("\"n\" must be an integer in [1, 10]");
    }
    return n.get<size_t>();
}

}  // namespace

std::string format_real(double v) {
    if (v == 0) {
        v = 0;  // folds -0 into 0
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    out << text;
}

LindbladModel lindblad_from_json(const json &j) {
    size_t n = qubit_count(j);
    const auto &gens = require(j, "generators");
    if (!gens.is_array()) {
        throw std::invalid_argument("\"generators\" must be an array");
    }
    std::vector<LindbladTerm> terms;
    for (const auto &g : gens) {
        auto p = PauliString::from_label(require(g, "pauli").get<std::string>());
        const auto &rate = require(g, "lambda");
        if (!rate.is_number()) {
            throw std::invalid_argument("\"lambda\" must be a number");
        }
        terms.push_back({p, rate.get<double>()});
    }
    return LindbladModel(n, std::move(terms));
}

PauliChannel channel_from_json(const json &j) {
    std::string format = j.is_object() && j.contains("format") ? j.at("format").get<std::string>() : "dense";
    if (format == "dense") {
        return PauliChannel(qubit_count(j), real_array(require(j, "coeffs"), "\"coeffs\""));
    }
    if (format == "lindblad") {
        return lindblad_channel(lindblad_from_json(j));
    }
    throw std::invalid_argument("unknown channel format '" + format + "'");
}

json channel_to_json(const PauliChannel &c) {
    return json{{"n", c.num_qubits()}, {"format", "dense"}, {"coeffs", c.coeffs()}};
}

json lindblad_to_json(const LindbladModel &m) {
    json gens = json::array();
    for (const auto &t : m.terms()) {
        gens.push_back({{"pauli", t.pauli.str()}, {"lambda", t.rate}});
    }
    return json{{"n", m.num_qubits()}, {"format", "lindblad"}, {"generators", gens}};
}

NoiseMap noise_map_from_json(const json &j) {
    size_t n = qubit_count(j);
    if (j.contains("gates")) {
        std::vector<PauliChannel> noises;
        for (const auto &g : j.at("gates")) {
            json gj = g;
            if (!gj.contains("n")) {
                gj["n"] = n;
            }
            noises.push_back(channel_from_json(gj));
        }
        return noise_map_from_gate_noises(noises);
    }
    const auto &rows = require(j, "theta");
    const size_t dim = pauli_dim(n);
    if (!rows.is_array() || rows.size() != dim) {
        throw std::invalid_argument("\"theta\" must have 4^n rows");
    }
    Matrix theta(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        auto row = real_array(rows[r], "\"theta\" row");
        if (row.size() != dim) {
            throw std::invalid_argument("\"theta\" row " + std::to_string(r) + " has the wrong length");
        }
        for (size_t c = 0; c < dim; c++) {
            theta(r, c) = row[c];
        }
    }
    return NoiseMap(n, std::move(theta));
}

json noise_map_to_json(const NoiseMap &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.dim(); r++) {
        auto row = m.theta().row(r);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    return json{{"n", m.num_qubits()}, {"theta", rows}};
}

FreeSet free_set_from_json(const json &j) {
    const auto &dim = require(j, "dim");
    if (!dim.is_number_integer() || dim.get<long>() < 1) {
        throw std::invalid_argument("\"dim\" must be a positive integer");
    }
    std::vector<std::vector<double>> points;
    const auto &pts = require(j, "points");
    if (!pts.is_array()) {
        throw std::invalid_argument("\"points\" must be an array");
    }
    for (const auto &p : pts) {
        points.push_back(real_array(p, "free set point"));
    }
    std::vector<double> functional;
    if (j.contains("functional")) {
        functional = real_array(j.at("functional"), "\"functional\"");
    }
    return FreeSet(dim.get<size_t>(), std::move(points), std::move(functional));
}

json lp_report_to_json(const LpReport &r) {
    return json{{"p", r.p}, {"x", r.x}, {"iterations", r.iterations}};
}

CMatrix operator_from_json(const json &j) {
    const auto &dim_j = require(j, "dim");
    if (!dim_j.is_number_integer() || dim_j.get<long>() < 1) {
        throw std::invalid_argument("\"dim\" must be a positive integer");
    }
    size_t dim = dim_j.get<size_t>();
    const auto &entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw std::invalid_argument("\"entries\" must hold dim*dim [re, im] pairs");
    }
    CMatrix out(dim, dim);
    for (size_t k = 0; k < entries.size(); k++) {
        auto pair = real_array(entries[k], "operator entry");
        if (pair.size() != 2) {
            throw std::invalid_argument("operator entries must be [re, im] pairs");
        }
        out(k / dim, k % dim) = {pair[0], pair[1]};
    }
    return out;
}

json operator_to_json(const CMatrix &m) {
    json entries = json::array();
    for (const auto &e : m.data()) {
        entries.push_back({e.real(), e.imag()});
    }
    return json{{"dim", m.rows()}, {"entries", entries}};
}

json bias_report_to_json(const BiasReport &r) {
    json biases = json::object();
    for (size_t k = 0; k < r.biases.size(); k++) {
        biases[PauliString(r.num_qubits, k).str()] = r.biases[k];
    }
    json bounds = json::array();
    for (const auto &b : r.bounds) {
        bounds.push_back({{"bound_name", b.name}, {"bound_value", b.value}});
    }
    const auto &head = r.headline_bound();
    return json{
        {"layer", r.layer},
        {"method", method_name(r.method)},
        {"p_canceled", r.p_canceled},
        {"p_distance", r.p_distance},
        {"cptp", r.cptp},
        {"bound_name", head.name},
        {"bound_value", head.value},
        {"bounds", bounds},
        {"biases", biases},
    };
}

json estimate_to_json(const PecEstimate &e) {
    return json{
        {"observable", e.observable.str()},
        {"mean", e.mean},
        {"stderr", e.std_error},
        {"shots", e.shots},
        {"Z", e.cost},
        {"seed", e.seed},
    };
}

}  // namespace pecsim
