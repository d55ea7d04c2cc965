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

#include "pecsim/experiments.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pecsim/implementability.h"
#include "pecsim/io.h"
#include "pecsim/parallel.h"
#include "pecsim/rng.h"

namespace pecsim {

void ExperimentConfig::validate() const {
    if (num_qubits < 1 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("n must be in [1, 10]");
    }
    if (layers < 1) {
        throw std::invalid_argument("layers must be at least 1");
    }
    if (!(rate >= 0) || !std::isfinite(rate)) {
        throw std::invalid_argument("rate must be a finite non-negative number");
    }
    if (!(residual >= 0) || !std::isfinite(residual)) {
        throw std::invalid_argument("residual must be a finite non-negative number");
    }
    if (seeds < 1) {
        throw std::invalid_argument("seeds must be at least 1");
    }
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be csv or json");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    for (auto s : shot_grid) {
        if (s < 1) {
            throw std::invalid_argument("shot grid entries must be positive");
        }
    }
    methods();
}

std::vector<CancelMethod> ExperimentConfig::methods() const {
    if (method == "both") {
        return {CancelMethod::Direct, CancelMethod::Separate};
    }
    return {parse_method(method)};
}

ExperimentConfig config_from_json(const nlohmann::json &j, ExperimentConfig c) {
    if (!j.is_object()) {
        throw std::invalid_argument("config must be an object");
    }
    try {
        for (const auto &[key, v] : j.items()) {
            if (key == "n") {
                c.num_qubits = v.get<size_t>();
            } else if (key == "layers") {
                c.layers = v.get<size_t>();
            } else if (key == "rate") {
                c.rate = v.get<double>();
            } else if (key == "residual") {
                c.residual = v.get<double>();
            } else if (key == "seeds") {
                c.seeds = v.get<size_t>();
            } else if (key == "seed") {
                c.master_seed = v.get<uint64_t>();
            } else if (key == "method") {
                c.method = v.get<std::string>();
            } else if (key == "out") {
                c.out = v.get<std::string>();
            } else if (key == "format") {
                c.format = v.get<std::string>();
            } else if (key == "shots") {
                c.shot_grid = v.get<std::vector<uint64_t>>();
            } else if (key == "delta") {
                c.delta = v.get<double>();
            } else {
                throw std::invalid_argument("unknown config field '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("bad config value: ") + e.what());
    }
    return c;
}

nlohmann::json config_to_json(const ExperimentConfig &c) {
    return {
        {"n", c.num_qubits},
        {"layers", c.layers},
        {"rate", c.rate},
        {"residual", c.residual},
        {"seeds", c.seeds},
        {"seed", c.master_seed},
        {"method", c.method},
        {"out", c.out},
        {"format", c.format},
        {"shots", c.shot_grid},
        {"delta", c.delta},
    };
}

std::string ResultTable::to_csv() const {
    std::ostringstream out;
    out << "method,regime,layer,seed,pauli,bias,p_distance,p_canceled,cptp,bound_name,bound_value\n";
    for (const auto &r : rows) {
        out << r.method << ',' << r.regime << ',' << r.layer << ',' << r.seed << ',' << r.pauli.str() << ','
            << format_real(r.bias) << ',' << format_real(r.p_distance) << ',' << format_real(r.p_canceled) << ','
            << (r.cptp ? 1 : 0) << ',' << r.bound_name << ',' << format_real(r.bound_value) << '\n';
    }
    return out.str();
}

nlohmann::json ResultTable::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto &r : rows) {
        arr.push_back({
            {"method", r.method},
            {"regime", r.regime},
            {"layer", r.layer},
            {"seed", r.seed},
            {"pauli", r.pauli.str()},
            {"bias", r.bias},
            {"p_distance", r.p_distance},
            {"p_canceled", r.p_canceled},
            {"cptp", r.cptp},
            {"bound_name", r.bound_name},
            {"bound_value", r.bound_value},
        });
    }
    return arr;
}

std::string ResultTable::render(const std::string &format) const {
    if (format == "json") {
        return to_json().dump(1) + "\n";
    }
    return to_csv();
}

NoiseMap NoisyScenario::noise_map() const {
    std::vector<PauliChannel> noises;
    noises.reserve(gate_noises.size());
    for (const auto &g : gate_noises) {
        noises.push_back(lindblad_channel(g));
    }
    return noise_map_from_gate_noises(noises);
}

NoisyScenario draw_scenario(size_t num_qubits, double rate, uint64_t master_seed, size_t seed_index) {
    uint64_t s = derive_seed(master_seed, seed_index);
    NoisyScenario out{random_pauli_lindblad(num_qubits, rate, derive_seed(s, 0)), {}};
    const size_t dim = pauli_dim(num_qubits);
    out.gate_noises.reserve(dim);
    for (size_t i = 0; i < dim; i++) {
        out.gate_noises.push_back(random_pauli_lindblad(num_qubits, rate, derive_seed(s, 1 + i)));
    }
    return out;
}

namespace {

void append_rows(std::vector<ResultRow> &rows,
                 const std::string &method,
                 const std::string &regime,
                 size_t layer,
                 size_t seed,
                 size_t n,
                 const std::vector<double> &biases,
                 double p_distance,
                 double p_canceled,
                 bool cptp,
                 const NamedBound &bound) {
    for (size_t k = 0; k < biases.size(); k++) {
        rows.push_back({method, regime, layer, seed, PauliString(n, k), biases[k], p_distance, p_canceled, cptp,
                        bound.name, bound.value});
    }
}

void sort_rows(std::vector<ResultRow> &rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow &a, const ResultRow &b) {
        return std::tie(a.method, a.regime, a.layer, a.seed) < std::tie(b.method, b.regime, b.layer, b.seed) ||
               (std::tie(a.method, a.regime, a.layer, a.seed) == std::tie(b.method, b.regime, b.layer, b.seed) &&
                a.pauli.index() < b.pauli.index());
    });
}

}  // namespace

ResultTable run_fig3(const ExperimentConfig &config) {
    config.validate();
    const auto methods = config.methods();
    const size_t n = config.num_qubits;
    std::vector<std::vector<ResultRow>> per_seed(config.seeds);
    parallel_for(config.seeds, [&](size_t s) {
        auto scenario = draw_scenario(n, config.rate, config.master_seed, s);
        auto e0 = lindblad_channel(scenario.error);
        auto m = scenario.noise_map();
        auto q = modified_quasiprobability(m, lindblad_channel(scenario.error.scaled(-1)).coeffs());
        double p_layer = 0;
        for (double v : q) {
            p_layer += std::abs(v);
        }
        const double tl = theta_lambda(m);
        for (auto method : methods) {
            for (size_t layer = 1; layer <= config.layers; layer++) {
                auto rep = bias_report(canceled_error(e0, m, layer, method), method, layer, tl, p_layer);
                append_rows(per_seed[s], method_name(method), "noisy_gates", layer, s, n, rep.biases,
                            rep.p_distance, rep.p_canceled, rep.cptp, rep.headline_bound());
            }
        }
    });
    ResultTable table;
    for (auto &rows : per_seed) {
        table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    }
    sort_rows(table.rows);
    return table;
}

ResultTable run_fig4(const ExperimentConfig &config) {
    config.validate();
    const size_t n = config.num_qubits;
    std::vector<std::vector<ResultRow>> per_seed(config.seeds);
    parallel_for(config.seeds, [&](size_t s) {
        auto residual = random_pauli_lindblad(n, config.residual, derive_seed(config.master_seed, s));
        for (int sign : {+1, -1}) {
            const std::string regime = sign > 0 ? "under" : "over";
            for (size_t layer = 1; layer <= config.layers; layer++) {
                auto model = residual.scaled(sign * static_cast<double>(layer));
                auto c = lindblad_channel(model);
                auto rates = model.dense_rates();
                NamedBound bound{regime + "_mitigated", mitigation_bias_bound(rates)};
                append_rows(per_seed[s], "mitigated", regime, layer, s, n, exact_bias(c),
                            implementability_distance(c), p_pauli(c), is_cptp(c), bound);
            }
        }
    });
    ResultTable table;
    for (auto &rows : per_seed) {
        table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    }
    sort_rows(table.rows);
    return table;
}

std::vector<std::pair<uint64_t, double>> InvertibilityStudy::pass_rates() const {
    std::vector<std::pair<uint64_t, double>> out;
    std::map<uint64_t, std::pair<size_t, size_t>> counts;
    for (const auto &r : rows) {
        if (!counts.count(r.shots)) {
            out.push_back({r.shots, 0});
        }
        auto &c = counts[r.shots];
        c.first += r.check.passes ? 1 : 0;
        c.second += 1;
    }
    for (auto &[shots, rate] : out) {
        rate = static_cast<double>(counts[shots].first) / static_cast<double>(counts[shots].second);
    }
    return out;
}

std::string InvertibilityStudy::to_csv() const {
    std::ostringstream out;
    out << "shots,seed,norm,threshold,passes,failure_bound\n";
    for (const auto &r : rows) {
        out << r.shots << ',' << r.seed << ',' << format_real(r.check.norm) << ',' << format_real(r.check.threshold)
            << ',' << (r.check.passes ? 1 : 0) << ',' << format_real(r.check.failure_bound) << '\n';
    }
    return out.str();
}

nlohmann::json InvertibilityStudy::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto &r : rows) {
        nlohmann::json fb = std::isnan(r.check.failure_bound) ? nlohmann::json(nullptr)
                                                              : nlohmann::json(r.check.failure_bound);
        arr.push_back({{"shots", r.shots},
                       {"seed", r.seed},
                       {"norm", r.check.norm},
                       {"threshold", r.check.threshold},
                       {"passes", r.check.passes},
                       {"failure_bound", fb}});
    }
    auto rates = nlohmann::json::array();
    for (const auto &[shots, rate] : pass_rates()) {
        rates.push_back({{"shots", shots}, {"pass_rate", rate}});
    }
    return {{"rows", arr}, {"pass_rates", rates}};
}

std::string InvertibilityStudy::render(const std::string &format) const {
    if (format == "json") {
        return to_json().dump(1) + "\n";
    }
    return to_csv();
}

NoiseMap true_noise_map(const ExperimentConfig &config) {
    return draw_scenario(config.num_qubits, config.rate, config.master_seed, 0).noise_map();
}

InvertibilityStudy run_invertibility_study(const ExperimentConfig &config) {
    config.validate();
    auto truth = true_noise_map(config);
    const size_t per_grid = config.seeds;
    InvertibilityStudy study;
    study.rows.resize(config.shot_grid.size() * per_grid);
    parallel_for(study.rows.size(), [&](size_t job) {
        uint64_t shots = config.shot_grid[job / per_grid];
        size_t seed = job % per_grid;
        uint64_t stream = derive_seed(derive_seed(config.master_seed, 1 + job / per_grid), seed);
        auto estimate = simulate_estimation(truth, shots, stream);
        study.rows[job] = {shots, seed, invertibility_criterion(estimate, shots, config.delta)};
    });
    return study;
}

std::vector<PecEstimate> run_sampler_study(const QuasiProgram &program,
                                           const std::optional<NoiseMap> &realized,
                                           const PauliChannel &error,
                                           std::span<const double> ideal_expectations,
                                           const PauliString &observable,
                                           uint64_t shots,
                                           size_t seeds,
                                           uint64_t master_seed) {
    if (seeds < 1) {
        throw std::invalid_argument("seeds must be at least 1");
    }
    std::vector<PecEstimate> out;
    out.reserve(seeds);
    for (size_t s = 0; s < seeds; s++) {
        // run_pec is already parallel over shots.
        out.push_back(run_pec(program, realized, error, ideal_expectations, observable, shots,
                              derive_seed(master_seed, s)));
    }
    return out;
}

}  // namespace pecsim
