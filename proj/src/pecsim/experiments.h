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

#ifndef PECSIM_EXPERIMENTS_H
#define PECSIM_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "pecsim/bias.h"
#include "pecsim/channel.h"
#include "pecsim/noise_map.h"
#include "pecsim/sampler.h"

namespace pecsim {

struct ExperimentConfig {
    size_t num_qubits = 2;
    size_t layers = 20;
    /// Single-layer error rate lambda (fig3, invertibility).
    double rate = 0.05;
    /// Single-layer mitigation residual (fig4).
    double residual = 0.05;
    size_t seeds = 20;
    uint64_t master_seed = 42;
    /// "separate", "direct" or "both".
    std::string method = "both";
    std::string out;
    /// "csv" or "json".
    std::string format = "csv";
    std::vector<uint64_t> shot_grid = {1, 10, 100, 1000, 10000};
    double delta = 0.01;

    void validate() const;
    std::vector<CancelMethod> methods() const;
};

/// Overrides `base` with any fields present in the object.
ExperimentConfig config_from_json(const nlohmann::json &j, ExperimentConfig base = {});
nlohmann::json config_to_json(const ExperimentConfig &c);

struct ResultRow {
    std::string method;
    std::string regime;
    size_t layer = 0;
    size_t seed = 0;
    PauliString pauli;
    double bias = 0;
    double p_distance = 0;
    double p_canceled = 0;
    bool cptp = false;
    std::string bound_name;
    double bound_value = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    std::string to_csv() const;
    nlohmann::json to_json() const;
    std::string render(const std::string &format) const;
};

/// One random draw of the fig3 setting: error E0 and the noise of each of the 4^n Pauli gates.
struct NoisyScenario {
    LindbladModel error;
    std::vector<LindbladModel> gate_noises;

    NoiseMap noise_map() const;
};

NoisyScenario draw_scenario(size_t num_qubits, double rate, uint64_t master_seed, size_t seed_index);

ResultTable run_fig3(const ExperimentConfig &config);
ResultTable run_fig4(const ExperimentConfig &config);

struct InvertibilityRow {
    uint64_t shots = 0;
    size_t seed = 0;
    InvertibilityCheck check;
};

struct InvertibilityStudy {
    std::vector<InvertibilityRow> rows;

    /// Fraction of seeds passing at each grid point, in grid order.
    std::vector<std::pair<uint64_t, double>> pass_rates() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
    std::string render(const std::string &format) const;
};

/// The near-identity map estimated in the invertibility study.
NoiseMap true_noise_map(const ExperimentConfig &config);

InvertibilityStudy run_invertibility_study(const ExperimentConfig &config);

std::vector<PecEstimate> run_sampler_study(const QuasiProgram &program,
                                           const std::optional<NoiseMap> &realized,
                                           const PauliChannel &error,
                                           std::span<const double> ideal_expectations,
                                           const PauliString &observable,
                                           uint64_t shots,
                                           size_t seeds,
                                           uint64_t master_seed);

}  // namespace pecsim

#endif
