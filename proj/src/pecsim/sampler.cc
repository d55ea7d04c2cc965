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

#include "pecsim/sampler.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pecsim/parallel.h"
#include "pecsim/rng.h"

namespace pecsim {

namespace {

// chi_k(G_i o error) * ideal[k] for every program entry.
std::vector<double> entry_means(const QuasiProgram &program,
                                const std::optional<NoiseMap> &realized,
                                const PauliChannel &error,
                                std::span<const double> ideal,
                                const PauliString &observable) {
    const size_t n = program.num_qubits();
    if (error.num_qubits() != n || observable.num_qubits() != n) {
        throw std::invalid_argument("program, error and observable have different qubit counts");
    }
    if (realized && realized->num_qubits() != n) {
        throw std::invalid_argument("realized gate map has the wrong qubit count");
    }
    if (ideal.size() != pauli_dim(n)) {
        throw std::invalid_argument("ideal expectations need 4^n entries");
    }
    for (double v : ideal) {
        if (!(std::abs(v) <= 1)) {
            throw std::invalid_argument("ideal expectations must lie in [-1, 1]");
        }
    }
    const size_t k = observable.index();
    const double error_chi = eigenvalues(error)[k];
    std::vector<double> out;
    out.reserve(program.entries().size());
    for (const auto &e : program.entries()) {
        double gate_chi;
        if (realized) {
            gate_chi = eigenvalues(realized->gate(e.index))[k];
        } else {
            gate_chi = commutation_sign_index(e.index, k);
        }
        out.push_back(gate_chi * error_chi * ideal[k]);
    }
    return out;
}

}  // namespace

double variance_prediction(double cost, uint64_t shots) {
    if (!(cost >= 1 - 1e-9) || shots < 1) {
        throw std::invalid_argument("variance prediction needs Z >= 1 and N >= 1");
    }
    return cost * cost / static_cast<double>(shots);
}

double mitigated_expectation(const QuasiProgram &program,
                             const std::optional<NoiseMap> &realized,
                             const PauliChannel &error,
                             std::span<const double> ideal_expectations,
                             const PauliString &observable) {
    auto means = entry_means(program, realized, error, ideal_expectations, observable);
    CompensatedSum s;
    for (size_t i = 0; i < means.size(); i++) {
        s.add(program.entries()[i].quasi * means[i]);
    }
    return s.value();
}

PecEstimate run_pec(const QuasiProgram &program,
                    const std::optional<NoiseMap> &realized,
                    const PauliChannel &error,
                    std::span<const double> ideal_expectations,
                    const PauliString &observable,
                    uint64_t shots,
                    uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    auto means = entry_means(program, realized, error, ideal_expectations, observable);
    for (double m : means) {
        if (!(std::abs(m) <= 1 + 1e-12)) {
            throw std::invalid_argument("outcome mean outside [-1, 1]; the realized gates or error are not physical");
        }
    }
    auto weights = program.weights();
    auto signs = program.signs();
    std::vector<double> cumulative(weights.size());
    double acc = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        acc += weights[i];
        cumulative[i] = acc;
    }

    const CounterRng rng(seed, 0);
    const size_t chunks = std::min<uint64_t>(shots, 64);
    std::vector<int64_t> partial(chunks, 0);
    parallel_for(chunks, [&](size_t c) {
        uint64_t begin = shots * c / chunks;
        uint64_t end = shots * (c + 1) / chunks;
        int64_t total = 0;
        for (uint64_t s = begin; s < end; s++) {
            double pick = rng.uniform(2 * s) * acc;
            size_t i = static_cast<size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), pick) -
                                           cumulative.begin());
            i = std::min(i, cumulative.size() - 1);
            double p_plus = (1 + means[i]) / 2;
            int outcome = rng.uniform(2 * s + 1) < p_plus ? +1 : -1;
            total += signs[i] * outcome;
        }
        partial[c] = total;
    });
    int64_t total = 0;
    for (int64_t t : partial) {
        total += t;
    }

    // Every sample is +-1, so the sample variance is exactly 1 - mean^2.
    const double n = static_cast<double>(shots);
    const double sample_mean = static_cast<double>(total) / n;
    const double sample_var = std::max(0.0, 1 - sample_mean * sample_mean);
    PecEstimate est{observable};
    est.cost = program.cost();
    est.mean = est.cost * sample_mean;
    est.std_error = est.cost * std::sqrt(sample_var / n);
    est.shots = shots;
    est.seed = seed;
    return est;
}

}  // namespace pecsim
