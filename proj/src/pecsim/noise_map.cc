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

#include "pecsim/noise_map.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "pecsim/errors.h"
#include "pecsim/rng.h"

namespace pecsim {

NoiseMap::NoiseMap(size_t num_qubits, Matrix theta) : num_qubits_(num_qubits), theta_(std::move(theta)) {
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("qubit count must be in [1, 10]");
    }
    const size_t dim = pauli_dim(num_qubits);
    if (theta_.rows() != dim || theta_.cols() != dim) {
        throw std::invalid_argument("noise map must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                                    ", got " + std::to_string(theta_.rows()) + "x" + std::to_string(theta_.cols()));
    }
    for (size_t i = 0; i < dim; i++) {
        double s = 0;
        for (double v : theta_.row(i)) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("noise map has a non-finite entry");
            }
            s += v;
        }
        if (!(std::abs(s - 1) <= TRACE_TOL)) {
            throw std::invalid_argument("noise map row " + std::to_string(i) + " sums to " + std::to_string(s));
        }
    }
}

NoiseMap NoiseMap::identity(size_t num_qubits) {
    return NoiseMap(num_qubits, Matrix::identity(pauli_dim(num_qubits)));
}

PauliChannel NoiseMap::gate(size_t i) const {
    auto r = theta_.row(i);
    return PauliChannel(num_qubits_, std::vector<double>(r.begin(), r.end()));
}

bool NoiseMap::is_physical(double tol) const {
    return std::all_of(theta_.data().begin(), theta_.data().end(), [&](double v) {
        return v >= -tol;
    });
}

NoiseMap noise_map_from_gate_noises(std::span<const PauliChannel> noises) {
    if (noises.empty()) {
        throw std::invalid_argument("no gate noises given");
    }
    const size_t n = noises[0].num_qubits();
    const size_t dim = pauli_dim(n);
    if (noises.size() != dim) {
        throw std::invalid_argument("need " + std::to_string(dim) + " gate noises, got " +
                                    std::to_string(noises.size()));
    }
    Matrix theta(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        if (noises[i].num_qubits() != n) {
            throw std::invalid_argument("gate noises have different qubit counts");
        }
        // (N o P_i) has weight N_j on P_{j * i}.
        for (size_t j = 0; j < dim; j++) {
            theta(i, pauli_product_index(j, i)) = noises[i][j];
        }
    }
    return NoiseMap(n, std::move(theta));
}

PauliChannel apply_noise(const NoiseMap &m, const PauliChannel &c) {
    if (m.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("noise map and channel have different qubit counts");
    }
    const size_t dim = m.dim();
    std::vector<double> out(dim, 0.0);
    for (size_t i = 0; i < dim; i++) {
        double x = c[i];
        if (x == 0) {
            continue;
        }
        auto row = m.theta().row(i);
        for (size_t j = 0; j < dim; j++) {
            out[j] += x * row[j];
        }
    }
    return PauliChannel(c.num_qubits(), std::move(out));
}

Matrix invert(const NoiseMap &m, double pivot_tol) {
    return invert_matrix(m.theta(), pivot_tol);
}

std::vector<double> modified_quasiprobability(const NoiseMap &m, std::span<const double> r) {
    if (r.size() != m.dim()) {
        throw std::invalid_argument("quasiprobability vector has the wrong length");
    }
    return solve_linear(m.theta().transpose(), r);
}

double theta_lambda(const NoiseMap &m) {
    double lo = m.theta()(0, 0);
    for (size_t i = 1; i < m.dim(); i++) {
        lo = std::min(lo, m.theta()(i, i));
    }
    return 1 - lo;
}

double invertibility_threshold(size_t dim, uint64_t shots, double delta) {
    if (shots < 1) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("failure probability must be in (0, 1)");
    }
    return std::sqrt(2.0 * static_cast<double>(dim) * std::log(1 / delta) / static_cast<double>(shots));
}

InvertibilityCheck invertibility_criterion(const NoiseMap &m, uint64_t shots, double delta) {
    InvertibilityCheck out;
    out.threshold = invertibility_threshold(m.dim(), shots, delta);
    out.norm = frobenius_norm(m.theta());
    out.passes = out.norm >= out.threshold;
    try {
        double inv_norm = frobenius_norm(invert(m));
        out.failure_bound = std::exp(-static_cast<double>(shots) / (2 * inv_norm * inv_norm));
    } catch (const SingularMatrix &) {
        out.failure_bound = std::nan("");
    }
    return out;
}

NoiseMap simulate_estimation(const NoiseMap &true_map, uint64_t shots, uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    if (!true_map.is_physical(0)) {
        throw std::invalid_argument("finite-shot estimation needs a noise map with non-negative entries");
    }
    const size_t dim = true_map.dim();
    Matrix est(dim, dim);
    Rng rng(seed);
    for (size_t i = 0; i < dim; i++) {
        // Multinomial draw as a chain of conditional binomials.
        auto row = true_map.theta().row(i);
        uint64_t remaining = shots;
        double mass = 1;
        for (size_t j = 0; j < dim && remaining > 0; j++) {
            uint64_t k;
            if (j + 1 == dim || mass <= 0) {
                k = remaining;
            } else {
                double p = std::clamp(row[j] / mass, 0.0, 1.0);
                std::binomial_distribution<uint64_t> draw(remaining, p);
                k = draw(rng.engine());
            }
            est(i, j) = static_cast<double>(k) / static_cast<double>(shots);
            remaining -= k;
            mass -= row[j];
        }
    }
    return NoiseMap(true_map.num_qubits(), std::move(est));
}

}  // namespace pecsim
