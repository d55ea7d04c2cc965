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

#ifndef PECSIM_NOISE_MAP_H
#define PECSIM_NOISE_MAP_H

#include <cstdint>
#include <span>
#include <vector>

#include "pecsim/channel.h"
#include "pecsim/dense.h"

namespace pecsim {

/// Linear map from ideal Pauli gates to their noisy realizations.
///
/// Row i holds the Pauli coefficients of K_i = Theta(P_i). Rows of a physical map are
/// probability vectors. Quasi-maps (negative entries) are accepted everywhere except
/// simulate_estimation.
class NoiseMap {
   public:
    NoiseMap(size_t num_qubits, Matrix theta);

    static NoiseMap identity(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return theta_.rows();
    }
    const Matrix &theta() const {
        return theta_;
    }
    /// The noisy gate K_i as a channel.
    PauliChannel gate(size_t i) const;
    bool is_physical(double tol = 1e-9) const;

   private:
    size_t num_qubits_;
    Matrix theta_;
};

/// Row i = coefficients of noises[i] o P_i.
NoiseMap noise_map_from_gate_noises(std::span<const PauliChannel> noises);

/// Theta(c): replaces each ideal conjugation P_i in c by the noisy gate K_i.
PauliChannel apply_noise(const NoiseMap &m, const PauliChannel &c);

/// Theta^-1 by Gauss-Jordan with partial pivoting. Throws SingularMatrix.
Matrix invert(const NoiseMap &m, double pivot_tol = 1e-12);

/// q with sum_i q_i K_i = sum_j r_j P_j, i.e. q = (Theta^T)^-1 r.
std::vector<double> modified_quasiprobability(const NoiseMap &m, std::span<const double> r);

/// 1 - min_i Theta_ii.
double theta_lambda(const NoiseMap &m);

struct InvertibilityCheck {
    bool passes = false;
    /// sqrt(2 D ln(1/delta) / N).
    double threshold = 0;
    /// Frobenius norm of Theta.
    double norm = 0;
    /// exp(-N / (2 ||Theta^-1||_F^2)); NaN when Theta is singular.
    double failure_bound = 0;
};

/// Finite-shot invertibility test ||Theta||_F >= sqrt(2 D ln(1/delta) / N).
InvertibilityCheck invertibility_criterion(const NoiseMap &m, uint64_t shots, double delta);

/// The criterion threshold alone.
double invertibility_threshold(size_t dim, uint64_t shots, double delta);

/// Empirical estimate of Theta: each row replaced by the frequencies of `shots`
/// multinomial draws from it.
NoiseMap simulate_estimation(const NoiseMap &true_map, uint64_t shots, uint64_t seed);

}  // namespace pecsim

#endif
