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

#ifndef PECSIM_BIAS_H
#define PECSIM_BIAS_H

#include <span>
#include <string>
#include <vector>

#include "pecsim/channel.h"
#include "pecsim/noise_map.h"

namespace pecsim {

enum class CancelMethod { Separate, Direct };

std::string method_name(CancelMethod m);
CancelMethod parse_method(const std::string &name);

/// |1 - chi_k| for every Pauli k: the bias of <P_k> under the residual error.
std::vector<double> exact_bias(const PauliChannel &canceled);

/// p_Q(I - canceled) = |1 - nu_0| + sum_{i>0} |nu_i|.
double implementability_distance(const PauliChannel &canceled);

/// 2 theta_lambda prod_i p_i.
double bound_direct(double theta_lambda, std::span<const double> p_list);

/// 2 theta_lambda sum_j prod_{i<=j} p_i.
double bound_separate(double theta_lambda, std::span<const double> p_list);

/// 2 theta_lambda, valid when the canceled error is CPTP.
double cptp_bound_direct(double theta_lambda);

/// 2 [1 - (1 - 2 theta_lambda)^(L/2)] for CPTP per-layer residuals. Needs theta_lambda < 1/2.
double cptp_bound_separate(double theta_lambda, size_t layers);

/// Bias bound for a residual exp(L(delta)) from an inaccurate Pauli-Lindblad model.
///
/// All residuals >= 0 (under-mitigated): 2 (1 - e^-sum).
/// Otherwise: e^(2 neg) - 2 e^-max(sum, 0) + 1 with neg = sum_i |min(delta_i, 0)|.
double mitigation_bias_bound(std::span<const double> delta_rates);

/// Spread of measured/model fidelity ratios:
/// (D-1)/D sqrt(sum_k r_k (r_k - sum_{m != k} r_m / (D-1))).
double fidelity_ratio_spread(std::span<const double> ratios);

struct ModelViolationBound {
    /// sum_j delta_j prod_{i<j} gamma_i with delta_j = |1 - nu0_j| + gamma_j - nu0_j.
    double nu0_form = 0;
    /// Same with delta_j = |1 - nu0_j| + T(r^(j)).
    double spread_form = 0;
    /// Per-layer minimum of the two delta_j choices.
    double combined = 0;
};

/// Bias bound for L layers of mitigation with an inaccurate error model.
ModelViolationBound model_violation_bias(std::span<const double> nu0_list,
                                         std::span<const double> gamma_list,
                                         std::span<const std::vector<double>> ratio_lists);

/// [Theta(E0^-1) o E0]^L.
PauliChannel canceled_error_separate(const PauliChannel &e0, const NoiseMap &m, size_t layers);

/// Theta(E0^-L) o E0^L.
PauliChannel canceled_error_direct(const PauliChannel &e0, const NoiseMap &m, size_t layers);

PauliChannel canceled_error(const PauliChannel &e0, const NoiseMap &m, size_t layers, CancelMethod method);

struct NamedBound {
    std::string name;
    double value;
};

struct BiasReport {
    size_t layer = 0;
    CancelMethod method = CancelMethod::Separate;
    size_t num_qubits = 0;
    /// |1 - chi_k| per Pauli k.
    std::vector<double> biases;
    /// p_Q(I - canceled).
    double p_distance = 0;
    /// p_Q(canceled).
    double p_canceled = 0;
    bool cptp = false;
    std::vector<NamedBound> bounds;

    double max_bias() const;
    /// The bound the figure tables use: the CPTP bound when it applies, else the general one.
    const NamedBound &headline_bound() const;
};

/// Report for one canceled error. `p_layer` is the per-layer sampling cost sum_i |q_i|
/// of the modified program, which is what an experimenter knows.
BiasReport bias_report(const PauliChannel &canceled,
                       CancelMethod method,
                       size_t layer,
                       double theta_lambda,
                       double p_layer);

/// Full single-scenario analysis: builds the canceled error and its report.
BiasReport analyze_cancellation(const PauliChannel &e0, const NoiseMap &m, size_t layers, CancelMethod method);

}  // namespace pecsim

#endif
