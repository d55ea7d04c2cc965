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

#include "pecsim/bias.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pecsim/implementability.h"

namespace pecsim {

std::string method_name(CancelMethod m) {
    return m == CancelMethod::Separate ? "separate" : "direct";
}

CancelMethod parse_method(const std::string &name) {
    if (name == "separate") {
        return CancelMethod::Separate;
    }
    if (name == "direct") {
        return CancelMethod::Direct;
    }
    throw std::invalid_argument("unknown cancellation method '" + name + "'");
}

std::vector<double> exact_bias(const PauliChannel &canceled) {
    auto chi = eigenvalues(canceled);
    for (auto &x : chi) {
        x = std::abs(1 - x);
    }
    chi[0] = 0;
    return chi;
}

double implementability_distance(const PauliChannel &canceled) {
    double s = std::abs(1 - canceled[0]);
    for (size_t i = 1; i < canceled.dim(); i++) {
        s += std::abs(canceled[i]);
    }
    return s;
}

double bound_direct(double theta_lambda, std::span<const double> p_list) {
    double prod = 1;
    for (double p : p_list) {
        prod *= p;
    }
    return 2 * theta_lambda * prod;
}

double bound_separate(double theta_lambda, std::span<const double> p_list) {
    double prod = 1, sum = 0;
    for (double p : p_list) {
        prod *= p;
        sum += prod;
    }
    return 2 * theta_lambda * sum;
}

double cptp_bound_direct(double theta_lambda) {
    return 2 * theta_lambda;
}

double cptp_bound_separate(double theta_lambda, size_t layers) {
    if (!(theta_lambda < 0.5)) {
        throw std::invalid_argument("separate CPTP bound needs theta_lambda < 1/2");
    }
    if (layers < 1) {
        throw std::invalid_argument("layer count must be at least 1");
    }
    return 2 * (1 - std::pow(1 - 2 * theta_lambda, static_cast<double>(layers) / 2));
}

double mitigation_bias_bound(std::span<const double> delta_rates) {
    double total = 0, negative = 0;
    bool under = true;
    for (double d : delta_rates) {
        total += d;
        if (d < 0) {
            negative -= d;
            under = false;
        }
    }
    if (under) {
        return 2 * (1 - std::exp(-total));
    }
    return std::exp(2 * negative) - 2 * std::exp(-std::max(total, 0.0)) + 1;
}

double fidelity_ratio_spread(std::span<const double> ratios) {
    const double d = static_cast<double>(ratios.size());
    if (ratios.size() < 4) {
        throw std::invalid_argument("fidelity ratio list needs 4^n entries");
    }
    double sum = 0;
    for (double r : ratios) {
        sum += r;
    }
    double acc = 0;
    for (double r : ratios) {
        acc += r * (r - (sum - r) / (d - 1));
    }
    return (d - 1) / d * std::sqrt(std::max(acc, 0.0));
}

ModelViolationBound model_violation_bias(std::span<const double> nu0_list,
                                         std::span<const double> gamma_list,
                                         std::span<const std::vector<double>> ratio_lists) {
    const size_t layers = nu0_list.size();
    if (gamma_list.size() != layers || ratio_lists.size() != layers) {
        throw std::invalid_argument("per-layer lists have different lengths");
    }
    ModelViolationBound out;
    double prefix = 1;
    for (size_t j = 0; j < layers; j++) {
        const auto &r = ratio_lists[j];
        num_qubits_for_length(r.size());
        if (r.size() != ratio_lists[0].size()) {
            throw std::invalid_argument("fidelity ratio lists have different lengths");
        }
        if (!(std::abs(r[0] - 1) <= 1e-9)) {
            throw std::invalid_argument("fidelity ratio of the identity must be 1");
        }
        double base = std::abs(1 - nu0_list[j]);
        double a = base + gamma_list[j] - nu0_list[j];
        double b = base + fidelity_ratio_spread(r);
        out.nu0_form += prefix * a;
        out.spread_form += prefix * b;
        out.combined += prefix * std::min(a, b);
        prefix *= gamma_list[j];
    }
    return out;
}

PauliChannel canceled_error_separate(const PauliChannel &e0, const NoiseMap &m, size_t layers) {
    auto layer = compose(apply_noise(m, inverse(e0)), e0);
    return channel_power(layer, static_cast<int>(layers));
}

PauliChannel canceled_error_direct(const PauliChannel &e0, const NoiseMap &m, size_t layers) {
    auto total = channel_power(e0, static_cast<int>(layers));
    return compose(apply_noise(m, inverse(total)), total);
}

PauliChannel canceled_error(const PauliChannel &e0, const NoiseMap &m, size_t layers, CancelMethod method) {
    return method == CancelMethod::Separate ? canceled_error_separate(e0, m, layers)
                                            : canceled_error_direct(e0, m, layers);
}

double BiasReport::max_bias() const {
    return biases.empty() ? 0.0 : *std::max_element(biases.begin(), biases.end());
}

const NamedBound &BiasReport::headline_bound() const {
    const std::string want = (cptp ? "cptp_" : "general_") + method_name(method);
    for (const auto &b : bounds) {
        if (b.name == want) {
            return b;
        }
    }
    for (const auto &b : bounds) {
        if (b.name.starts_with("general_")) {
            return b;
        }
    }
    throw std::logic_error("bias report has no bounds");
}

BiasReport bias_report(const PauliChannel &canceled,
                       CancelMethod method,
                       size_t layer,
                       double theta_lambda,
                       double p_layer) {
    BiasReport rep;
    rep.layer = layer;
    rep.method = method;
    rep.num_qubits = canceled.num_qubits();
    rep.biases = exact_bias(canceled);
    rep.p_distance = implementability_distance(canceled);
    rep.p_canceled = p_pauli(canceled);
    rep.cptp = is_cptp(canceled);
    std::vector<double> p_list(layer, p_layer);
    if (method == CancelMethod::Direct) {
        rep.bounds.push_back({"general_direct", bound_direct(theta_lambda, p_list)});
        if (rep.cptp) {
            rep.bounds.push_back({"cptp_direct", cptp_bound_direct(theta_lambda)});
        }
    } else {
        rep.bounds.push_back({"general_separate", bound_separate(theta_lambda, p_list)});
        if (rep.cptp && theta_lambda < 0.5) {
            rep.bounds.push_back({"cptp_separate", cptp_bound_separate(theta_lambda, layer)});
        }
    }
    return rep;
}

BiasReport analyze_cancellation(const PauliChannel &e0, const NoiseMap &m, size_t layers, CancelMethod method) {
    auto inv = inverse(e0);
    auto q = modified_quasiprobability(m, inv.coeffs());
    double p_layer = 0;
    for (double v : q) {
        p_layer += std::abs(v);
    }
    return bias_report(canceled_error(e0, m, layers, method), method, layers, theta_lambda(m), p_layer);
}

}  // namespace pecsim
