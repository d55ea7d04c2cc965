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

#include <cmath>

#include "gtest/gtest.h"

#include "pecsim/experiments.h"
#include "pecsim/implementability.h"
#include "pecsim/test_util.test.h"

using namespace pecsim;
using namespace pecsim::testing;

TEST(bias, exact_bias_and_distance) {
    ASSERT_EQ(exact_bias(PauliChannel::identity(2)), std::vector<double>(16, 0));
    ASSERT_EQ(implementability_distance(PauliChannel::identity(2)), 0);
    auto d = PauliChannel::depolarizing(0.2);
    ASSERT_LT(max_abs_diff(exact_bias(d), {0, 0.2, 0.2, 0.2}), 1e-15);
    ASSERT_NEAR(implementability_distance(d), 0.3, 1e-15);

    Rng rng(71);
    for (int t = 0; t < 200; t++) {
        auto c = random_quasi_channel(2, rng, 3.0);
        auto b = exact_bias(c);
        double dist = implementability_distance(c);
        for (double v : b) {
            ASSERT_LE(v, dist + 1e-12);
        }
        // Triangle inequality oracle: |1 - chi_k| = |sum_i (delta_i0 - nu_i) eps_ik| <= sum_i |delta_i0 - nu_i|.
        double l1 = std::abs(1 - c[0]);
        for (size_t i = 1; i < 16; i++) {
            l1 += std::abs(c[i]);
        }
        ASSERT_NEAR(dist, l1, 1e-12);
        if (is_cptp(c)) {
            ASSERT_NEAR(dist, 2 * (1 - c[0]), 1e-12);
        }
    }
}

TEST(bias, cancellation_bounds) {
    std::vector<double> p{1.2, 1.2, 1.2};
    ASSERT_EQ(bound_direct(0, p), 0);
    ASSERT_NEAR(bound_direct(0.05, p), 0.1728, 1e-12);
    ASSERT_NEAR(bound_direct(0.05, std::vector<double>{1.3}), 2 * 0.05 * 1.3, 1e-15);
    ASSERT_NEAR(bound_separate(0.05, p), 0.4368, 1e-12);
    ASSERT_EQ(bound_separate(0.05, std::vector<double>{1.3}), bound_direct(0.05, std::vector<double>{1.3}));
    ASSERT_EQ(bound_separate(0, p), 0);
}

TEST(bias, cptp_bounds) {
    ASSERT_NEAR(cptp_bound_separate(0.05, 4), 0.38, 1e-12);
    ASSERT_NEAR(cptp_bound_direct(0.05), 0.1, 1e-15);
    for (size_t layers : {1, 5, 20}) {
        ASSERT_EQ(cptp_bound_separate(0, layers), 0);
    }
    ASSERT_EQ(cptp_bound_direct(0), 0);
    ASSERT_THROW(cptp_bound_separate(0.5, 3), std::invalid_argument);
    double prev = 0;
    for (size_t layers = 1; layers <= 30; layers++) {
        double v = cptp_bound_separate(0.1, layers);
        ASSERT_GT(v, prev);
        ASSERT_LE(v, 2);
        ASSERT_GT(cptp_bound_separate(0.11, layers), v);
        prev = v;
    }
}

TEST(bias, mitigation_bound) {
    ASSERT_EQ(mitigation_bias_bound(std::vector<double>(15, 0)), 0);
    ASSERT_NEAR(mitigation_bias_bound(std::vector<double>{0.2, 0.3}), 0.7869387, 1e-7);
    ASSERT_NEAR(mitigation_bias_bound(std::vector<double>{-0.2, -0.3}), 1.7182818, 1e-7);
    ASSERT_NEAR(mitigation_bias_bound(std::vector<double>{-0.1, 0.3}),
                std::exp(0.2) - 2 * std::exp(-0.2) + 1, 1e-15);
    // Monotone in |delta| componentwise.
    ASSERT_LT(mitigation_bias_bound(std::vector<double>{0.1, 0.2}), mitigation_bias_bound(std::vector<double>{0.1, 0.25}));
    ASSERT_LT(mitigation_bias_bound(std::vector<double>{-0.1, -0.2}),
              mitigation_bias_bound(std::vector<double>{-0.1, -0.25}));
}

TEST(bias, mitigation_bound_holds) {
    for (int t = 0; t < 50; t++) {
        auto m = random_pauli_lindblad(2, 0.05, 900 + t);
        for (size_t layers = 1; layers <= 20; layers++) {
            auto under = m.scaled(static_cast<double>(layers));
            auto c = lindblad_channel(under);
            ASSERT_LE(implementability_distance(c), mitigation_bias_bound(under.dense_rates()) + 1e-12);
            ASSERT_LE(implementability_distance(c), 2 * (1 - std::exp(-0.05 * layers)) + 1e-12);
            auto over = m.scaled(-static_cast<double>(layers));
            auto o = lindblad_channel(over);
            ASSERT_GT(p_pauli(o), 1);
            ASSERT_LE(implementability_distance(o), mitigation_bias_bound(over.dense_rates()) + 1e-12);
        }
    }
}

TEST(bias, fidelity_ratio_spread) {
    ASSERT_EQ(fidelity_ratio_spread(std::vector<double>(16, 1)), 0);
    // Direct evaluation of ((D-1)/D) sqrt(sum_k r_k (r_k - mean of the others)).
    std::vector<double> r{1, 1.1, 0.9, 1.05};
    double acc = 0;
    for (size_t k = 0; k < 4; k++) {
        double others = 0;
        for (size_t m = 0; m < 4; m++) {
            if (m != k) {
                others += r[m];
            }
        }
        acc += r[k] * (r[k] - others / 3);
    }
    ASSERT_NEAR(fidelity_ratio_spread(r), 0.75 * std::sqrt(acc), 1e-15);
    ASSERT_THROW(fidelity_ratio_spread(std::vector<double>{1, 1}), std::invalid_argument);
}

TEST(bias, model_violation) {
    std::vector<std::vector<double>> ones{std::vector<double>(4, 1)};
    auto perfect = model_violation_bias(std::vector<double>{1}, std::vector<double>{1}, ones);
    ASSERT_EQ(perfect.nu0_form, 0);
    ASSERT_EQ(perfect.spread_form, 0);
    ASSERT_EQ(perfect.combined, 0);

    auto single = model_violation_bias(std::vector<double>{0.95}, std::vector<double>{1}, ones);
    ASSERT_NEAR(single.nu0_form, 0.1, 1e-15);
    ASSERT_NEAR(single.spread_form, 0.05, 1e-15);
    ASSERT_NEAR(single.combined, 0.05, 1e-15);

    // Two layers: delta_1 + delta_2 gamma_1.
    std::vector<std::vector<double>> two{std::vector<double>(4, 1), std::vector<double>(4, 1)};
    auto l2 = model_violation_bias(std::vector<double>{0.9, 0.95}, std::vector<double>{1.2, 1.1}, two);
    ASSERT_NEAR(l2.nu0_form, (0.1 + 1.2 - 0.9) + (0.05 + 1.1 - 0.95) * 1.2, 1e-12);
    ASSERT_NEAR(l2.spread_form, 0.1 + 0.05 * 1.2, 1e-12);
    ASSERT_THROW(model_violation_bias(std::vector<double>{1, 1}, std::vector<double>{1}, ones), std::invalid_argument);
}

TEST(bias, canceled_errors) {
    auto e0 = lindblad_channel(random_pauli_lindblad(2, 0.2, 3));
    auto id = NoiseMap::identity(2);
    for (size_t layers : {1, 4, 9}) {
        ASSERT_LT(max_abs_diff(canceled_error_separate(e0, id, layers).coeffs(), PauliChannel::identity(2).coeffs()),
                  1e-12);
        ASSERT_LT(max_abs_diff(canceled_error_direct(e0, id, layers).coeffs(), PauliChannel::identity(2).coeffs()),
                  1e-12);
    }
    auto m = draw_scenario(2, 0.2, 5, 0).noise_map();
    ASSERT_LT(max_abs_diff(canceled_error_separate(e0, m, 1).coeffs(), canceled_error_direct(e0, m, 1).coeffs()),
              1e-12);
    // Separate is the L-fold composition of one layer.
    auto layer = compose(apply_noise(m, inverse(e0)), e0);
    ASSERT_LT(max_abs_diff(canceled_error_separate(e0, m, 3).coeffs(), compose(compose(layer, layer), layer).coeffs()),
              1e-12);
    // Direct against the closed-form Lindblad powers.
    auto model = random_pauli_lindblad(2, 0.2, 3);
    auto direct = compose(apply_noise(m, lindblad_channel(model.scaled(-5))), lindblad_channel(model.scaled(5)));
    ASSERT_LT(max_abs_diff(canceled_error_direct(e0, m, 5).coeffs(), direct.coeffs()), 1e-12);

    Rng rng(77);
    for (int t = 0; t < 20; t++) {
        auto n = random_cptp_channel(2, rng);
        std::vector<PauliChannel> noises(16, n);
        auto uniform = noise_map_from_gate_noises(noises);
        for (size_t layers = 1; layers <= 10; layers++) {
            ASSERT_TRUE(is_cptp(canceled_error_separate(e0, uniform, layers)));
        }
    }
}

TEST(bias, report_chain) {
    // max bias <= p_Q(I - E) <= general bound on random scenarios in both regimes.
    for (double rate : {0.05, 0.3, 0.5}) {
        for (size_t s = 0; s < 10; s++) {
            auto sc = draw_scenario(2, rate, 11, s);
            auto e0 = lindblad_channel(sc.error);
            auto m = sc.noise_map();
            for (auto method : {CancelMethod::Separate, CancelMethod::Direct}) {
                for (size_t layers : {1, 2, 7, 20}) {
                    auto rep = analyze_cancellation(e0, m, layers, method);
                    ASSERT_LE(rep.max_bias(), rep.p_distance + 1e-9);
                    ASSERT_EQ(rep.bounds[0].name.rfind("general_", 0), 0);
                    ASSERT_LE(rep.p_distance, rep.bounds[0].value + 1e-9);
                    ASSERT_EQ(rep.cptp, rep.p_canceled <= 1 + 1e-9);
                }
            }
        }
    }
}

TEST(bias, report_fields) {
    auto sc = draw_scenario(2, 0.05, 1, 0);
    auto rep = analyze_cancellation(lindblad_channel(sc.error), sc.noise_map(), 3, CancelMethod::Separate);
    ASSERT_EQ(rep.layer, 3);
    ASSERT_EQ(rep.biases.size(), 16);
    ASSERT_EQ(rep.biases[0], 0);
    if (rep.cptp) {
        ASSERT_EQ(rep.headline_bound().name, "cptp_separate");
    } else {
        ASSERT_EQ(rep.headline_bound().name, "general_separate");
    }
    ASSERT_EQ(parse_method("direct"), CancelMethod::Direct);
    ASSERT_EQ(method_name(CancelMethod::Separate), "separate");
    ASSERT_THROW(parse_method("both"), std::invalid_argument);
}
