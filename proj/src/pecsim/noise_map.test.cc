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

#include <cmath>

#include "gtest/gtest.h"

#include "pecsim/errors.h"
#include "pecsim/experiments.h"
#include "pecsim/implementability.h"
#include "pecsim/test_util.test.h"

using namespace pecsim;
using namespace pecsim::testing;

namespace {

// Depolarizing gate noise on X, Y, Z and a noiseless identity gate.
NoiseMap depolarizing_map(double lambda) {
    auto e = PauliChannel::depolarizing(lambda);
    std::vector<PauliChannel> noises{PauliChannel::identity(1), e, e, e};
    return noise_map_from_gate_noises(noises);
}

NoiseMap random_map(size_t n, double rate, uint64_t seed) {
    std::vector<PauliChannel> noises;
    for (size_t i = 0; i < pauli_dim(n); i++) {
        noises.push_back(lindblad_channel(random_pauli_lindblad(n, rate, derive_seed(seed, i))));
    }
    return noise_map_from_gate_noises(noises);
}

}  // namespace

TEST(noise_map, from_gate_noises) {
    std::vector<PauliChannel> ids(16, PauliChannel::identity(2));
    ASSERT_EQ(noise_map_from_gate_noises(ids).theta(), Matrix::identity(16));

    auto m = depolarizing_map(0.2);
    const double a = 0.85, b = 0.05;
    Matrix expected(4, 4, {1, 0, 0, 0, b, a, b, b, b, b, a, b, b, b, b, a});
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            ASSERT_NEAR(m.theta()(r, c), expected(r, c), 1e-15);
        }
    }
    ASSERT_NEAR((1 + 3 * 0.8) / 4, a, 1e-15);

    std::vector<PauliChannel> three(3, PauliChannel::identity(1));
    ASSERT_THROW(noise_map_from_gate_noises(three), std::invalid_argument);
}

TEST(noise_map, uniform_noise_composes) {
    Rng rng(61);
    for (int t = 0; t < 20; t++) {
        auto n = random_cptp_channel(2, rng);
        std::vector<PauliChannel> noises(16, n);
        auto m = noise_map_from_gate_noises(noises);
        auto e = random_quasi_channel(2, rng);
        ASSERT_LT(max_abs_diff(apply_noise(m, e).coeffs(), compose(n, e).coeffs()), 1e-12);
    }
}

TEST(noise_map, validation) {
    ASSERT_THROW(NoiseMap(1, Matrix(3, 3)), std::invalid_argument);
    Matrix bad = Matrix::identity(4);
    bad(1, 2) = 0.5;
    ASSERT_THROW(NoiseMap(1, bad), std::invalid_argument);
    Matrix quasi = Matrix::identity(4);
    quasi(1, 1) = 1.5;
    quasi(1, 2) = -0.5;
    NoiseMap q(1, quasi);
    ASSERT_FALSE(q.is_physical());
    ASSERT_TRUE(depolarizing_map(0.3).is_physical());
}

TEST(noise_map, apply_noise) {
    auto inv = PauliChannel(1, {1.1875, -0.0625, -0.0625, -0.0625});
    ASSERT_EQ(apply_noise(NoiseMap::identity(1), inv).coeffs(), inv.coeffs());
    auto m = depolarizing_map(0.2);
    ASSERT_LT(max_abs_diff(apply_noise(m, PauliChannel::identity(1)).coeffs(), {1, 0, 0, 0}), 1e-15);
    ASSERT_GT(max_abs_diff(apply_noise(m, inv).coeffs(), inv.coeffs()), 1e-3);
    double s = 0;
    auto noisy = apply_noise(m, inv);
    for (double v : noisy.coeffs()) {
        s += v;
    }
    ASSERT_NEAR(s, 1, 1e-12);
    ASSERT_THROW(apply_noise(m, PauliChannel::identity(2)), std::invalid_argument);
}

TEST(noise_map, invert) {
    ASSERT_EQ(invert(NoiseMap::identity(2)), Matrix::identity(16));
    auto m = depolarizing_map(0.2);
    auto inv = invert(m);
    ASSERT_LT(frobenius_norm(m.theta() * inv - Matrix::identity(4)), 1e-9);

    Matrix dup(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    ASSERT_THROW(invert(NoiseMap(1, dup)), SingularMatrix);
}

TEST(noise_map, modified_quasiprobability) {
    std::vector<double> r{1.1875, -0.0625, -0.0625, -0.0625};
    ASSERT_LT(max_abs_diff(modified_quasiprobability(NoiseMap::identity(1), r), r), 1e-15);

    auto m = depolarizing_map(0.2);
    auto q = modified_quasiprobability(m, r);
    // Symmetry gives q_X = q_Y = q_Z = x with (a + 2b) x = r_X.
    const double a = 0.85, b = 0.05;
    double x = -0.0625 / (a + 2 * b);
    double q0 = 1 - 3 * x;
    ASSERT_NEAR(q0 + 3 * b * x, 1.1875, 1e-12);
    ASSERT_NEAR(q[0], q0, 1e-12);
    ASSERT_NEAR(q[0], 1.1973684, 1e-7);
    for (size_t k = 1; k < 4; k++) {
        ASSERT_NEAR(q[k], -0.0657895, 1e-7);
    }
    ASSERT_NEAR(q[0] + q[1] + q[2] + q[3], 1, 1e-12);
    ASSERT_LT(max_abs_diff(apply_noise(m, PauliChannel(1, q)).coeffs(), r), 1e-10);
}

TEST(noise_map, noisy_cancellation_is_exact) {
    for (size_t s = 0; s < 100; s++) {
        auto sc = draw_scenario(2, 0.3, 2024, s);
        auto e = lindblad_channel(sc.error);
        auto m = sc.noise_map();
        auto q = modified_quasiprobability(m, inverse(e).coeffs());
        auto realized = compose(apply_noise(m, PauliChannel(2, q)), e);
        ASSERT_LT(max_abs_diff(realized.coeffs(), PauliChannel::identity(2).coeffs()), 1e-9);
    }
}

TEST(noise_map, affine_invariance) {
    // sum |q| equals the LP over the noisy gates K_i as extreme points.
    auto m = random_map(1, 0.2, 5);
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < 4; i++) {
        auto row = m.theta().row(i);
        rows.emplace_back(row.begin(), row.end());
    }
    FreeSet noisy(4, rows);
    auto r = inverse(PauliChannel::depolarizing(0.1)).coeffs();
    auto q = modified_quasiprobability(m, r);
    double l1 = 0;
    for (double v : q) {
        l1 += std::abs(v);
    }
    ASSERT_NEAR(implementability_lp(noisy, r).p, l1, 1e-9);
}

TEST(noise_map, theta_lambda) {
    ASSERT_EQ(theta_lambda(NoiseMap::identity(2)), 0);
    ASSERT_NEAR(theta_lambda(depolarizing_map(0.2)), 0.15, 1e-15);
    auto m = random_map(2, 0.05, 3);
    for (size_t i = 0; i < 16; i++) {
        ASSERT_LE(1 - m.theta()(i, i), theta_lambda(m) + 1e-15);
    }
}

TEST(noise_map, invertibility_threshold) {
    ASSERT_NEAR(invertibility_threshold(16, 10000, 0.01), 0.1213938, 1e-6);
    ASSERT_NEAR(invertibility_threshold(16, 10000, 0.01), std::sqrt(32 * std::log(100.0) / 10000), 1e-15);
    auto check = invertibility_criterion(NoiseMap::identity(2), 10000, 0.01);
    ASSERT_TRUE(check.passes);
    ASSERT_DOUBLE_EQ(check.norm, 4);
    ASSERT_NEAR(check.failure_bound, std::exp(-10000.0 / 32), 1e-300);
    // One shot, delta 0.01: the threshold exceeds sqrt(D), the largest norm of a stochastic matrix.
    auto one = invertibility_criterion(random_map(2, 0.05, 1), 1, 0.01);
    ASSERT_GT(one.threshold, 4);
    ASSERT_FALSE(one.passes);
    ASSERT_LT(invertibility_threshold(16, 1, 1 - 1e-12), 1e-5);
    ASSERT_THROW(invertibility_threshold(16, 0, 0.1), std::invalid_argument);
    ASSERT_THROW(invertibility_threshold(16, 10, 0), std::invalid_argument);
    ASSERT_THROW(invertibility_threshold(16, 10, 1), std::invalid_argument);
}

TEST(noise_map, norm_product_inequality) {
    for (int t = 0; t < 100; t++) {
        auto m = random_map(2, 0.05 + 0.01 * t, 700 + t);
        double lhs = frobenius_norm(m.theta()) * frobenius_norm(invert(m));
        ASSERT_GE(lhs, 4 - 1e-12);
    }
    ASSERT_NEAR(frobenius_norm(Matrix::identity(16)), 4, 0);
}

TEST(noise_map, simulate_estimation) {
    auto truth = random_map(2, 0.1, 9);
    auto a = simulate_estimation(truth, 1000, 1);
    ASSERT_EQ(a.theta(), simulate_estimation(truth, 1000, 1).theta());
    ASSERT_NE(a.theta(), simulate_estimation(truth, 1000, 2).theta());
    ASSERT_TRUE(a.is_physical());
    for (size_t r = 0; r < 16; r++) {
        for (size_t c = 0; c < 16; c++) {
            double scaled = a.theta()(r, c) * 1000;
            ASSERT_NEAR(scaled, std::round(scaled), 1e-9);
        }
    }

    auto exact = simulate_estimation(NoiseMap::identity(2), 7, 3);
    ASSERT_EQ(exact.theta(), Matrix::identity(16));

    double worst = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto est = simulate_estimation(truth, 1000000, seed);
        auto diff = est.theta() - truth.theta();
        for (double v : diff.data()) {
            worst = std::max(worst, std::abs(v));
        }
    }
    ASSERT_LT(worst, 5e-3);

    Matrix neg = Matrix::identity(4);
    neg(1, 1) = 1.5;
    neg(1, 2) = -0.5;
    ASSERT_THROW(simulate_estimation(NoiseMap(1, neg), 10, 1), std::invalid_argument);
}

TEST(noise_map, estimation_variance) {
    // Entry variance p(1-p)/N.
    auto truth = depolarizing_map(0.4);
    const uint64_t shots = 500;
    const int trials = 2000;
    double sum = 0, sum_sq = 0;
    for (int t = 0; t < trials; t++) {
        double v = simulate_estimation(truth, shots, 100 + t).theta()(1, 1);
        sum += v;
        sum_sq += v * v;
    }
    double p = truth.theta()(1, 1);
    double mean = sum / trials;
    double var = sum_sq / trials - mean * mean;
    ASSERT_NEAR(mean, p, 5 * std::sqrt(p * (1 - p) / shots / trials));
    ASSERT_NEAR(var, p * (1 - p) / shots, 0.1 * p * (1 - p) / shots);
    ASSERT_LE(var, 1.0 / (4 * shots) * 1.1);
}
