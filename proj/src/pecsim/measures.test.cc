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

#include "pecsim/measures.h"

#include <cmath>

#include "gtest/gtest.h"

#include "pecsim/implementability.h"
#include "pecsim/test_util.test.h"

using namespace pecsim;
using namespace pecsim::testing;

namespace {

CMatrix bell() {
    CMatrix rho(4, 4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            for (size_t i = 0; i < b.rows(); i++) {
                for (size_t j = 0; j < b.cols(); j++) {
                    out(r * b.rows() + i, c * b.cols() + j) = a(r, c) * b(i, j);
                }
            }
        }
    }
    return out;
}

const size_t SECOND[] = {1};

}  // namespace

TEST(measures, trace_norm) {
    ASSERT_NEAR(trace_norm(CMatrix(2, 2, {0.75, 0, 0, 0.25})), 1, 1e-14);
    ASSERT_NEAR(trace_norm(CMatrix(2, 2, {1.5, 0, 0, -0.5})), 2, 1e-14);
    ASSERT_THROW(trace_norm(CMatrix(2, 2, {0, 1, 0, 0})), std::invalid_argument);
    ASSERT_THROW(trace_norm(CMatrix(2, 3)), std::invalid_argument);
}

TEST(measures, trace_norm_is_a_norm) {
    Rng rng(81);
    for (int t = 0; t < 100; t++) {
        auto a = random_hermitian(2, rng);
        auto b = random_hermitian(2, rng);
        ASSERT_LE(trace_norm(a + b), trace_norm(a) + trace_norm(b) + 1e-10);
        double s = 4 * rng.uniform() - 2;
        ASSERT_NEAR(trace_norm(a * complex{s}), std::abs(s) * trace_norm(a), 1e-10);
    }
}

TEST(measures, trace_norm_matches_lp_over_pure_states) {
    // Bloch vectors on a dense Fibonacci sphere as the extreme points of the qubit states.
    const size_t m = 2000;
    std::vector<std::vector<double>> pts;
    const double golden = M_PI * (3 - std::sqrt(5.0));
    for (size_t k = 0; k < m; k++) {
        double z = 1 - 2 * (k + 0.5) / m;
        double r = std::sqrt(1 - z * z);
        pts.push_back({1, r * std::cos(golden * k), r * std::sin(golden * k), z});
    }
    FreeSet states(4, pts, {1, 0, 0, 0});
    Rng rng(83);
    for (int t = 0; t < 5; t++) {
        double x = rng.normal(), y = rng.normal(), z = rng.normal();
        double scale = (1.2 + 2 * rng.uniform()) / std::sqrt(x * x + y * y + z * z);
        x *= scale, y *= scale, z *= scale;
        CMatrix rho(2, 2, {0.5 * (1 + z), complex{0.5 * x, -0.5 * y}, complex{0.5 * x, 0.5 * y}, 0.5 * (1 - z)});
        double p = implementability_lp(states, std::vector<double>{1, x, y, z}).p;
        ASSERT_NEAR(trace_norm(rho), p, 1e-2);
        ASSERT_NEAR(trace_norm(rho), 2 * robustness(p) + 1, 1e-2);
    }
}

TEST(measures, partial_transpose) {
    auto pt = partial_transpose(bell(), SECOND);
    auto ev = hermitian_eigenvalues(pt);
    ASSERT_LT(max_abs_diff(ev, {-0.5, 0.5, 0.5, 0.5}), 1e-12);

    Rng rng(85);
    auto a = random_density_matrix(1, rng);
    auto b = random_density_matrix(1, rng);
    auto prod = kron(a, b);
    auto before = hermitian_eigenvalues(prod);
    auto after = hermitian_eigenvalues(partial_transpose(prod, SECOND));
    ASSERT_LT(max_abs_diff(before, after), 1e-12);
    ASSERT_NEAR(trace_norm(partial_transpose(prod, SECOND)), 1, 1e-12);

    for (int t = 0; t < 20; t++) {
        auto rho = random_density_matrix(3, rng);
        std::vector<size_t> sub{0, 2};
        auto once = partial_transpose(rho, sub);
        ASSERT_LT(max_abs_diff(partial_transpose(once, sub), rho), 1e-15);
        ASSERT_LT(std::abs(trace(once) - trace(rho)), 1e-12);
    }
    const size_t bad[] = {2};
    ASSERT_THROW(partial_transpose(bell(), bad), std::invalid_argument);
    const size_t dup[] = {1, 1};
    ASSERT_THROW(partial_transpose(bell(), dup), std::invalid_argument);
}

TEST(measures, log_negativity) {
    ASSERT_NEAR(log_negativity(bell(), SECOND), std::log(2.0), 1e-9);
    ASSERT_NEAR(log_negativity(bell(), SECOND), 0.6931472, 1e-7);
    Rng rng(87);
    auto prod = kron(random_density_matrix(1, rng), random_density_matrix(1, rng));
    ASSERT_NEAR(log_negativity(prod, SECOND), 0, 1e-10);
    // Separable mixtures of product states.
    for (int t = 0; t < 50; t++) {
        CMatrix mix(4, 4);
        double total = 0;
        for (int k = 0; k < 4; k++) {
            double w = rng.exponential();
            total += w;
            mix = mix + kron(random_density_matrix(1, rng), random_density_matrix(1, rng)) * complex{w};
        }
        mix = mix * complex{1 / total};
        ASSERT_NEAR(log_negativity(mix, SECOND), 0, 1e-9);
        ASSERT_GE(log_negativity(random_density_matrix(2, rng), SECOND), -1e-10);
    }
}

TEST(measures, log_negativity_under_local_channels) {
    Rng rng(89);
    for (int t = 0; t < 100; t++) {
        auto rho = random_density_matrix(2, rng);
        auto c = random_quasi_channel(1, rng, 1.5);
        auto local = tensor(c, PauliChannel::identity(1));
        auto out = apply_dense(local, rho);
        double gain = std::log(trace_norm(partial_transpose(out, SECOND))) - log_negativity(rho, SECOND);
        ASSERT_LE(gain, std::log(p_pauli(c)) + 1e-10);
    }
}

TEST(measures, purity) {
    Rng rng(91);
    ASSERT_NEAR(purity(random_pure_state(2, rng)), 1, 1e-12);
    ASSERT_NEAR(purity(CMatrix(2, 2, {0.5, 0, 0, 0.5})), 0.5, 1e-15);
    for (int t = 0; t < 1000; t++) {
        size_t n = 1 + t % 2;
        auto c = random_quasi_channel(n, rng, 2.0);
        auto sigma = random_hermitian(n, rng);
        auto tr = trace(sigma) / static_cast<double>(size_t{1} << n);
        sigma = sigma - CMatrix::identity(size_t{1} << n) * tr;
        auto r = purity_ratio_bound(c, sigma);
        ASSERT_LE(r.lhs, r.rhs + 1e-9);
        ASSERT_NEAR(r.rhs, p_pauli(c), 1e-15);
    }
    ASSERT_THROW(purity_ratio_bound(PauliChannel::identity(1), CMatrix(2, 2)), std::invalid_argument);
}

TEST(measures, diamond_lower_bound) {
    ASSERT_NEAR(diamond_lower_bound(PauliChannel::identity(1), 10, 1), 1, 1e-12);
    auto inv = inverse(PauliChannel::depolarizing(0.2));
    ASSERT_NEAR(diamond_lower_bound(inv, 1, 1), 1.375, 1e-9);
    Rng rng(93);
    for (int t = 0; t < 100; t++) {
        auto c = random_quasi_channel(1, rng, 3.0);
        ASSERT_NEAR(diamond_lower_bound(c, 2, t), p_pauli(c), 1e-9);
        ASSERT_LE(diamond_lower_bound(c, 20, t, false), p_pauli(c) + 1e-9);
        ASSERT_NEAR(diamond_lower_bound(random_cptp_channel(1, rng), 5, t), 1, 1e-9);
    }
    auto two = random_quasi_channel(2, rng, 3.0);
    ASSERT_NEAR(diamond_lower_bound(two, 1, 1), p_pauli(two), 1e-9);
    ASSERT_THROW(diamond_lower_bound(PauliChannel::identity(3), 1, 1), std::invalid_argument);
    ASSERT_THROW(diamond_lower_bound(PauliChannel::identity(1), 0, 1), std::invalid_argument);
}

TEST(measures, max_entangled_state) {
    auto phi = max_entangled_state(1);
    ASSERT_LT(max_abs_diff(phi, bell()), 1e-15);
    ASSERT_NEAR(purity(max_entangled_state(2)), 1, 1e-12);
}
