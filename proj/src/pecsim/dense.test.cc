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

#include "pecsim/dense.h"

#include <cmath>

#include "gtest/gtest.h"

#include "pecsim/errors.h"
#include "pecsim/test_util.test.h"

using namespace pecsim;
using namespace pecsim::testing;

TEST(dense, symmetric_eigenvalues) {
    Matrix a(2, 2, {2, 1, 1, 2});
    ASSERT_LT(max_abs_diff(symmetric_eigenvalues(a), {1, 3}), 1e-14);
    Rng rng(95);
    for (int t = 0; t < 20; t++) {
        size_t n = 2 + t % 6;
        Matrix m(n, n);
        double tr = 0, tr2 = 0;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i; j < n; j++) {
                m(i, j) = m(j, i) = rng.normal();
            }
        }
        for (size_t i = 0; i < n; i++) {
            tr += m(i, i);
            for (size_t j = 0; j < n; j++) {
                tr2 += m(i, j) * m(i, j);
            }
        }
        auto ev = symmetric_eigenvalues(m);
        double s = 0, s2 = 0;
        for (double v : ev) {
            s += v;
            s2 += v * v;
        }
        ASSERT_NEAR(s, tr, 1e-10);
        ASSERT_NEAR(s2, tr2, 1e-10);
        for (size_t k = 1; k < n; k++) {
            ASSERT_LE(ev[k - 1], ev[k]);
        }
    }
}

TEST(dense, hermitian_eigenvalues) {
    // [[a, b], [b*, d]] has eigenvalues (a+d)/2 +- sqrt(((a-d)/2)^2 + |b|^2).
    complex b{0.3, -0.4};
    CMatrix h(2, 2, {1, b, std::conj(b), -1});
    double r = std::sqrt(1 + std::norm(b));
    ASSERT_LT(max_abs_diff(hermitian_eigenvalues(h), {-r, r}), 1e-13);
}

TEST(dense, invert_and_solve) {
    Matrix m(3, 3, {4, 1, 0, 1, 3, 1, 0, 1, 2});
    auto inv = invert_matrix(m);
    ASSERT_LT(frobenius_norm(m * inv - Matrix::identity(3)), 1e-14);
    auto x = solve_linear(m, std::vector<double>{1, 2, 3});
    auto check = m * Matrix(3, 1, x);
    ASSERT_LT(max_abs_diff(check.data(), {1, 2, 3}), 1e-14);
    Matrix singular(2, 2, {1, 2, 2, 4});
    ASSERT_THROW(invert_matrix(singular), SingularMatrix);
    ASSERT_THROW(solve_linear(singular, std::vector<double>{1, 2}), SingularMatrix);
    ASSERT_THROW(invert_matrix(Matrix(2, 3)), std::invalid_argument);
}
