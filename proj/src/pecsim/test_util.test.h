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

#ifndef PECSIM_TEST_UTIL_TEST_H
#define PECSIM_TEST_UTIL_TEST_H

#include <cmath>
#include <complex>
#include <vector>

#include "pecsim/channel.h"
#include "pecsim/dense.h"
#include "pecsim/errors.h"
#include "pecsim/implementability.h"
#include "pecsim/pauli.h"
#include "pecsim/rng.h"

namespace pecsim::testing {

/// Explicit 2^n x 2^n Pauli matrix built from Kronecker products, qubit 0 leftmost.
inline CMatrix kron_pauli(const std::vector<int> &digits) {
    const complex i1{0, 1};
    const CMatrix single[4] = {
        CMatrix(2, 2, {1, 0, 0, 1}),
        CMatrix(2, 2, {0, 1, 1, 0}),
        CMatrix(2, 2, {0, -i1, i1, 0}),
        CMatrix(2, 2, {1, 0, 0, -1}),
    };
    CMatrix out(1, 1, {1});
    for (int d : digits) {
        const CMatrix &s = single[d];
        CMatrix next(out.rows() * 2, out.cols() * 2);
        for (size_t r = 0; r < out.rows(); r++) {
            for (size_t c = 0; c < out.cols(); c++) {
                for (size_t a = 0; a < 2; a++) {
                    for (size_t b = 0; b < 2; b++) {
                        next(2 * r + a, 2 * c + b) = out(r, c) * s(a, b);
                    }
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

inline std::vector<int> base4_digits(size_t index, size_t n) {
    std::vector<int> d(n);
    for (size_t q = 0; q < n; q++) {
        d[n - 1 - q] = static_cast<int>(index & 3);
        index >>= 2;
    }
    return d;
}

inline CMatrix kron_pauli(size_t index, size_t n) {
    return kron_pauli(base4_digits(index, n));
}

/// Random quasi-channel: normalized coefficients with mixed signs.
inline PauliChannel random_quasi_channel(size_t n, Rng &rng, double spread = 0.5) {
    std::vector<double> v(pauli_dim(n));
    double sum = 0;
    for (size_t k = 1; k < v.size(); k++) {
        v[k] = spread * (2 * rng.uniform() - 1) / static_cast<double>(v.size());
        sum += v[k];
    }
    v[0] = 1 - sum;
    return PauliChannel(n, v);
}

/// Random CPTP Pauli channel with Dirichlet(1) coefficients.
inline PauliChannel random_cptp_channel(size_t n, Rng &rng) {
    std::vector<double> v(pauli_dim(n));
    double sum = 0;
    for (auto &x : v) {
        x = rng.exponential();
        sum += x;
    }
    double rest = 0;
    for (size_t k = 1; k < v.size(); k++) {
        v[k] /= sum;
        rest += v[k];
    }
    v[0] = 1 - rest;
    return PauliChannel(n, v);
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0;
    for (size_t k = 0; k < a.size(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return a.size() == b.size() ? m : 1e300;
}

inline double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    double m = 0;
    for (size_t k = 0; k < a.data().size(); k++) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

// Minimum of sum|x| over basic solutions: every subset S of points whose columns are independent
// and solve A_S x_S = target exactly. The LP optimum is attained at one of these.
inline double enumerate_basic_solutions(const FreeSet &fs, const std::vector<double> &target) {
    const size_t d = fs.dim();
    const size_t m = fs.size();
    double best = INFINITY;
    for (uint32_t mask = 1; mask < (1u << m); mask++) {
        std::vector<size_t> cols;
        for (size_t k = 0; k < m; k++) {
            if (mask & (1u << k)) {
                cols.push_back(k);
            }
        }
        if (cols.size() > d) {
            continue;
        }
        const size_t s = cols.size();
        Matrix gram(s, s);
        std::vector<double> rhs(s, 0);
        for (size_t a = 0; a < s; a++) {
            for (size_t b = 0; b < s; b++) {
                for (size_t r = 0; r < d; r++) {
                    gram(a, b) += fs.points()[cols[a]][r] * fs.points()[cols[b]][r];
                }
            }
            for (size_t r = 0; r < d; r++) {
                rhs[a] += fs.points()[cols[a]][r] * target[r];
            }
        }
        std::vector<double> x;
        try {
            x = solve_linear(gram, rhs, 1e-10);
        } catch (const SingularMatrix &) {
            continue;
        }
        double resid = 0, cost = 0;
        for (size_t r = 0; r < d; r++) {
            double v = -target[r];
            for (size_t a = 0; a < s; a++) {
                v += x[a] * fs.points()[cols[a]][r];
            }
            resid = std::max(resid, std::abs(v));
        }
        if (resid > 1e-9) {
            continue;
        }
        for (double v : x) {
            cost += std::abs(v);
        }
        best = std::min(best, cost);
    }
    return best;
}

inline std::vector<double> random_normalized_point(size_t d, Rng &rng) {
    std::vector<double> p(d);
    double s = 0;
    for (size_t k = 0; k + 1 < d; k++) {
        p[k] = 2 * rng.uniform() - 0.5;
        s += p[k];
    }
    p[d - 1] = 1 - s;
    return p;
}

inline std::vector<double> combine(const FreeSet &fs, const std::vector<double> &x) {
    std::vector<double> out(fs.dim(), 0);
    for (size_t l = 0; l < fs.size(); l++) {
        for (size_t r = 0; r < fs.dim(); r++) {
            out[r] += x[l] * fs.points()[l][r];
        }
    }
    return out;
}

}  // namespace pecsim::testing

#endif
