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

#include "pecsim/implementability.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pecsim/errors.h"
#include "pecsim/simplex.h"

namespace pecsim {

FreeSet::FreeSet(size_t dim, std::vector<std::vector<double>> points, std::vector<double> functional)
    : dim_(dim), points_(std::move(points)), functional_(std::move(functional)) {
    if (dim == 0) {
        throw std::invalid_argument("free set dimension must be positive");
    }
    if (points_.empty()) {
        throw std::invalid_argument("free set needs at least one point");
    }
    if (functional_.empty()) {
        functional_.assign(dim, 1.0);
    }
    if (functional_.size() != dim) {
        throw std::invalid_argument("normalization functional has the wrong length");
    }
    for (size_t k = 0; k < points_.size(); k++) {
        const auto &pt = points_[k];
        if (pt.size() != dim) {
            throw std::invalid_argument("free set point " + std::to_string(k) + " has length " +
                                        std::to_string(pt.size()) + ", expected " + std::to_string(dim));
        }
        double norm = 0;
        for (size_t i = 0; i < dim; i++) {
            norm += functional_[i] * pt[i];
        }
        if (!(std::abs(norm - 1) <= 1e-9)) {
            throw std::invalid_argument("free set point " + std::to_string(k) + " is not normalized (" +
                                        std::to_string(norm) + ")");
        }
        for (size_t j = 0; j < k; j++) {
            double diff = 0;
            for (size_t i = 0; i < dim; i++) {
                diff = std::max(diff, std::abs(pt[i] - points_[j][i]));
            }
            if (diff <= 1e-12) {
                throw std::invalid_argument("free set points " + std::to_string(j) + " and " + std::to_string(k) +
                                            " are duplicates");
            }
        }
    }
}

FreeSet FreeSet::unit_basis(size_t dim) {
    std::vector<std::vector<double>> pts(dim, std::vector<double>(dim, 0.0));
    for (size_t k = 0; k < dim; k++) {
        pts[k][k] = 1;
    }
    return FreeSet(dim, std::move(pts));
}

FreeSet FreeSet::pauli_channels(size_t num_qubits) {
    return unit_basis(pauli_dim(num_qubits));
}

FreeSet FreeSet::without(size_t k) const {
    if (k >= points_.size() || points_.size() == 1) {
        throw std::invalid_argument("cannot remove that point");
    }
    auto pts = points_;
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(k));
    return FreeSet(dim_, std::move(pts), functional_);
}

double span_residual(const FreeSet &free_set, std::span<const double> target, bool affine) {
    const size_t rows = free_set.dim() + (affine ? 1 : 0);
    if (target.size() != free_set.dim()) {
        throw std::invalid_argument("target has length " + std::to_string(target.size()) + ", expected " +
                                    std::to_string(free_set.dim()));
    }
    auto column = [&](const std::vector<double> &src) {
        std::vector<double> v(src.begin(), src.end());
        if (affine) {
            v.push_back(1.0);
        }
        return v;
    };
    std::vector<std::vector<double>> basis;
    for (const auto &pt : free_set.points()) {
        auto v = column(pt);
        double before = 0;
        for (double e : v) {
            before += e * e;
        }
        // Two Gram-Schmidt passes for stability.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &q : basis) {
                double d = 0;
                for (size_t i = 0; i < rows; i++) {
                    d += q[i] * v[i];
                }
                for (size_t i = 0; i < rows; i++) {
                    v[i] -= d * q[i];
                }
            }
        }
        double after = 0;
        for (double e : v) {
            after += e * e;
        }
        if (after > 1e-20 * std::max(1.0, before)) {
            double inv = 1 / std::sqrt(after);
            for (auto &e : v) {
                e *= inv;
            }
            basis.push_back(std::move(v));
        }
    }
    std::vector<double> t(target.begin(), target.end());
    if (affine) {
        t.push_back(1.0);
    }
    for (int pass = 0; pass < 2; pass++) {
        for (const auto &q : basis) {
            double d = 0;
            for (size_t i = 0; i < rows; i++) {
                d += q[i] * t[i];
            }
            for (size_t i = 0; i < rows; i++) {
                t[i] -= d * q[i];
            }
        }
    }
    double r = 0;
    for (double e : t) {
        r += e * e;
    }
    return std::sqrt(r);
}

LpReport implementability_lp(const FreeSet &free_set, std::span<const double> target, const LpOptions &opts) {
    double residual = span_residual(free_set, target, opts.affine);
    if (!(residual <= opts.span_tol)) {
        throw TargetOutsideSpan(residual);
    }
    const size_t d = free_set.dim();
    const size_t m = free_set.size();
    Matrix a(d, 2 * m);
    for (size_t l = 0; l < m; l++) {
        for (size_t r = 0; r < d; r++) {
            a(r, l) = free_set.points()[l][r];
            a(r, m + l) = -free_set.points()[l][r];
        }
    }
    std::vector<double> cost(2 * m, 1.0);
    auto sol = simplex_minimize(a, target, cost, opts.pivot_tol);
    if (!sol.feasible) {
        throw NumericalError("implementability LP infeasible although the target passed the span check");
    }
    LpReport report;
    report.iterations = sol.iterations;
    report.x.resize(m);
    report.p = 0;
    for (size_t l = 0; l < m; l++) {
        report.x[l] = sol.x[l] - sol.x[m + l];
        report.p += std::abs(report.x[l]);
    }
    return report;
}

TwoPointDecomposition two_point_decomposition(const FreeSet &free_set, std::span<const double> x) {
    if (x.size() != free_set.size()) {
        throw std::invalid_argument("coefficient vector does not match the free set");
    }
    TwoPointDecomposition out;
    std::vector<double> plus(free_set.dim(), 0.0), minus(free_set.dim(), 0.0);
    for (size_t l = 0; l < x.size(); l++) {
        const auto &pt = free_set.points()[l];
        if (x[l] > 0) {
            out.n_plus += x[l];
            for (size_t i = 0; i < pt.size(); i++) {
                plus[i] += x[l] * pt[i];
            }
        } else if (x[l] < 0) {
            out.n_minus -= x[l];
            for (size_t i = 0; i < pt.size(); i++) {
                minus[i] -= x[l] * pt[i];
            }
        }
    }
    if (out.n_plus > 0) {
        for (auto &e : plus) {
            e /= out.n_plus;
        }
        out.point_plus = std::move(plus);
    }
    if (out.n_minus > 0) {
        for (auto &e : minus) {
            e /= out.n_minus;
        }
        out.point_minus = std::move(minus);
    }
    return out;
}

double robustness(double p) {
    if (!(p >= 1 - 1e-9)) {
        throw std::invalid_argument("implementability below 1: " + std::to_string(p));
    }
    return (p - 1) / 2;
}

double p_pauli(const PauliChannel &c) {
    double s = 0;
    for (double v : c.coeffs()) {
        s += std::abs(v);
    }
    return s;
}

std::vector<double> pauli_channel_as_vector(const PauliChannel &c) {
    return c.coeffs();
}

QuasiProgram::QuasiProgram(size_t num_qubits, std::vector<Entry> entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)), cost_(0) {
    if (entries_.empty()) {
        throw std::invalid_argument("quasiprobability program is empty");
    }
    const size_t dim = pauli_dim(num_qubits);
    double sum = 0;
    for (const auto &e : entries_) {
        if (e.index >= dim) {
            throw std::invalid_argument("program index out of range");
        }
        sum += e.quasi;
        cost_ += std::abs(e.quasi);
    }
    if (!(std::abs(sum - 1) <= 1e-9)) {
        throw std::invalid_argument("quasiprobabilities sum to " + std::to_string(sum) + ", expected 1");
    }
}

QuasiProgram QuasiProgram::from_dense(size_t num_qubits, std::span<const double> quasi) {
    if (quasi.size() != pauli_dim(num_qubits)) {
        throw std::invalid_argument("quasiprobability vector has the wrong length");
    }
    std::vector<Entry> entries;
    for (size_t k = 0; k < quasi.size(); k++) {
        if (std::abs(quasi[k]) > ZERO_COEFF_TOL) {
            entries.push_back({k, quasi[k]});
        }
    }
    return QuasiProgram(num_qubits, std::move(entries));
}

std::vector<double> QuasiProgram::weights() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(std::abs(e.quasi) / cost_);
    }
    return out;
}

std::vector<int> QuasiProgram::signs() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(e.quasi < 0 ? -1 : +1);
    }
    return out;
}

std::vector<double> QuasiProgram::dense() const {
    std::vector<double> out(pauli_dim(num_qubits_), 0.0);
    for (const auto &e : entries_) {
        out[e.index] = e.quasi;
    }
    return out;
}

QuasiProgram quasi_program(const PauliChannel &c) {
    return QuasiProgram::from_dense(c.num_qubits(), c.coeffs());
}

}  // namespace pecsim
