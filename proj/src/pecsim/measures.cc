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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pecsim/implementability.h"

namespace pecsim {

namespace {

size_t qubits_of(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("operator must be square");
    }
    size_t n = 0;
    while ((size_t{1} << n) < m.rows()) {
        n++;
    }
    if ((size_t{1} << n) != m.rows() || n == 0) {
        throw std::invalid_argument("operator dimension must be 2^n with n >= 1, got " + std::to_string(m.rows()));
    }
    return n;
}

void check_hermitian(const CMatrix &h) {
    double scale = 1;
    for (const auto &e : h.data()) {
        scale = std::max(scale, std::abs(e));
    }
    if (hermiticity_error(h) > 1e-10 * scale) {
        throw std::invalid_argument("operator is not Hermitian");
    }
}

}  // namespace

double trace_norm(const CMatrix &h) {
    qubits_of(h);
    check_hermitian(h);
    double s = 0;
    for (double ev : hermitian_eigenvalues(h)) {
        s += std::abs(ev);
    }
    return s;
}

CMatrix partial_transpose(const CMatrix &rho, std::span<const size_t> subsystem_b) {
    const size_t n = qubits_of(rho);
    size_t mask = 0;
    for (size_t q : subsystem_b) {
        if (q >= n) {
            throw std::invalid_argument("subsystem qubit " + std::to_string(q) + " out of range");
        }
        size_t bit = size_t{1} << (n - 1 - q);
        if (mask & bit) {
            throw std::invalid_argument("subsystem qubit " + std::to_string(q) + " listed twice");
        }
        mask |= bit;
    }
    const size_t d = rho.rows();
    CMatrix out(d, d);
    for (size_t a = 0; a < d; a++) {
        for (size_t c = 0; c < d; c++) {
            // Swap the B bits between row and column index.
            size_t a2 = (a & ~mask) | (c & mask);
            size_t c2 = (c & ~mask) | (a & mask);
            out(a2, c2) = rho(a, c);
        }
    }
    return out;
}

double log_negativity(const CMatrix &rho, std::span<const size_t> subsystem_b) {
    return std::log(trace_norm(partial_transpose(rho, subsystem_b)));
}

double purity(const CMatrix &rho) {
    qubits_of(rho);
    double s = 0;
    for (size_t a = 0; a < rho.rows(); a++) {
        for (size_t c = 0; c < rho.cols(); c++) {
            s += (rho(a, c) * rho(c, a)).real();
        }
    }
    return s;
}

PurityRatio purity_ratio_bound(const PauliChannel &c, const CMatrix &sigma) {
    double norm = frobenius_norm(sigma);
    if (!(norm > 0)) {
        throw std::invalid_argument("purity ratio needs a nonzero operator");
    }
    PurityRatio out;
    out.lhs = frobenius_norm(apply_dense(c, sigma)) / norm;
    out.rhs = p_pauli(c);
    return out;
}

CMatrix max_entangled_state(size_t num_qubits) {
    const size_t d = size_t{1} << num_qubits;
    CMatrix out(d * d, d * d);
    const double v = 1.0 / static_cast<double>(d);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            out(a * d + a, b * d + b) = v;
        }
    }
    return out;
}

CMatrix random_pure_state(size_t num_qubits, Rng &rng) {
    const size_t d = size_t{1} << num_qubits;
    std::vector<complex> psi(d);
    double norm = 0;
    for (auto &x : psi) {
        x = {rng.normal(), rng.normal()};
        norm += std::norm(x);
    }
    norm = std::sqrt(norm);
    for (auto &x : psi) {
        x /= norm;
    }
    CMatrix out(d, d);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            out(a, b) = psi[a] * std::conj(psi[b]);
        }
    }
    return out;
}

CMatrix random_density_matrix(size_t num_qubits, Rng &rng) {
    const size_t d = size_t{1} << num_qubits;
    CMatrix g(d, d);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            g(a, b) = {rng.normal(), rng.normal()};
        }
    }
    CMatrix rho = g * adjoint(g);
    return rho * complex{1 / trace(rho).real(), 0};
}

CMatrix random_hermitian(size_t num_qubits, Rng &rng) {
    const size_t d = size_t{1} << num_qubits;
    CMatrix h(d, d);
    for (size_t a = 0; a < d; a++) {
        h(a, a) = rng.normal();
        for (size_t b = a + 1; b < d; b++) {
            h(a, b) = {rng.normal(), rng.normal()};
            h(b, a) = std::conj(h(a, b));
        }
    }
    return h;
}

double diamond_lower_bound(const PauliChannel &c, size_t samples, uint64_t seed, bool include_max_entangled) {
    const size_t n = c.num_qubits();
    if (n > 2) {
        throw std::invalid_argument("diamond lower bound supports at most 2 qubits");
    }
    if (samples < 1) {
        throw std::invalid_argument("need at least one sample");
    }
    auto extended = tensor(c, PauliChannel::identity(n));
    auto evaluate = [&](const CMatrix &phi) {
        return trace_norm(apply_pauli_mixture(extended.coeffs(), 2 * n, phi));
    };
    double best = include_max_entangled ? evaluate(max_entangled_state(n)) : 0.0;
    Rng rng(seed);
    for (size_t s = 0; s < samples; s++) {
        best = std::max(best, evaluate(random_pure_state(2 * n, rng)));
    }
    return best;
}

}  // namespace pecsim
