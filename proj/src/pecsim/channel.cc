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

#include "pecsim/channel.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "pecsim/errors.h"
#include "pecsim/rng.h"

namespace pecsim {

namespace {

double coefficient_sum(std::span<const double> v) {
    // Neumaier summation keeps the normalization check independent of term order.
    double sum = 0, comp = 0;
    for (double x : v) {
        double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

void check_same_qubits(size_t a, size_t b) {
    if (a != b) {
        throw std::invalid_argument("mismatched qubit counts: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

PauliChannel::PauliChannel(size_t num_qubits, std::vector<double> coeffs)
    : num_qubits_(num_qubits), coeffs_(std::move(coeffs)) {
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("qubit count must be in [1, 10], got " + std::to_string(num_qubits));
    }
    if (coeffs_.size() != pauli_dim(num_qubits)) {
        throw std::invalid_argument("channel on " + std::to_string(num_qubits) + " qubits needs " +
                                    std::to_string(pauli_dim(num_qubits)) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
    }
    double s = coefficient_sum(coeffs_);
    double l1 = 0;
    for (double v : coeffs_) {
        l1 += std::abs(v);
    }
    // Quasi-channels with a large 1-norm carry rounding proportional to it.
    if (!(std::abs(s - 1) <= TRACE_TOL * std::max(1.0, l1))) {
        throw std::invalid_argument("channel coefficients must sum to 1, off by " + short_real(s - 1));
    }
}

PauliChannel PauliChannel::identity(size_t num_qubits) {
    std::vector<double> c(pauli_dim(num_qubits));
    c[0] = 1;
    return PauliChannel(num_qubits, std::move(c));
}

PauliChannel PauliChannel::pauli(const PauliString &p) {
    std::vector<double> c(pauli_dim(p.num_qubits()));
    c[p.index()] = 1;
    return PauliChannel(p.num_qubits(), std::move(c));
}

PauliChannel PauliChannel::depolarizing(double rate) {
    double off = rate / 4;
    return PauliChannel(1, {1 - 3 * off, off, off, off});
}

LindbladModel::LindbladModel(size_t num_qubits, std::vector<LindbladTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("qubit count must be in [1, 10], got " + std::to_string(num_qubits));
    }
    std::set<size_t> seen;
    for (const auto &t : terms_) {
        if (t.pauli.num_qubits() != num_qubits) {
            throw std::invalid_argument("generator " + t.pauli.str() + " has the wrong qubit count");
        }
        if (t.pauli.index() == 0) {
            throw std::invalid_argument("the identity is not a valid Lindblad generator");
        }
        if (!std::isfinite(t.rate)) {
            throw std::invalid_argument("generator " + t.pauli.str() + " has a non-finite rate");
        }
        if (!seen.insert(t.pauli.index()).second) {
            throw std::invalid_argument("duplicate generator " + t.pauli.str());
        }
    }
}

LindbladModel LindbladModel::from_rates(size_t num_qubits, std::span<const double> rates) {
    if (rates.size() != pauli_dim(num_qubits)) {
        throw std::invalid_argument("rate vector has the wrong length");
    }
    if (rates[0] != 0) {
        throw std::invalid_argument("rate of the identity generator must be zero");
    }
    std::vector<LindbladTerm> terms;
    for (size_t k = 1; k < rates.size(); k++) {
        if (rates[k] != 0) {
            terms.push_back({PauliString(num_qubits, k), rates[k]});
        }
    }
    return LindbladModel(num_qubits, std::move(terms));
}

double LindbladModel::total_rate() const {
    double t = 0;
    for (const auto &term : terms_) {
        t += term.rate;
    }
    return t;
}

std::vector<double> LindbladModel::dense_rates() const {
    std::vector<double> out(pauli_dim(num_qubits_));
    for (const auto &t : terms_) {
        out[t.pauli.index()] = t.rate;
    }
    return out;
}

LindbladModel LindbladModel::scaled(double factor) const {
    auto terms = terms_;
    for (auto &t : terms) {
        t.rate *= factor;
    }
    return LindbladModel(num_qubits_, std::move(terms));
}

PauliChannel channel_from_coeffs(size_t num_qubits, std::vector<double> coeffs) {
    return PauliChannel(num_qubits, std::move(coeffs));
}

PauliChannel lindblad_channel(const LindbladModel &model) {
    const size_t n = model.num_qubits();
    const size_t dim = pauli_dim(n);
    std::vector<double> acc(dim);
    acc[0] = 1;
    std::vector<double> next(dim);
    for (const auto &term : model.terms()) {
        // Fold in w I + (1 - w) P: each coefficient splits between k and k*P.
        double w = (1 + std::exp(-2 * term.rate)) / 2;
        size_t p = term.pauli.index();
        for (size_t k = 0; k < dim; k++) {
            next[k] = w * acc[k] + (1 - w) * acc[pauli_product_index(k, p)];
        }
        acc.swap(next);
    }
    return PauliChannel(n, std::move(acc));
}

std::vector<double> eigenvalues(const PauliChannel &c) {
    return fast_symplectic_transform(c.coeffs(), c.num_qubits());
}

PauliChannel from_eigenvalues(size_t num_qubits, std::span<const double> chi) {
    if (chi.size() != pauli_dim(num_qubits)) {
        throw std::invalid_argument("eigenvalue vector has the wrong length");
    }
    // ||nu||_1 <= ||chi||_2, which bounds the rounding carried into chi_0.
    double norm2 = 0;
    for (double x : chi) {
        norm2 += x * x;
    }
    if (!(std::abs(chi[0] - 1) <= TRACE_TOL * std::max(1.0, std::sqrt(norm2)))) {
        throw std::invalid_argument("identity eigenvalue must be 1, off by " + short_real(chi[0] - 1));
    }
    auto coeffs = fast_symplectic_transform(chi, num_qubits);
    double scale = 1.0 / static_cast<double>(chi.size());
    for (auto &x : coeffs) {
        x *= scale;
    }
    return PauliChannel(num_qubits, std::move(coeffs));
}

PauliChannel compose(const PauliChannel &a, const PauliChannel &b) {
    check_same_qubits(a.num_qubits(), b.num_qubits());
    auto ea = eigenvalues(a);
    auto eb = eigenvalues(b);
    for (size_t k = 0; k < ea.size(); k++) {
        ea[k] *= eb[k];
    }
    return from_eigenvalues(a.num_qubits(), ea);
}

PauliChannel channel_power(const PauliChannel &c, int power, double tol) {
    auto chi = eigenvalues(c);
    for (size_t k = 0; k < chi.size(); k++) {
        if (power < 0 && !(std::abs(chi[k]) >= tol)) {
            throw NotInvertible(k, std::abs(chi[k]));
        }
        chi[k] = std::pow(chi[k], power);
    }
    return from_eigenvalues(c.num_qubits(), chi);
}

PauliChannel inverse(const PauliChannel &c, double tol) {
    auto chi = eigenvalues(c);
    for (size_t k = 0; k < chi.size(); k++) {
        if (!(std::abs(chi[k]) >= tol)) {
            throw NotInvertible(k, std::abs(chi[k]));
        }
        chi[k] = 1 / chi[k];
    }
    return from_eigenvalues(c.num_qubits(), chi);
}

bool is_cptp(const PauliChannel &c, double tol) {
    return *std::min_element(c.coeffs().begin(), c.coeffs().end()) >= -tol;
}

double identity_component(const PauliChannel &c) {
    return c[0];
}

PauliChannel twirl_diagonal(size_t num_qubits, const Matrix &omega) {
    const size_t dim = pauli_dim(num_qubits);
    if (omega.rows() != dim || omega.cols() != dim) {
        throw std::invalid_argument("twirl weight matrix must be 4^n x 4^n");
    }
    std::vector<double> diag(dim);
    for (size_t k = 0; k < dim; k++) {
        diag[k] = omega(k, k);
    }
    double s = coefficient_sum(diag);
    if (!(std::abs(s - 1) <= TRACE_TOL)) {
        throw std::invalid_argument("twirl weight diagonal sums to " + std::to_string(s) + ", expected 1");
    }
    return PauliChannel(num_qubits, std::move(diag));
}

namespace {

// P|b> = phase(b) |b ^ flip>. Qubit 0 is the most significant bit of b.
struct PauliAction {
    size_t flip = 0;
    std::vector<complex> phase;
};

PauliAction pauli_action(size_t index, size_t num_qubits) {
    const size_t d = size_t{1} << num_qubits;
    PauliAction act;
    act.phase.assign(d, complex{1, 0});
    for (size_t q = 0; q < num_qubits; q++) {
        uint8_t digit = (index >> (2 * (num_qubits - 1 - q))) & 3;
        size_t bit = size_t{1} << (num_qubits - 1 - q);
        if (digit == 1 || digit == 2) {
            act.flip |= bit;
        }
        for (size_t b = 0; b < d; b++) {
            bool one = b & bit;
            if (digit == 2) {
                // Y|0> = i|1>, Y|1> = -i|0>.
                act.phase[b] *= one ? complex{0, -1} : complex{0, 1};
            } else if (digit == 3 && one) {
                act.phase[b] = -act.phase[b];
            }
        }
    }
    return act;
}

}  // namespace

CMatrix pauli_matrix(const PauliString &p) {
    const size_t d = size_t{1} << p.num_qubits();
    auto act = pauli_action(p.index(), p.num_qubits());
    CMatrix out(d, d);
    for (size_t b = 0; b < d; b++) {
        out(b ^ act.flip, b) = act.phase[b];
    }
    return out;
}

CMatrix apply_pauli_mixture(std::span<const double> coeffs, size_t num_qubits, const CMatrix &h) {
    const size_t d = size_t{1} << num_qubits;
    if (coeffs.size() != pauli_dim(num_qubits)) {
        throw std::invalid_argument("coefficient vector has the wrong length");
    }
    if (h.rows() != d || h.cols() != d) {
        throw std::invalid_argument("operator is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                                    ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    CMatrix out(d, d);
    for (size_t i = 0; i < coeffs.size(); i++) {
        if (coeffs[i] == 0) {
            continue;
        }
        auto act = pauli_action(i, num_qubits);
        // (P H P^dagger)_{a, c} = phase(a') H_{a', c'} conj(phase(c')) with a' = a ^ flip.
        for (size_t a = 0; a < d; a++) {
            size_t ap = a ^ act.flip;
            for (size_t c = 0; c < d; c++) {
                size_t cp = c ^ act.flip;
                out(a, c) += coeffs[i] * act.phase[ap] * h(ap, cp) * std::conj(act.phase[cp]);
            }
        }
    }
    return out;
}

CMatrix apply_dense(const PauliChannel &c, const CMatrix &h) {
    if (c.num_qubits() > MAX_DENSE_QUBITS) {
        throw std::invalid_argument("dense operator path supports at most 3 qubits");
    }
    return apply_pauli_mixture(c.coeffs(), c.num_qubits(), h);
}

PauliChannel tensor(const PauliChannel &a, const PauliChannel &b) {
    if (a.num_qubits() + b.num_qubits() > MAX_QUBITS) {
        throw std::invalid_argument("tensor product exceeds 10 qubits");
    }
    std::vector<double> out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PauliChannel(a.num_qubits() + b.num_qubits(), std::move(out));
}

LindbladModel random_pauli_lindblad(size_t num_qubits, double total_rate, uint64_t seed) {
    if (!(total_rate >= 0) || !std::isfinite(total_rate)) {
        throw std::invalid_argument("total error rate must be non-negative");
    }
    const size_t dim = pauli_dim(num_qubits);
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("qubit count must be in [1, 10]");
    }
    // Normalized i.i.d. exponentials are uniform on the simplex.
    Rng rng(seed);
    std::vector<double> w(dim);
    double sum = 0;
    for (size_t k = 1; k < dim; k++) {
        w[k] = rng.exponential();
        sum += w[k];
    }
    std::vector<LindbladTerm> terms;
    terms.reserve(dim - 1);
    for (size_t k = 1; k < dim; k++) {
        terms.push_back({PauliString(num_qubits, k), total_rate * w[k] / sum});
    }
    return LindbladModel(num_qubits, std::move(terms));
}

}  // namespace pecsim
