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

#include "pecsim/pauli.h"

#include <bit>
#include <stdexcept>

namespace pecsim {

namespace {

// Digit d in {I, X, Y, Z} as (x, z) bits: I=00, X=10, Y=11, Z=01.
constexpr uint8_t X_BIT[4] = {0, 1, 1, 0};
constexpr uint8_t Z_BIT[4] = {0, 0, 1, 1};
constexpr uint8_t FROM_XZ[2][2] = {{0, 3}, {1, 2}};

void check_qubits(size_t n) {
    if (n == 0 || n > MAX_QUBITS) {
        throw std::invalid_argument(
            "qubit count must be in [1, " + std::to_string(MAX_QUBITS) + "], got " + std::to_string(n));
    }
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "mismatched qubit counts: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits, size_t index) : num_qubits_(num_qubits), index_(index) {
    check_qubits(num_qubits);
    if (index >= pauli_dim(num_qubits)) {
        throw std::invalid_argument("Pauli index " + std::to_string(index) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
    }
}

PauliString PauliString::from_label(std::string_view label) {
    if (label.empty()) {
        throw std::invalid_argument("empty Pauli label");
    }
    if (label.size() > MAX_QUBITS) {
        throw std::invalid_argument("Pauli label longer than " + std::to_string(MAX_QUBITS) + " qubits");
    }
    size_t index = 0;
    for (char c : label) {
        uint8_t d;
        switch (c) {
            case 'I':
                d = 0;
                break;
            case 'X':
                d = 1;
                break;
            case 'Y':
                d = 2;
                break;
            case 'Z':
                d = 3;
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") + c + "' in label");
        }
        index = index * 4 + d;
    }
    return PauliString(label.size(), index);
}

PauliString PauliString::identity(size_t num_qubits) {
    return PauliString(num_qubits, 0);
}

std::vector<uint8_t> PauliString::digits() const {
    std::vector<uint8_t> out(num_qubits_);
    for (size_t q = 0; q < num_qubits_; q++) {
        out[q] = digit(q);
    }
    return out;
}

std::string PauliString::str() const {
    std::string out(num_qubits_, 'I');
    for (size_t q = 0; q < num_qubits_; q++) {
        out[q] = "IXYZ"[digit(q)];
    }
    return out;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t q = 0; q < num_qubits_; q++) {
        w += digit(q) != 0;
    }
    return w;
}

int commutation_sign_index(size_t a, size_t b) {
    // Anticommutes iff the symplectic product x_a.z_b + z_a.x_b is odd.
    uint64_t ax = 0, az = 0, bx = 0, bz = 0;
    for (size_t q = 0; a | b; q++, a >>= 2, b >>= 2) {
        uint8_t da = a & 3, db = b & 3;
        ax |= uint64_t{X_BIT[da]} << q;
        az |= uint64_t{Z_BIT[da]} << q;
        bx |= uint64_t{X_BIT[db]} << q;
        bz |= uint64_t{Z_BIT[db]} << q;
    }
    return (std::popcount((ax & bz) ^ (az & bx)) & 1) ? -1 : +1;
}

int commutation_sign(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    return commutation_sign_index(a.index(), b.index());
}

size_t pauli_product_index(size_t a, size_t b) {
    size_t out = 0;
    for (size_t shift = 0; a | b; shift += 2, a >>= 2, b >>= 2) {
        uint8_t da = a & 3, db = b & 3;
        out |= size_t{FROM_XZ[X_BIT[da] ^ X_BIT[db]][Z_BIT[da] ^ Z_BIT[db]]} << shift;
    }
    return out;
}

PauliString pauli_product(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    return PauliString(a.num_qubits(), pauli_product_index(a.index(), b.index()));
}

size_t num_qubits_for_length(size_t len) {
    for (size_t n = 1; n <= MAX_QUBITS; n++) {
        if (pauli_dim(n) == len) {
            return n;
        }
    }
    throw std::invalid_argument("length " + std::to_string(len) + " is not 4^n for 1 <= n <= 10");
}

void fast_symplectic_transform_inplace(std::span<double> v, size_t num_qubits) {
    check_qubits(num_qubits);
    if (v.size() != pauli_dim(num_qubits)) {
        throw std::invalid_argument("transform input has length " + std::to_string(v.size()) + ", expected 4^" +
                                    std::to_string(num_qubits));
    }
    const size_t dim = v.size();
    for (size_t stride = 1; stride < dim; stride *= 4) {
        for (size_t block = 0; block < dim; block += 4 * stride) {
            for (size_t j = block; j < block + stride; j++) {
                double i0 = v[j];
                double x = v[j + stride];
                double y = v[j + 2 * stride];
                double z = v[j + 3 * stride];
                v[j] = i0 + x + y + z;
                v[j + stride] = i0 + x - y - z;
                v[j + 2 * stride] = i0 - x + y - z;
                v[j + 3 * stride] = i0 - x - y + z;
            }
        }
    }
}

std::vector<double> fast_symplectic_transform(std::span<const double> v, size_t num_qubits) {
    std::vector<double> out(v.begin(), v.end());
    fast_symplectic_transform_inplace(out, num_qubits);
    return out;
}

}  // namespace pecsim
