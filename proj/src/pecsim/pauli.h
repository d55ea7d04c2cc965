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

#ifndef PECSIM_PAULI_H
#define PECSIM_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pecsim {

/// Largest supported qubit count. 4^10 channel coefficients is about 8 MB of doubles.
constexpr size_t MAX_QUBITS = 10;

/// Returns 4^n.
constexpr size_t pauli_dim(size_t n) {
    return size_t{1} << (2 * n);
}

/// An n-qubit Pauli label without phase.
///
/// Digits use 0=I, 1=X, 2=Y, 3=Z. Qubit 0 is the most significant base-4 digit
/// of the linear index, so "XZ" has index 1*4 + 3 = 7.
class PauliString {
   public:
    PauliString(size_t num_qubits, size_t index);

    static PauliString from_label(std::string_view label);
    static PauliString identity(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t index() const {
        return index_;
    }
    /// Digit of qubit q (0=I, 1=X, 2=Y, 3=Z).
    uint8_t digit(size_t q) const {
        return (index_ >> (2 * (num_qubits_ - 1 - q))) & 3;
    }
    std::vector<uint8_t> digits() const;
    std::string str() const;
    /// Number of non-identity qubits.
    size_t weight() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_;
    size_t index_;
};

/// +1 if the Paulis commute and -1 if they anticommute.
int commutation_sign(const PauliString &a, const PauliString &b);

/// Same as commutation_sign but on raw linear indices of equal qubit count.
/// Works for any n because the digit layout does not depend on it.
int commutation_sign_index(size_t a, size_t b);

/// Pauli group product modulo phase. Per qubit this is XOR in the (x, z) bit encoding.
PauliString pauli_product(const PauliString &a, const PauliString &b);

/// Index form of pauli_product.
size_t pauli_product_index(size_t a, size_t b);

/// out[k] = sum_i v[i] * commutation_sign(i, k).
///
/// Runs n butterfly passes with the 4x4 kernel
///     [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
/// for O(n 4^n) cost. Applying it twice multiplies by 4^n.
std::vector<double> fast_symplectic_transform(std::span<const double> v, size_t num_qubits);

/// In-place variant. The length of v must be 4^num_qubits.
void fast_symplectic_transform_inplace(std::span<double> v, size_t num_qubits);

/// Validates that `len == 4^n` for some n <= MAX_QUBITS and returns n.
size_t num_qubits_for_length(size_t len);

}  // namespace pecsim

#endif
