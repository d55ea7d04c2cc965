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

#ifndef PECSIM_CHANNEL_H
#define PECSIM_CHANNEL_H

#include <cstdint>
#include <span>
#include <vector>

#include "pecsim/dense.h"
#include "pecsim/pauli.h"

namespace pecsim {

/// Tolerance on the minimum coefficient for the CPTP test.
constexpr double CPTP_TOL = 1e-9;
/// Eigenvalues smaller than this in magnitude are treated as zero when inverting.
constexpr double INVERSE_TOL = 1e-9;
/// Allowed drift of the coefficient sum from 1.
constexpr double TRACE_TOL = 1e-9;
/// Largest qubit count for the dense operator path.
constexpr size_t MAX_DENSE_QUBITS = 3;

/// A Pauli-diagonal trace-preserving map sum_i coeffs[i] P_i(.)P_i.
///
/// Coefficients may be negative, in which case the map is Hermitian-preserving
/// but not completely positive (for example a channel inverse).
class PauliChannel {
   public:
    PauliChannel(size_t num_qubits, std::vector<double> coeffs);

    static PauliChannel identity(size_t num_qubits);
    /// The conjugation map P(.)P as a channel.
    static PauliChannel pauli(const PauliString &p);
    /// Single-qubit depolarizing channel (1 - 3 rate/4) I + (rate/4)(X + Y + Z).
    static PauliChannel depolarizing(double rate);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return coeffs_.size();
    }
    const std::vector<double> &coeffs() const {
        return coeffs_;
    }
    double operator[](size_t k) const {
        return coeffs_[k];
    }

   private:
    size_t num_qubits_;
    std::vector<double> coeffs_;
};

/// One generator of a Pauli-Lindblad model.
struct LindbladTerm {
    PauliString pauli;
    double rate;
};

/// Sparse Pauli-Lindblad parametrization exp(sum_i rate_i (P_i - I)).
///
/// Rates may be negative, which describes inverses and over-mitigated residuals.
class LindbladModel {
   public:
    LindbladModel(size_t num_qubits, std::vector<LindbladTerm> terms);

    /// Dense rate vector of length 4^n, entry 0 always zero.
    static LindbladModel from_rates(size_t num_qubits, std::span<const double> rates);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<LindbladTerm> &terms() const {
        return terms_;
    }
    /// Sum of rates.
    double total_rate() const;
    /// Rates as a dense vector of length 4^n.
    std::vector<double> dense_rates() const;
    /// The model with every rate multiplied by `factor`.
    LindbladModel scaled(double factor) const;

   private:
    size_t num_qubits_;
    std::vector<LindbladTerm> terms_;
};

/// Builds a channel from coefficients (must have length 4^n and sum to 1).
PauliChannel channel_from_coeffs(size_t num_qubits, std::vector<double> coeffs);

/// exp(L) as the composition of factors w I + (1 - w) P with w = (1 + e^(-2 rate)) / 2.
PauliChannel lindblad_channel(const LindbladModel &model);

/// Channel eigenvalues chi_k = sum_i coeffs_i sign(i, k). chi_0 = 1.
std::vector<double> eigenvalues(const PauliChannel &c);

/// Inverse of eigenvalues(). Requires chi[0] = 1.
PauliChannel from_eigenvalues(size_t num_qubits, std::span<const double> chi);

/// a o b. Pauli-diagonal maps commute, so the order does not matter.
PauliChannel compose(const PauliChannel &a, const PauliChannel &b);

/// c^power for integer power (negative powers invert).
PauliChannel channel_power(const PauliChannel &c, int power, double tol = INVERSE_TOL);

/// Throws NotInvertible if some |chi_k| < tol.
PauliChannel inverse(const PauliChannel &c, double tol = INVERSE_TOL);

bool is_cptp(const PauliChannel &c, double tol = CPTP_TOL);

/// Weight of the identity conjugation.
double identity_component(const PauliChannel &c);

/// Pauli twirl of a general map given by its weight matrix in the Pauli-pair basis:
/// keeps the diagonal.
PauliChannel twirl_diagonal(size_t num_qubits, const Matrix &omega);

/// Dense 2^n x 2^n matrix of a Pauli string.
CMatrix pauli_matrix(const PauliString &p);

/// sum_i coeffs[i] P_i H P_i on an explicit matrix. Limited to n <= 3.
CMatrix apply_dense(const PauliChannel &c, const CMatrix &h);

/// Same as apply_dense without the qubit cap. Cost O(4^n 4^n).
CMatrix apply_pauli_mixture(std::span<const double> coeffs, size_t num_qubits, const CMatrix &h);

/// a (x) b with a on the leading qubits.
PauliChannel tensor(const PauliChannel &a, const PauliChannel &b);

/// Random model over all 4^n - 1 non-identity generators whose rates are drawn
/// uniformly from the simplex (flat Dirichlet) and scaled to sum to total_rate.
LindbladModel random_pauli_lindblad(size_t num_qubits, double total_rate, uint64_t seed);

}  // namespace pecsim

#endif
