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

#ifndef PECSIM_MEASURES_H
#define PECSIM_MEASURES_H

#include <cstdint>
#include <span>
#include <vector>

#include "pecsim/channel.h"
#include "pecsim/dense.h"
#include "pecsim/rng.h"

namespace pecsim {

/// Sum of absolute eigenvalues of a Hermitian operator.
double trace_norm(const CMatrix &h);

/// Transposes the tensor factors of the listed qubits (qubit 0 is the most significant bit).
CMatrix partial_transpose(const CMatrix &rho, std::span<const size_t> subsystem_b);

/// ln || rho^{T_B} ||_1. Natural logarithm.
double log_negativity(const CMatrix &rho, std::span<const size_t> subsystem_b);

/// Tr(rho^2).
double purity(const CMatrix &rho);

struct PurityRatio {
    /// ||c(sigma)||_F / ||sigma||_F.
    double lhs = 0;
    /// p_Q(c).
    double rhs = 0;
};

/// Frobenius-norm growth of sigma under c against its implementability. For Pauli
/// mixtures (unitary extreme points) lhs <= rhs.
PurityRatio purity_ratio_bound(const PauliChannel &c, const CMatrix &sigma);

/// max over sampled pure states phi on system (x) ancilla of ||(c (x) id)(phi)||_1.
///
/// Always a lower bound on the diamond norm and so on p_Q(c). When the maximally
/// entangled input is included the result equals p_Q(c) for Pauli-diagonal maps.
double diamond_lower_bound(const PauliChannel &c, size_t samples, uint64_t seed, bool include_max_entangled = true);

/// |Phi+><Phi+| on 2n qubits, system qubits leading.
CMatrix max_entangled_state(size_t num_qubits);

/// Haar-random pure state |psi><psi| on n qubits.
CMatrix random_pure_state(size_t num_qubits, Rng &rng);

/// Random density matrix G G^dagger / Tr with complex Gaussian G.
CMatrix random_density_matrix(size_t num_qubits, Rng &rng);

/// Random Hermitian matrix with Gaussian entries.
CMatrix random_hermitian(size_t num_qubits, Rng &rng);

}  // namespace pecsim

#endif
