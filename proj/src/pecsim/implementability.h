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

#ifndef PECSIM_IMPLEMENTABILITY_H
#define PECSIM_IMPLEMENTABILITY_H

#include <cstddef>
#include <span>
#include <vector>

#include "pecsim/channel.h"
#include "pecsim/pauli.h"

namespace pecsim {

/// Quasiprobabilities with magnitude at or below this are dropped from sampling programs.
constexpr double ZERO_COEFF_TOL = 1e-12;

/// Finite list of extreme points of a convex free set in R^dim.
///
/// Every point satisfies <functional, point> = 1. The functional defaults to all ones
/// (component sum), which is the trace functional for Pauli-channel coefficient vectors.
class FreeSet {
   public:
    FreeSet(size_t dim, std::vector<std::vector<double>> points, std::vector<double> functional = {});

    /// The 4^n Pauli conjugation maps as unit vectors.
    static FreeSet pauli_channels(size_t num_qubits);
    /// Unit basis of R^dim.
    static FreeSet unit_basis(size_t dim);

    size_t dim() const {
        return dim_;
    }
    size_t size() const {
        return points_.size();
    }
    const std::vector<std::vector<double>> &points() const {
        return points_;
    }
    const std::vector<double> &functional() const {
        return functional_;
    }
    /// Copy without point `k`.
    FreeSet without(size_t k) const;

   private:
    size_t dim_;
    std::vector<std::vector<double>> points_;
    std::vector<double> functional_;
};

struct LpOptions {
    /// Require the target in the affine hull (sum x = 1). When false only the linear span
    /// is required and p is the gauge of conv(F u -F).
    bool affine = true;
    double span_tol = 1e-7;
    double pivot_tol = 1e-9;
};

struct LpReport {
    double p = 0;
    std::vector<double> x;
    size_t iterations = 0;
};

/// min sum |x_l| subject to sum_l x_l F_l = target, solved as an LP over (x+, x-).
///
/// Throws TargetOutsideSpan when the least-squares residual of the target against the
/// affine hull (or span) exceeds span_tol.
LpReport implementability_lp(const FreeSet &free_set, std::span<const double> target, const LpOptions &opts = {});

/// Least-squares residual of `target` against the affine hull (or span) of the points.
double span_residual(const FreeSet &free_set, std::span<const double> target, bool affine);

struct TwoPointDecomposition {
    double n_plus = 0;
    std::vector<double> point_plus;
    double n_minus = 0;
    /// Empty when n_minus is zero.
    std::vector<double> point_minus;
};

/// Groups an optimal decomposition into target = n_plus N+ - n_minus N- with N+- in conv(F).
TwoPointDecomposition two_point_decomposition(const FreeSet &free_set, std::span<const double> x);

/// R = (p - 1) / 2.
double robustness(double p);

/// Sum_i |coeffs_i|: the implementability of a Pauli-diagonal map over CPTP maps.
double p_pauli(const PauliChannel &c);

/// The coefficient vector, for feeding a channel to implementability_lp.
std::vector<double> pauli_channel_as_vector(const PauliChannel &c);

/// Signed sampling program simulating sum_i x_i G_i with the gates G_i.
class QuasiProgram {
   public:
    struct Entry {
        size_t index;
        double quasi;
    };

    QuasiProgram(size_t num_qubits, std::vector<Entry> entries);

    /// Entries from a dense quasiprobability vector of length 4^n, dropping near-zeros.
    static QuasiProgram from_dense(size_t num_qubits, std::span<const double> quasi);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    /// Z = sum |x_i|.
    double cost() const {
        return cost_;
    }
    /// |x_i| / Z.
    std::vector<double> weights() const;
    /// sgn(x_i) as +-1.
    std::vector<int> signs() const;
    /// Quasiprobabilities as a dense vector of length 4^n.
    std::vector<double> dense() const;

   private:
    size_t num_qubits_;
    std::vector<Entry> entries_;
    double cost_;
};

/// Program for a Pauli-diagonal map decomposed over ideal Pauli gates.
QuasiProgram quasi_program(const PauliChannel &c);

}  // namespace pecsim

#endif
