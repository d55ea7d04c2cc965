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

#ifndef PECSIM_ERRORS_H
#define PECSIM_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <cstdio>
#include <string>

namespace pecsim {

inline std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

/// A numerical failure (singular or non-invertible input) as opposed to a malformed argument.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Pauli channel has an eigenvalue too close to zero to invert.
struct NotInvertible : NumericalError {
    NotInvertible(size_t index, double magnitude)
        : NumericalError("NotInvertible: |eigenvalue[" + std::to_string(index) + "]| = " +
                         short_real(magnitude) + " is below the inversion tolerance"),
          index(index),
          magnitude(magnitude) {
    }
    size_t index;
    double magnitude;
};

/// Gaussian elimination hit a pivot below tolerance.
struct SingularMatrix : NumericalError {
    explicit SingularMatrix(size_t step)
        : NumericalError("matrix is singular (pivot below tolerance at elimination step " +
                         std::to_string(step) + ")"),
          step(step) {
    }
    size_t step;
};

/// The implementability target is not in the affine hull (or span) of the free set.
struct TargetOutsideSpan : std::invalid_argument {
    explicit TargetOutsideSpan(double residual)
        : std::invalid_argument("target lies outside the span of the free set (residual " +
                                short_real(residual) + ")"),
          residual(residual) {
    }
    double residual;
};

}  // namespace pecsim

#endif
