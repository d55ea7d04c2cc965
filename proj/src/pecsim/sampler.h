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

#ifndef PECSIM_SAMPLER_H
#define PECSIM_SAMPLER_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pecsim/channel.h"
#include "pecsim/implementability.h"
#include "pecsim/noise_map.h"
#include "pecsim/pauli.h"

namespace pecsim {

struct PecEstimate {
    PauliString observable;
    double mean = 0;
    double std_error = 0;
    uint64_t shots = 0;
    double cost = 0;
    uint64_t seed = 0;
};

/// Signed Monte Carlo estimate of a mitigated Pauli expectation.
///
/// Shot s draws a program entry i with probability |x_i|/Z, then a +-1 outcome whose mean
/// is chi_k(G_i o error) * ideal[k] for observable k, where G_i is the realized gate (row i
/// of `realized`, or the ideal P_i when absent). The estimate is Z times the mean of
/// sgn(x_i) * outcome. Every shot reads its own counter-based stream, so the result does not
/// depend on how shots are split across threads.
PecEstimate run_pec(const QuasiProgram &program,
                    const std::optional<NoiseMap> &realized,
                    const PauliChannel &error,
                    std::span<const double> ideal_expectations,
                    const PauliString &observable,
                    uint64_t shots,
                    uint64_t seed);

/// Z^2 / N.
double variance_prediction(double cost, uint64_t shots);

/// Exact expectation the estimator targets: sum_i x_i chi_k(G_i o error) ideal[k].
double mitigated_expectation(const QuasiProgram &program,
                             const std::optional<NoiseMap> &realized,
                             const PauliChannel &error,
                             std::span<const double> ideal_expectations,
                             const PauliString &observable);

}  // namespace pecsim

#endif
