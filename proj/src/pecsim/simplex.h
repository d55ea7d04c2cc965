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

#ifndef PECSIM_SIMPLEX_H
#define PECSIM_SIMPLEX_H

#include <cstddef>
#include <span>
#include <vector>

#include "pecsim/dense.h"

namespace pecsim {

struct SimplexResult {
    bool feasible = false;
    double objective = 0;
    std::vector<double> x;
    size_t iterations = 0;
};

/// minimize c.x subject to A x = b, x >= 0, with c >= 0 so the problem is never unbounded.
///
/// Two-phase primal simplex on a dense tableau. Entering and leaving variables follow
/// Bland's rule, which cannot cycle. Redundant equality rows are dropped after phase 1.
SimplexResult simplex_minimize(
    const Matrix &a, std::span<const double> b, std::span<const double> c, double pivot_tol = 1e-9);

}  // namespace pecsim

#endif
