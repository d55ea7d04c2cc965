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

#ifndef PECSIM_PARALLEL_H
#define PECSIM_PARALLEL_H

#include <cmath>
#include <cstddef>
#include <functional>

namespace pecsim {

/// Worker count: PEC_SIM_THREADS if set and positive, otherwise hardware concurrency.
size_t thread_count();

/// Calls fn(k) for k in [0, count) across thread_count() workers. Each index must write
/// only its own output slot; the result is then independent of scheduling.
void parallel_for(size_t count, const std::function<void(size_t)> &fn);

/// Neumaier compensated sum.
class CompensatedSum {
   public:
    void add(double x) {
        double t = sum_ + x;
        comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    double value() const {
        return sum_ + comp_;
    }

   private:
    double sum_ = 0;
    double comp_ = 0;
};

}  // namespace pecsim

#endif
