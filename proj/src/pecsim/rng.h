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

#ifndef PECSIM_RNG_H
#define PECSIM_RNG_H

#include <cmath>
#include <cstdint>
#include <random>

namespace pecsim {

/// SplitMix64 finalizer. Used to derive independent seeds and counter-based streams.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for substream `stream` of `master`.
constexpr uint64_t derive_seed(uint64_t master, uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

/// Uniform double in [0, 1) from 53 random bits.
constexpr double bits_to_unit(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Stateless generator: draw k of stream s is a pure function of (seed, s, k).
class CounterRng {
   public:
    constexpr CounterRng(uint64_t seed, uint64_t stream) : key_(derive_seed(seed, stream)) {
    }
    constexpr uint64_t bits(uint64_t counter) const {
        return splitmix64(key_ ^ splitmix64(counter));
    }
    constexpr double uniform(uint64_t counter) const {
        return bits_to_unit(bits(counter));
    }

   private:
    uint64_t key_;
};

/// Sequential generator with portable uniform and exponential draws.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }
    double uniform() {
        return bits_to_unit(engine_());
    }
    double exponential() {
        return -std::log1p(-uniform());
    }
    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = 1 - uniform();
        double u2 = uniform();
        return std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
    }
    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace pecsim

#endif
