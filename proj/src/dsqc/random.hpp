// Copyright 2026 the dsqcsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSQC_RANDOM_HPP
#define DSQC_RANDOM_HPP

#include <cstdint>
#include <random>

namespace dsqc {

/// Deterministic random stream: identical seed, identical draw sequence.
///
/// All randomness in the library flows through explicit RandomSource
/// instances; there is no global RNG. mt19937_64 is fully specified by the
/// standard, so sequences are reproducible across platforms. The uniform
/// draws below avoid std distributions, whose output is
/// implementation-defined.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// One fair bit.
    int next_bit() { return static_cast<int>(engine_() >> 63); }

    /// Uniform double in [0, 1), 53 bits of precision.
    double next_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_real() < p; }

    /// Uniform integer in [0, n). Rejection sampling, so no modulo bias.
    std::uint64_t below(std::uint64_t n);

  private:
    std::mt19937_64 engine_;
};

/// Mixes (base, salt) into an independent stream seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace dsqc

#endif
