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

#ifndef DSQC_PROTOCOL2_HPP
#define DSQC_PROTOCOL2_HPP

#include <cstdint>

#include "dsqc/qsim.hpp"

namespace dsqc {

/// Alice's per-pair choices in the entangled protocol. a = 0 sends an
/// entangled pair, a = 1 a product pair.
struct EncodingRecordP2 {
    std::uint8_t bit = 0;
    std::uint8_t alice_cz = 0;  // the random control bit a
};

/// Bob's per-pair record: his controlled-Z choice and both outcomes.
struct MeasurementRecordP2 {
    std::uint8_t bob_cz = 0;
    std::uint8_t outcome1 = 0;
    std::uint8_t outcome2 = 0;
};

/// The four encoding states, prepared directly:
///   a = 0: '1' -> (|-0> - |+1>)/sqrt(2),  '0' -> (|+0> - |-1>)/sqrt(2)
///   a = 1: '1' -> |-->,                   '0' -> |+->
/// The a = 0 states have concurrence 1, the a = 1 states concurrence 0.
TwoQubitState encode_bit_p2(int m, int a);

/// Bob's circuit up to the detectors: controlled-Z iff b, then Hadamard on
/// qubit 1. Split out so tests can inspect the pre-measurement state.
TwoQubitState bob_premeasure_p2(const TwoQubitState& s, int b);

/// Full decoder circuit: bob_premeasure_p2 followed by a computational
/// measurement of both qubits.
MeasurementRecordP2 bob_circuit_p2(const TwoQubitState& s, int b, RandomSource& rng);

/// The three-case decode rule, applicable once Alice's a is public. When
/// the two controlled-Z choices match the outcome parity carries the bit;
/// otherwise the first qubit does. Deterministic for every pair.
int decode_p2(const MeasurementRecordP2& rec, int a);

}  // namespace dsqc

#endif
