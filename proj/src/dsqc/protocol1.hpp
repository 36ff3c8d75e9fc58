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

#ifndef DSQC_PROTOCOL1_HPP
#define DSQC_PROTOCOL1_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsqc/qsim.hpp"

namespace dsqc {

/// Alice's per-pair choices in the unentangled protocol: the logical bit
/// and which qubit got the Hadamard.
struct EncodingRecordP1 {
    std::uint8_t bit = 0;
    int hadamard_qubit = 1;  // 1 or 2
};

/// Bob's per-pair record: whether he applied Hadamards to both qubits
/// before measuring, and the two outcomes.
struct MeasurementRecordP1 {
    std::uint8_t hadamard_applied = 0;  // 0 = computational, 1 = H on both
    std::uint8_t outcome1 = 0;
    std::uint8_t outcome2 = 0;
};

/// |mm> with a Hadamard on qubit r. '1' becomes |-1> or |1->, '0' becomes
/// |+0> or |0+>; all four are product states.
TwoQubitState encode_bit_p1(int m, int r);

/// Bob's decoder circuit: Hadamard on both qubits iff b, then measure both
/// in the computational basis.
MeasurementRecordP1 bob_measure_p1(const TwoQubitState& s, int b, RandomSource& rng);

struct SiftResultP1 {
    /// Pairs whose outcomes agree decode on the spot to the common value.
    std::vector<std::pair<std::size_t, std::uint8_t>> self_decoded;
    /// Pairs queued for Alice's basis disclosure.
    std::vector<std::size_t> disagree_indices;
};

SiftResultP1 sift_p1(const std::vector<MeasurementRecordP1>& records);

/// Decode a disagreeing pair once Alice's Hadamard choice r is public.
/// Without Hadamards on either side (b = 0) the qubit other than r carries
/// the bit; with Hadamards on both sides (b = 1) qubit r does, since HH = 1.
int decode_disclosed_p1(const MeasurementRecordP1& rec, int r);

}  // namespace dsqc

#endif
