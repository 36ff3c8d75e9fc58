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

#include "dsqc/protocol1.hpp"

#include <stdexcept>

namespace dsqc {

TwoQubitState encode_bit_p1(int m, int r) {
    if (m != 0 && m != 1) {
        throw std::invalid_argument("encode_bit_p1: bit must be 0 or 1");
    }
    return apply_hadamard(prepare(m, m), r);
}

MeasurementRecordP1 bob_measure_p1(const TwoQubitState& s, int b, RandomSource& rng) {
    if (b != 0 && b != 1) {
        throw std::invalid_argument("bob_measure_p1: basis flag must be 0 or 1");
    }
    TwoQubitState state = s;
    if (b == 1) {
        state = apply_hadamard(apply_hadamard(state, 1), 2);
    }
    const JointOutcome outcome = measure_both(state, rng);
    return MeasurementRecordP1{static_cast<std::uint8_t>(b),
                               static_cast<std::uint8_t>(outcome.first),
                               static_cast<std::uint8_t>(outcome.second)};
}

SiftResultP1 sift_p1(const std::vector<MeasurementRecordP1>& records) {
    SiftResultP1 result;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].outcome1 == records[i].outcome2) {
            result.self_decoded.emplace_back(i, records[i].outcome1);
        } else {
            result.disagree_indices.push_back(i);
        }
    }
    return result;
}

int decode_disclosed_p1(const MeasurementRecordP1& rec, int r) {
    if (r != 1 && r != 2) {
        throw std::invalid_argument("decode_disclosed_p1: qubit index must be 1 or 2");
    }
    const int informative = rec.hadamard_applied ? r : 3 - r;
    return informative == 1 ? rec.outcome1 : rec.outcome2;
}

}  // namespace dsqc
