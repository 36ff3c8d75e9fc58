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

#include "dsqc/protocol2.hpp"

#include <stdexcept>

namespace dsqc {

TwoQubitState encode_bit_p2(int m, int a) {
    if ((m != 0 && m != 1) || (a != 0 && a != 1)) {
        throw std::invalid_argument("encode_bit_p2: bit and control must be 0 or 1");
    }
    TwoQubitState s;
    if (a == 0) {
        if (m == 1) {
            // (|-0> - |+1>)/sqrt(2)
            s.amps = {0.5, -0.5, -0.5, -0.5};
        } else {
            // (|+0> - |-1>)/sqrt(2)
            s.amps = {0.5, -0.5, 0.5, 0.5};
        }
    } else {
        if (m == 1) {
            // |-->
            s.amps = {0.5, -0.5, -0.5, 0.5};
        } else {
            // |+->
            s.amps = {0.5, -0.5, 0.5, -0.5};
        }
    }
    return s;
}

TwoQubitState bob_premeasure_p2(const TwoQubitState& s, int b) {
    if (b != 0 && b != 1) {
        throw std::invalid_argument("bob_premeasure_p2: control must be 0 or 1");
    }
    TwoQubitState state = s;
    if (b == 1) {
        state = apply_cz(state);
    }
    return apply_hadamard(state, 1);
}

MeasurementRecordP2 bob_circuit_p2(const TwoQubitState& s, int b, RandomSource& rng) {
    const JointOutcome outcome = measure_both(bob_premeasure_p2(s, b), rng);
    return MeasurementRecordP2{static_cast<std::uint8_t>(b),
                               static_cast<std::uint8_t>(outcome.first),
                               static_cast<std::uint8_t>(outcome.second)};
}

int decode_p2(const MeasurementRecordP2& rec, int a) {
    if (a != 0 && a != 1) {
        throw std::invalid_argument("decode_p2: control must be 0 or 1");
    }
    if (a == rec.bob_cz) {
        return rec.outcome1 ^ rec.outcome2;
    }
    return rec.outcome1;
}

}  // namespace dsqc
