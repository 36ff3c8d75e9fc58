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

#ifndef DSQC_SELFTEST_HPP
#define DSQC_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

#include "dsqc/protocol1.hpp"
#include "dsqc/protocol2.hpp"

namespace dsqc {

/// Walks every measurement branch of every (bit, Hadamard choice, basis)
/// protocol-1 circuit and counts branches the decoder gets wrong. Agreeing
/// branches are expected to self-decode; the rest go through the supplied
/// disclosure decoder. Zero is the only acceptable return for the real
/// decoder; the parameter exists so tests can prove a broken decoder fails.
std::size_t p1_decode_failures(
    const std::function<int(const MeasurementRecordP1&, int)>& decoder);

/// Same walk over the eight (bit, alice cz, bob cz) protocol-2 circuits.
std::size_t p2_decode_failures(
    const std::function<int(const MeasurementRecordP2&, int)>& decoder);

struct SelftestCheck {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct SelftestReport {
    bool pass = false;
    std::vector<SelftestCheck> checks;

    /// Fixed-width table, one line per check plus a verdict line.
    std::string to_text() const;
};

/// The release gate: exhaustive decode oracles for both protocols, the
/// classical pipeline round trip, and the four epsilon = 1 attack
/// checkpoints. Runs on a fixed internal seed so the report text is
/// identical across runs.
SelftestReport run_selftest();

}  // namespace dsqc

#endif
