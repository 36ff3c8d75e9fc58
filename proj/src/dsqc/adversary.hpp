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

#ifndef DSQC_ADVERSARY_HPP
#define DSQC_ADVERSARY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dsqc/classical.hpp"
#include "dsqc/protocol1.hpp"
#include "dsqc/protocol2.hpp"
#include "dsqc/qsim.hpp"

namespace dsqc {

enum class AttackKind {
    None,
    InterceptResendP1,
    PhotonNumberSplitP1,
    InterceptResendP2,
    FirstQubitP2,
};

struct AttackStrategy {
    AttackKind kind = AttackKind::None;
    double epsilon = 0.0;                 // per-pair interception probability
    double duplication_probability = 1.0; // photon-number-splitting only
};

/// Evan's belief about one logical bit after finalize. Estimates carry a
/// certainty flag: certain values are never wrong, while the first-qubit
/// attack also commits to coin-flip guesses on entangled pairs (those are
/// marked uncertain and are right half the time).
struct EvanEstimate {
    int value = -1;  // -1 = unknown
    bool certain = false;

    bool known() const { return value >= 0; }
};

/// Per-pair raw material Evan collects while the packet is in flight.
struct EvanObservation {
    bool intercepted = false;
    std::int8_t basis = -1;     // his basis / controlled-Z choice, when he measured
    std::int8_t outcome1 = -1;
    std::int8_t outcome2 = -1;
    std::int8_t sign = 0;       // first-qubit attack: +1 or -1
    bool has_copy = false;      // photon-number splitting
    TwoQubitState copy;
};

/// Channel interposition for one packet. relay() is called once per pair in
/// transmission order; the classical-channel taps feed Alice's public
/// disclosures in; finalize() turns observations into per-bit estimates.
class Eavesdropper {
  public:
    Eavesdropper(const AttackStrategy& strategy, RandomSource& rng);

    /// Processes one in-flight pair and returns what Bob will receive.
    TwoQubitState relay(const TwoQubitState& s);

    /// Alice's Hadamard choices for Bob's disagreeing pairs (protocol 1).
    void hear_basis_disclosure(const std::vector<std::pair<std::size_t, int>>& choices);

    /// Alice's full controlled-Z bit list, end of packet (protocol 2).
    void hear_cz_disclosure(const Bits& alice_cz_bits);

    /// Applies the strategy's estimation rule to everything heard so far.
    void finalize();

    const std::vector<EvanEstimate>& estimates() const { return estimates_; }
    const std::vector<EvanObservation>& observations() const { return observations_; }
    std::size_t pair_count() const { return observations_.size(); }
    std::size_t intercepted_count() const;
    bool finalized() const { return finalized_; }

  private:
    TwoQubitState relay_intercept_resend_p1(const TwoQubitState& s, EvanObservation& obs);
    TwoQubitState relay_photon_split(const TwoQubitState& s, EvanObservation& obs);
    TwoQubitState relay_intercept_resend_p2(const TwoQubitState& s, EvanObservation& obs);
    TwoQubitState relay_first_qubit(const TwoQubitState& s, EvanObservation& obs);

    AttackStrategy strategy_;
    RandomSource& rng_;
    std::vector<EvanObservation> observations_;
    std::vector<EvanEstimate> estimates_;
    std::vector<std::pair<std::size_t, int>> heard_basis_choices_;
    Bits heard_cz_bits_;
    bool finalized_ = false;
};

}  // namespace dsqc

#endif
