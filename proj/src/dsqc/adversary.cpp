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

#include "dsqc/adversary.hpp"

#include <stdexcept>

namespace dsqc {

Eavesdropper::Eavesdropper(const AttackStrategy& strategy, RandomSource& rng)
    : strategy_(strategy), rng_(rng) {
    if (strategy.epsilon < 0.0 || strategy.epsilon > 1.0) {
        throw std::invalid_argument("attack epsilon must lie in [0,1]");
    }
    if (strategy.duplication_probability < 0.0 || strategy.duplication_probability > 1.0) {
        throw std::invalid_argument("duplication probability must lie in [0,1]");
    }
}

std::size_t Eavesdropper::intercepted_count() const {
    std::size_t n = 0;
    for (const EvanObservation& obs : observations_) {
        n += obs.intercepted ? 1u : 0u;
    }
    return n;
}

TwoQubitState Eavesdropper::relay(const TwoQubitState& s) {
    observations_.emplace_back();
    EvanObservation& obs = observations_.back();
    if (strategy_.kind == AttackKind::None || !rng_.bernoulli(strategy_.epsilon)) {
        return s;
    }
    obs.intercepted = true;
    switch (strategy_.kind) {
        case AttackKind::InterceptResendP1:
            return relay_intercept_resend_p1(s, obs);
        case AttackKind::PhotonNumberSplitP1:
            return relay_photon_split(s, obs);
        case AttackKind::InterceptResendP2:
            return relay_intercept_resend_p2(s, obs);
        case AttackKind::FirstQubitP2:
            return relay_first_qubit(s, obs);
        case AttackKind::None:
            break;
    }
    return s;
}

TwoQubitState Eavesdropper::relay_intercept_resend_p1(const TwoQubitState& s,
                                                      EvanObservation& obs) {
    // Measure like Bob, then re-encode like Alice: the decoded bit when the
    // outcomes agree, a coin-flip guess when they do not. Either way the
    // forwarded pair is a fresh, properly formed encoding, so Bob sees clean
    // statistics on the bit Evan chose.
    const int basis = rng_.next_bit();
    const MeasurementRecordP1 rec = bob_measure_p1(s, basis, rng_);
    obs.basis = static_cast<std::int8_t>(basis);
    obs.outcome1 = static_cast<std::int8_t>(rec.outcome1);
    obs.outcome2 = static_cast<std::int8_t>(rec.outcome2);
    const int resent_bit =
        rec.outcome1 == rec.outcome2 ? static_cast<int>(rec.outcome1) : rng_.next_bit();
    return encode_bit_p1(resent_bit, rng_.next_bit() + 1);
}

TwoQubitState Eavesdropper::relay_photon_split(const TwoQubitState& s, EvanObservation& obs) {
    // Splitting a multi-photon pulse leaves the forwarded pair untouched;
    // the stored duplicate is measured later, after the disclosures.
    if (rng_.bernoulli(strategy_.duplication_probability)) {
        obs.has_copy = true;
        obs.copy = s;
    }
    return s;
}

TwoQubitState Eavesdropper::relay_intercept_resend_p2(const TwoQubitState& s,
                                                      EvanObservation& obs) {
    const int bob_cz = rng_.next_bit();
    const MeasurementRecordP2 rec = bob_circuit_p2(s, bob_cz, rng_);
    obs.basis = static_cast<std::int8_t>(bob_cz);
    obs.outcome1 = static_cast<std::int8_t>(rec.outcome1);
    obs.outcome2 = static_cast<std::int8_t>(rec.outcome2);
    // The pair must be resent before Alice discloses her control bits, so
    // the re-encoded message and control bits are guesses.
    return encode_bit_p2(rng_.next_bit(), rng_.next_bit());
}

TwoQubitState Eavesdropper::relay_first_qubit(const TwoQubitState& s, EvanObservation& obs) {
    const DiagonalOutcome outcome = measure_first_diagonal(s, rng_);
    obs.sign = static_cast<std::int8_t>(outcome.sign);
    return outcome.collapsed;
}

void Eavesdropper::hear_basis_disclosure(
    const std::vector<std::pair<std::size_t, int>>& choices) {
    heard_basis_choices_.insert(heard_basis_choices_.end(), choices.begin(), choices.end());
}

void Eavesdropper::hear_cz_disclosure(const Bits& alice_cz_bits) {
    heard_cz_bits_ = alice_cz_bits;
}

void Eavesdropper::finalize() {
    estimates_.assign(observations_.size(), EvanEstimate{});
    finalized_ = true;

    switch (strategy_.kind) {
        case AttackKind::None:
            return;

        case AttackKind::InterceptResendP1: {
            for (std::size_t i = 0; i < observations_.size(); ++i) {
                const EvanObservation& obs = observations_[i];
                if (obs.intercepted && obs.outcome1 == obs.outcome2) {
                    estimates_[i] = EvanEstimate{obs.outcome1, true};
                }
            }
            for (const auto& [index, r] : heard_basis_choices_) {
                const EvanObservation& obs = observations_.at(index);
                if (!obs.intercepted || estimates_[index].known()) {
                    continue;
                }
                const MeasurementRecordP1 rec{static_cast<std::uint8_t>(obs.basis),
                                              static_cast<std::uint8_t>(obs.outcome1),
                                              static_cast<std::uint8_t>(obs.outcome2)};
                estimates_[index] = EvanEstimate{decode_disclosed_p1(rec, r), true};
            }
            return;
        }

        case AttackKind::PhotonNumberSplitP1: {
            std::vector<int> disclosed(observations_.size(), 0);
            for (const auto& [index, r] : heard_basis_choices_) {
                disclosed.at(index) = r;
            }
            for (std::size_t i = 0; i < observations_.size(); ++i) {
                const EvanObservation& obs = observations_[i];
                if (!obs.has_copy) {
                    continue;
                }
                if (disclosed[i] != 0) {
                    // Alice's r names the Hadamard qubit; the other qubit of
                    // the stored copy still carries the bit in the
                    // computational basis.
                    const JointOutcome outcome = measure_both(obs.copy, rng_);
                    const int bit = disclosed[i] == 1 ? outcome.second : outcome.first;
                    estimates_[i] = EvanEstimate{bit, true};
                } else {
                    // No disclosure for this pair: do exactly what Bob did
                    // and keep the bit only when the outcomes agree.
                    const MeasurementRecordP1 rec =
                        bob_measure_p1(obs.copy, rng_.next_bit(), rng_);
                    if (rec.outcome1 == rec.outcome2) {
                        estimates_[i] = EvanEstimate{rec.outcome1, true};
                    }
                }
            }
            return;
        }

        case AttackKind::InterceptResendP2: {
            if (heard_cz_bits_.size() < observations_.size()) {
                throw std::logic_error("finalize: controlled-Z disclosure missing");
            }
            for (std::size_t i = 0; i < observations_.size(); ++i) {
                const EvanObservation& obs = observations_[i];
                if (!obs.intercepted) {
                    continue;
                }
                const MeasurementRecordP2 rec{static_cast<std::uint8_t>(obs.basis),
                                              static_cast<std::uint8_t>(obs.outcome1),
                                              static_cast<std::uint8_t>(obs.outcome2)};
                estimates_[i] = EvanEstimate{decode_p2(rec, heard_cz_bits_[i]), true};
            }
            return;
        }

        case AttackKind::FirstQubitP2: {
            if (heard_cz_bits_.size() < observations_.size()) {
                throw std::logic_error("finalize: controlled-Z disclosure missing");
            }
            for (std::size_t i = 0; i < observations_.size(); ++i) {
                const EvanObservation& obs = observations_[i];
                if (!obs.intercepted) {
                    continue;
                }
                // '-' reads as 1, '+' as 0. Certain on product pairs, where
                // the first qubit is a |+/-> eigenstate; a fifty-fifty guess
                // on entangled pairs.
                const int bit = obs.sign < 0 ? 1 : 0;
                estimates_[i] = EvanEstimate{bit, heard_cz_bits_[i] == 1};
            }
            return;
        }
    }
}

}  // namespace dsqc
