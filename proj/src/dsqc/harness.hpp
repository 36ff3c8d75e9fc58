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

#ifndef DSQC_HARNESS_HPP
#define DSQC_HARNESS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dsqc/adversary.hpp"
#include "dsqc/classical.hpp"
#include "dsqc/random.hpp"

namespace dsqc {

// ---------------------------------------------------------------------------
// The public classical channel. Everything here is visible to Evan.

enum class Party { Alice, Bob };

namespace msg {

/// Indices of the pairs where Bob's two outcomes agree (protocol 1).
struct AgreeIndices {
    std::vector<std::size_t> indices;
};

/// Alice's Hadamard choices for the disagreeing pairs (protocol 1).
struct BasisDisclosure {
    std::vector<std::pair<std::size_t, int>> choices;
};

/// Alice's full controlled-Z bit list, sent after the packet's last pair
/// (protocol 2).
struct RngDisclosure {
    Bits bits;
};

/// Positions and values of the redundancy bits inside T.
struct RedundancyReveal {
    std::vector<std::size_t> positions;
    Bits values;
};

/// Bob's values at the revealed positions.
struct RedundancyReport {
    Bits values;
};

struct Abort {
    double mismatch_fraction = 0.0;
};

struct KeyPhaseStart {};

struct Done {
    bool hash_ok = false;
};

}  // namespace msg

using MessagePayload =
    std::variant<msg::AgreeIndices, msg::BasisDisclosure, msg::RngDisclosure,
                 msg::RedundancyReveal, msg::RedundancyReport, msg::Abort, msg::KeyPhaseStart,
                 msg::Done>;

struct ClassicalMessage {
    std::size_t seq = 0;
    Party sender = Party::Alice;
    MessagePayload payload;
};

/// Line-delimited JSON, one message per line with fields
/// {seq, sender, type, payload}. Byte-stable for a fixed transcript.
std::string transcript_to_json_lines(const std::vector<ClassicalMessage>& transcript);

// ---------------------------------------------------------------------------
// Sessions.

struct SessionSeeds {
    std::uint64_t alice = 1;
    std::uint64_t bob = 2;
    std::uint64_t evan = 3;
    std::uint64_t channel = 4;

    static SessionSeeds from_master(std::uint64_t master);
};

struct SessionConfig {
    int protocol = 1;                 // 1 = unentangled, 2 = entangled
    std::size_t message_bits = 10000; // used when message is empty
    Bits message;                     // explicit payload (optional)
    std::size_t redundancy_k = 0;     // 0 = default_redundancy_count rule
    AttackStrategy attack;
    double noise_p = 0.0;             // per-qubit depolarizing probability
    AbortPolicy abort_policy;
    SessionSeeds seeds;
    bool abort_enabled = true;        // sweeps run with the abort disabled
};

enum class DeliveryStatus { Delivered, Aborted, HashMismatch };

struct SessionResult {
    DeliveryStatus status = DeliveryStatus::Delivered;
    Bits message;                        // Bob's recovered M when delivered
    double qber = 0.0;                   // Bob's decoded T vs Alice's T
    double evan_known_fraction = 0.0;    // I_AE over the message-phase bits
    bool check_flagged = false;          // redundancy comparison verdict
    double check_mismatch_fraction = 0.0;
    std::size_t message_pair_count = 0;
    std::size_t key_pair_count = 0;
    std::size_t evan_key_observation_count = 0;
    std::vector<ClassicalMessage> transcript;
};

/// One full packet exchange: preprocessing, quantum transmission of T with
/// Evan in-path, sifting and disclosure, the public redundancy comparison,
/// then (unless aborted) the key phase, decryption and hash verification.
/// Abort and HashMismatch are results, not errors.
SessionResult run_session(const SessionConfig& cfg);

// ---------------------------------------------------------------------------
// Measurement helpers.

/// Hamming distance over length.
double compute_qber(const Bits& sent, const Bits& decoded);

/// Fraction of positions where Evan committed to a value and it matches.
double compute_iae(const Bits& alice_bits, const std::vector<EvanEstimate>& estimates);

/// Independently per qubit, with probability p, a uniformly random Pauli.
TwoQubitState apply_channel_noise(const TwoQubitState& s, double p, RandomSource& rng);

/// Expected honest-channel QBER under depolarizing noise p; the empirical
/// calibration behind the default abort policy.
double expected_qber_under_noise(int protocol, double noise_p);

/// Zero-threshold policy on a clean channel, calibrated 3-sigma band
/// otherwise.
AbortPolicy default_abort_policy(int protocol, double noise_p);

// ---------------------------------------------------------------------------
// Monte Carlo sweeps (the Fig.-3 harness).

struct SweepRow {
    double epsilon = 0.0;
    double qber = 0.0;
    double iae = 0.0;
    double detected_fraction = 0.0;
    std::uint64_t n_bits = 0;  // logical bits behind the qber/iae averages
    std::uint64_t seed = 0;    // derived seed reproducing this row
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

/// Runs `trials` sessions per grid point with the abort disabled, measuring
/// QBER and I_AE on the full transcript. Grid points fan out across worker
/// threads; rows come back in grid order regardless.
SweepResult run_sweep(const SessionConfig& base, const std::vector<double>& eps_grid,
                      std::size_t trials, std::uint64_t sweep_seed);

/// Header `epsilon,qber,iae,detected_fraction,n_bits,seed`, floats with six
/// decimal places.
std::string sweep_to_csv(const SweepResult& result);

}  // namespace dsqc

#endif
