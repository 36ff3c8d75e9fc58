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

#include "dsqc/harness.hpp"

#include <cstdio>
#include <future>
#include <stdexcept>

#include "json.hpp"

namespace dsqc {

namespace {

using ordered_json = nlohmann::ordered_json;

struct MessageJson {
    ordered_json operator()(const msg::AgreeIndices& m) const {
        return {{"type", "agree_indices"}, {"payload", {{"indices", m.indices}}}};
    }
    ordered_json operator()(const msg::BasisDisclosure& m) const {
        ordered_json choices = ordered_json::array();
        for (const auto& [index, r] : m.choices) {
            choices.push_back({index, r});
        }
        return {{"type", "basis_disclosure"}, {"payload", {{"choices", choices}}}};
    }
    ordered_json operator()(const msg::RngDisclosure& m) const {
        return {{"type", "rng_disclosure"}, {"payload", {{"bits", m.bits}}}};
    }
    ordered_json operator()(const msg::RedundancyReveal& m) const {
        return {{"type", "redundancy_reveal"},
                {"payload", {{"positions", m.positions}, {"values", m.values}}}};
    }
    ordered_json operator()(const msg::RedundancyReport& m) const {
        return {{"type", "redundancy_report"}, {"payload", {{"values", m.values}}}};
    }
    ordered_json operator()(const msg::Abort& m) const {
        return {{"type", "abort"}, {"payload", {{"mismatch_fraction", m.mismatch_fraction}}}};
    }
    ordered_json operator()(const msg::KeyPhaseStart&) const {
        return {{"type", "key_phase_start"}, {"payload", ordered_json::object()}};
    }
    ordered_json operator()(const msg::Done& m) const {
        return {{"type", "done"}, {"payload", {{"hash_ok", m.hash_ok}}}};
    }
};

void validate_config(const SessionConfig& cfg) {
    if (cfg.protocol != 1 && cfg.protocol != 2) {
        throw std::invalid_argument("protocol must be 1 or 2");
    }
    if (cfg.message.empty() && cfg.message_bits == 0) {
        throw std::invalid_argument("message_bits must be positive");
    }
    if (cfg.noise_p < 0.0 || cfg.noise_p > 1.0) {
        throw std::invalid_argument("noise probability must lie in [0,1]");
    }
    const AttackKind kind = cfg.attack.kind;
    const bool p1_attack =
        kind == AttackKind::InterceptResendP1 || kind == AttackKind::PhotonNumberSplitP1;
    const bool p2_attack =
        kind == AttackKind::InterceptResendP2 || kind == AttackKind::FirstQubitP2;
    if ((p1_attack && cfg.protocol != 1) || (p2_attack && cfg.protocol != 2)) {
        throw std::invalid_argument("attack strategy does not apply to this protocol");
    }
}

/// Per-session mutable state shared by the two quantum phases.
struct SessionDriver {
    const SessionConfig& cfg;
    RandomSource alice_rng;
    RandomSource bob_rng;
    RandomSource evan_rng;
    RandomSource channel_rng;
    std::vector<ClassicalMessage> transcript;
    std::size_t seq = 0;

    explicit SessionDriver(const SessionConfig& c)
        : cfg(c),
          alice_rng(c.seeds.alice),
          bob_rng(c.seeds.bob),
          evan_rng(c.seeds.evan),
          channel_rng(c.seeds.channel) {}

    void say(Party sender, MessagePayload payload) {
        transcript.push_back(ClassicalMessage{seq++, sender, std::move(payload)});
    }

    /// Steps 4-7: transmit one bit sequence over the quantum channel with
    /// Evan in-path, run the per-protocol classical exchange, and return
    /// Bob's decoding.
    Bits transmit(const Bits& data, Eavesdropper& evan) {
        return cfg.protocol == 1 ? transmit_p1(data, evan) : transmit_p2(data, evan);
    }

    Bits transmit_p1(const Bits& data, Eavesdropper& evan) {
        std::vector<MeasurementRecordP1> records;
        records.reserve(data.size());
        std::vector<int> hadamard_choices(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            const int r = alice_rng.next_bit() + 1;
            hadamard_choices[i] = r;
            TwoQubitState state = encode_bit_p1(data[i], r);
            state = evan.relay(state);
            state = apply_channel_noise(state, cfg.noise_p, channel_rng);
            records.push_back(bob_measure_p1(state, bob_rng.next_bit(), bob_rng));
        }

        const SiftResultP1 sifted = sift_p1(records);
        msg::AgreeIndices agree;
        agree.indices.reserve(sifted.self_decoded.size());
        for (const auto& [index, value] : sifted.self_decoded) {
            agree.indices.push_back(index);
        }
        say(Party::Bob, std::move(agree));

        msg::BasisDisclosure disclosure;
        disclosure.choices.reserve(sifted.disagree_indices.size());
        for (std::size_t index : sifted.disagree_indices) {
            disclosure.choices.emplace_back(index, hadamard_choices[index]);
        }
        evan.hear_basis_disclosure(disclosure.choices);

        Bits decoded(data.size());
        for (const auto& [index, value] : sifted.self_decoded) {
            decoded[index] = value;
        }
        for (const auto& [index, r] : disclosure.choices) {
            decoded[index] = static_cast<std::uint8_t>(decode_disclosed_p1(records[index], r));
        }
        say(Party::Alice, std::move(disclosure));
        return decoded;
    }

    Bits transmit_p2(const Bits& data, Eavesdropper& evan) {
        std::vector<MeasurementRecordP2> records;
        records.reserve(data.size());
        Bits cz_choices(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            const int a = alice_rng.next_bit();
            cz_choices[i] = static_cast<std::uint8_t>(a);
            TwoQubitState state = encode_bit_p2(data[i], a);
            state = evan.relay(state);
            state = apply_channel_noise(state, cfg.noise_p, channel_rng);
            records.push_back(bob_circuit_p2(state, bob_rng.next_bit(), bob_rng));
        }

        // The control bits go out only after the packet's last pair.
        evan.hear_cz_disclosure(cz_choices);
        Bits decoded(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            decoded[i] = static_cast<std::uint8_t>(decode_p2(records[i], cz_choices[i]));
        }
        say(Party::Alice, msg::RngDisclosure{std::move(cz_choices)});
        return decoded;
    }
};

}  // namespace

std::string transcript_to_json_lines(const std::vector<ClassicalMessage>& transcript) {
    std::string out;
    for (const ClassicalMessage& message : transcript) {
        ordered_json line{{"seq", message.seq},
                          {"sender", message.sender == Party::Alice ? "alice" : "bob"}};
        const ordered_json body = std::visit(MessageJson{}, message.payload);
        line["type"] = body["type"];
        line["payload"] = body["payload"];
        out += line.dump();
        out += '\n';
    }
    return out;
}

SessionSeeds SessionSeeds::from_master(std::uint64_t master) {
    return SessionSeeds{derive_seed(master, 1), derive_seed(master, 2), derive_seed(master, 3),
                        derive_seed(master, 4)};
}

SessionResult run_session(const SessionConfig& cfg) {
    validate_config(cfg);
    SessionDriver driver(cfg);
    SessionResult result;

    Bits message = cfg.message;
    if (message.empty()) {
        message = generate_key(cfg.message_bits, driver.alice_rng);
    }
    const PacketBundle bundle = build_packet_bundle(message, cfg.redundancy_k, driver.alice_rng);

    // Message phase: T over the quantum channel.
    Eavesdropper evan_message(cfg.attack, driver.evan_rng);
    const Bits t_bob = driver.transmit(bundle.transmitted, evan_message);
    result.message_pair_count = bundle.transmitted.size();
    result.qber = compute_qber(bundle.transmitted, t_bob);
    evan_message.finalize();
    result.evan_known_fraction = compute_iae(bundle.transmitted, evan_message.estimates());

    // Public redundancy comparison.
    driver.say(Party::Alice,
               msg::RedundancyReveal{bundle.redundancy_positions, bundle.redundancy_values});
    Bits bob_values(bundle.redundancy_positions.size());
    for (std::size_t i = 0; i < bundle.redundancy_positions.size(); ++i) {
        bob_values[i] = t_bob[bundle.redundancy_positions[i]];
    }
    driver.say(Party::Bob, msg::RedundancyReport{bob_values});
    const RedundancyCheck check =
        check_redundancy(bundle.redundancy_values, bob_values, cfg.abort_policy);
    result.check_flagged = !check.proceed;
    result.check_mismatch_fraction = check.mismatch_fraction;

    if (cfg.abort_enabled && !check.proceed) {
        driver.say(Party::Alice, msg::Abort{check.mismatch_fraction});
        result.status = DeliveryStatus::Aborted;
        result.transcript = std::move(driver.transcript);
        return result;
    }
    driver.say(Party::Alice, msg::KeyPhaseStart{});

    // Key phase: steps 4-7 again, this time carrying K. No redundancy bits
    // here; the hash comparison below is the only check on the key.
    Eavesdropper evan_key(cfg.attack, driver.evan_rng);
    const Bits k_bob = driver.transmit(bundle.key, evan_key);
    evan_key.finalize();
    result.key_pair_count = bundle.key.size();
    result.evan_key_observation_count = evan_key.intercepted_count();

    const Bits p_bob = strip_redundancy(t_bob, bundle.redundancy_positions);
    const Bits c_bob = otp_apply(p_bob, k_bob);
    std::optional<Bits> recovered = verify_packet(c_bob);
    driver.say(Party::Bob, msg::Done{recovered.has_value()});

    if (recovered) {
        result.status = DeliveryStatus::Delivered;
        result.message = std::move(*recovered);
    } else {
        result.status = DeliveryStatus::HashMismatch;
    }
    result.transcript = std::move(driver.transcript);
    return result;
}

double compute_qber(const Bits& sent, const Bits& decoded) {
    if (sent.size() != decoded.size()) {
        throw std::invalid_argument("compute_qber: sequence lengths differ");
    }
    if (sent.empty()) {
        return 0.0;
    }
    std::size_t errors = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        errors += sent[i] != decoded[i] ? 1u : 0u;
    }
    return static_cast<double>(errors) / static_cast<double>(sent.size());
}

double compute_iae(const Bits& alice_bits, const std::vector<EvanEstimate>& estimates) {
    if (alice_bits.size() != estimates.size()) {
        throw std::invalid_argument("compute_iae: sequence lengths differ");
    }
    if (alice_bits.empty()) {
        return 0.0;
    }
    std::size_t known_correct = 0;
    for (std::size_t i = 0; i < alice_bits.size(); ++i) {
        if (estimates[i].known() && estimates[i].value == static_cast<int>(alice_bits[i])) {
            ++known_correct;
        }
    }
    return static_cast<double>(known_correct) / static_cast<double>(alice_bits.size());
}

TwoQubitState apply_channel_noise(const TwoQubitState& s, double p, RandomSource& rng) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("apply_channel_noise: probability out of range");
    }
    if (p <= 0.0) {
        return s;
    }
    TwoQubitState state = s;
    for (int qubit = 1; qubit <= 2; ++qubit) {
        if (rng.bernoulli(p)) {
            state = apply_pauli(state, qubit, static_cast<Pauli>(rng.below(3)));
        }
    }
    return state;
}

double expected_qber_under_noise(int protocol, double noise_p) {
    if (protocol != 1 && protocol != 2) {
        throw std::invalid_argument("protocol must be 1 or 2");
    }
    // Calibrated by no-attack Monte Carlo runs (10^7 pairs per protocol, see
    // the harness tests): one depolarizing event flips the informative
    // outcome with probability 2/3, and in protocol 2's parity branch either
    // qubit can flip the decoded bit.
    const double slope = protocol == 1 ? 0.6667 : 1.0;
    return std::min(1.0, slope * noise_p);
}

AbortPolicy default_abort_policy(int protocol, double noise_p) {
    if (noise_p <= 0.0) {
        return AbortPolicy{0.0, 3.0};
    }
    return AbortPolicy{expected_qber_under_noise(protocol, noise_p), 3.0};
}

SweepResult run_sweep(const SessionConfig& base, const std::vector<double>& eps_grid,
                      std::size_t trials, std::uint64_t sweep_seed) {
    if (eps_grid.empty()) {
        throw std::invalid_argument("run_sweep: empty epsilon grid");
    }
    if (trials == 0) {
        throw std::invalid_argument("run_sweep: trials must be positive");
    }
    for (double eps : eps_grid) {
        if (eps < 0.0 || eps > 1.0) {
            throw std::invalid_argument("run_sweep: epsilon out of [0,1]");
        }
    }

    auto run_point = [&base, trials](double eps, std::uint64_t point_seed) {
        SweepRow row;
        row.epsilon = eps;
        row.seed = point_seed;
        for (std::size_t t = 0; t < trials; ++t) {
            SessionConfig cfg = base;
            cfg.attack.epsilon = eps;
            cfg.abort_enabled = false;
            cfg.seeds = SessionSeeds::from_master(derive_seed(point_seed, t));
            const SessionResult result = run_session(cfg);
            row.qber += result.qber;
            row.iae += result.evan_known_fraction;
            row.detected_fraction += result.check_flagged ? 1.0 : 0.0;
            row.n_bits += result.message_pair_count;
        }
        const double inv = 1.0 / static_cast<double>(trials);
        row.qber *= inv;
        row.iae *= inv;
        row.detected_fraction *= inv;
        return row;
    };

    std::vector<std::future<SweepRow>> futures;
    futures.reserve(eps_grid.size());
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        futures.push_back(std::async(std::launch::async, run_point, eps_grid[i],
                                     derive_seed(sweep_seed, i)));
    }
    SweepResult result;
    result.rows.reserve(futures.size());
    for (std::future<SweepRow>& future : futures) {
        result.rows.push_back(future.get());
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = "epsilon,qber,iae,detected_fraction,n_bits,seed\n";
    char line[160];
    for (const SweepRow& row : result.rows) {
        std::snprintf(line, sizeof(line), "%.6f,%.6f,%.6f,%.6f,%llu,%llu\n", row.epsilon,
                      row.qber, row.iae, row.detected_fraction,
                      static_cast<unsigned long long>(row.n_bits),
                      static_cast<unsigned long long>(row.seed));
        out += line;
    }
    return out;
}

}  // namespace dsqc
