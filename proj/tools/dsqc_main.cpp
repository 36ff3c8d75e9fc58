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

// dsqc command-line front end. Talks to the simulator exclusively through
// the public C API in dsqc/dsqc.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsqc/dsqc.h"

namespace {

struct ConfigDeleter {
    void operator()(dsqc_config* cfg) const { dsqc_config_free(cfg); }
};
struct SessionDeleter {
    void operator()(dsqc_session* s) const { dsqc_session_free(s); }
};
struct SweepDeleter {
    void operator()(dsqc_sweep* s) const { dsqc_sweep_free(s); }
};

using ConfigPtr = std::unique_ptr<dsqc_config, ConfigDeleter>;
using SessionPtr = std::unique_ptr<dsqc_session, SessionDeleter>;
using SweepPtr = std::unique_ptr<dsqc_sweep, SweepDeleter>;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "dsqc: " << message << "\n";
    std::exit(1);
}

void check(dsqc_status status, const char* what) {
    if (status != DSQC_OK) {
        die(std::string(what) + ": " + dsqc_last_error());
    }
}

struct CommonFlags {
    int protocol = 1;
    std::string attack = "none";
    double p_dup = 1.0;
    std::uint64_t bits = 10000;
    std::uint64_t redundancy = 0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("-p,--protocol", flags.protocol, "Protocol: 1 (unentangled) or 2 (entangled)")
        ->check(CLI::Range(1, 2));
    cmd.add_option("-a,--attack", flags.attack, "Eavesdropping strategy")
        ->check(CLI::IsMember({"none", "ir", "pns", "fq"}));
    cmd.add_option("--pdup", flags.p_dup, "Photon-splitting duplication probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_option("-b,--bits", flags.bits, "Message bits per packet")->check(CLI::PositiveNumber);
    cmd.add_option("-k,--redundancy", flags.redundancy,
                   "Redundancy check bits (0 = max(16, 5% of the packet))");
    cmd.add_option("-n,--noise", flags.noise, "Per-qubit depolarizing probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_option("-s,--seed", flags.seed, "Master seed (default 0, or DSQC_SEED)")
        ->each([&flags](const std::string&) { flags.seed_given = true; });
}

std::uint64_t effective_seed(const CommonFlags& flags) {
    if (flags.seed_given) {
        return flags.seed;
    }
    if (const char* env = std::getenv("DSQC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            die("DSQC_SEED is not a valid integer");
        }
    }
    return flags.seed;
}

dsqc_attack parse_attack(const std::string& name) {
    if (name == "none") return DSQC_ATTACK_NONE;
    if (name == "ir") return DSQC_ATTACK_INTERCEPT_RESEND;
    if (name == "pns") return DSQC_ATTACK_PHOTON_SPLIT;
    if (name == "fq") return DSQC_ATTACK_FIRST_QUBIT;
    die("unknown attack '" + name + "'");
}

/// "x" or "start:end:step", expanded to a finite ascending list.
std::vector<double> parse_eps_grid(const std::string& spec) {
    std::vector<double> grid;
    const std::size_t first = spec.find(':');
    try {
        if (first == std::string::npos) {
            grid.push_back(std::stod(spec));
        } else {
            const std::size_t second = spec.find(':', first + 1);
            if (second == std::string::npos) {
                die("epsilon grid must be a single value or start:end:step");
            }
            const double start = std::stod(spec.substr(0, first));
            const double end = std::stod(spec.substr(first + 1, second - first - 1));
            const double step = std::stod(spec.substr(second + 1));
            if (step <= 0.0 || end < start) {
                die("epsilon grid must be ascending with a positive step");
            }
            for (double eps = start; eps <= end + 1e-9; eps += step) {
                grid.push_back(std::min(eps, end));
            }
        }
    } catch (const std::invalid_argument&) {
        die("cannot parse epsilon grid '" + spec + "'");
    } catch (const std::out_of_range&) {
        die("epsilon grid value out of range in '" + spec + "'");
    }
    for (double eps : grid) {
        if (eps < 0.0 || eps > 1.0) {
            die("epsilon must lie in [0,1]");
        }
    }
    return grid;
}

ConfigPtr build_config(const CommonFlags& flags, double epsilon) {
    ConfigPtr cfg(dsqc_config_new());
    if (!cfg) {
        die("out of memory");
    }
    check(dsqc_config_set_protocol(cfg.get(), flags.protocol), "protocol");
    check(dsqc_config_set_attack(cfg.get(), parse_attack(flags.attack), epsilon), "attack");
    check(dsqc_config_set_duplication(cfg.get(), flags.p_dup), "pdup");
    check(dsqc_config_set_message_bits(cfg.get(), flags.bits), "bits");
    check(dsqc_config_set_redundancy(cfg.get(), flags.redundancy), "redundancy");
    check(dsqc_config_set_noise(cfg.get(), flags.noise), "noise");
    check(dsqc_config_set_seed(cfg.get(), effective_seed(flags)), "seed");
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        die("cannot write " + path);
    }
}

// ---------------------------------------------------------------------------

int cmd_sweep(const CommonFlags& flags, const std::string& eps_spec,
              std::uint32_t trials, const std::string& out_path) {
    const std::vector<double> grid = parse_eps_grid(eps_spec);
    const ConfigPtr cfg = build_config(flags, 0.0);

    dsqc_sweep* raw = nullptr;
    check(dsqc_run_sweep(cfg.get(), grid.data(), grid.size(), trials, &raw), "sweep");
    const SweepPtr sweep(raw);

    check(dsqc_sweep_write_csv(sweep.get(), out_path.c_str()), "csv");

    size_t rows = 0;
    check(dsqc_sweep_get_row_count(sweep.get(), &rows), "rows");
    dsqc_sweep_row last{};
    check(dsqc_sweep_get_row(sweep.get(), rows - 1, &last), "row");
    std::printf("wrote %zu rows to %s\n", rows, out_path.c_str());
    std::printf("eps=%.2f: qber=%.6f iae=%.6f detected=%.6f (n_bits=%llu)\n", last.epsilon,
                last.qber, last.iae, last.detected_fraction,
                static_cast<unsigned long long>(last.n_bits));
    return 0;
}

int cmd_send(const CommonFlags& flags, double epsilon, const std::string& in_path,
             const std::string& out_path, const std::string& transcript_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        die("cannot read " + in_path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string payload = buffer.str();
    if (payload.empty()) {
        die("input file is empty");
    }

    const std::uint64_t total_bits = static_cast<std::uint64_t>(payload.size()) * 8;
    const std::uint64_t packet_bits = flags.bits;
    const std::uint64_t n_packets = (total_bits + packet_bits - 1) / packet_bits;
    const std::uint64_t base_seed = effective_seed(flags);

    std::string transcript;
    transcript += "{\"type\":\"header\",\"total_bits\":" + std::to_string(total_bits) +
                  ",\"packet_bits\":" + std::to_string(packet_bits) +
                  ",\"packets\":" + std::to_string(n_packets) + "}\n";

    // Bit-level reassembly buffer; the last packet is zero-padded in flight
    // and truncated back to total_bits here.
    std::vector<std::uint8_t> received_bits;
    received_bits.reserve(static_cast<std::size_t>(n_packets * packet_bits));

    for (std::uint64_t packet = 0; packet < n_packets; ++packet) {
        std::vector<std::uint8_t> packet_bytes((packet_bits + 7) / 8, 0);
        for (std::uint64_t bit = 0; bit < packet_bits; ++bit) {
            const std::uint64_t global = packet * packet_bits + bit;
            if (global >= total_bits) {
                break;  // zero padding
            }
            const std::uint8_t byte = static_cast<std::uint8_t>(payload[global / 8]);
            if ((byte >> (7 - global % 8)) & 1) {
                packet_bytes[bit / 8] |= static_cast<std::uint8_t>(1u << (7 - bit % 8));
            }
        }

        ConfigPtr cfg = build_config(flags, epsilon);
        check(dsqc_config_set_message(cfg.get(), packet_bytes.data(), packet_bits), "message");
        check(dsqc_config_set_seed(cfg.get(), base_seed + packet), "seed");

        dsqc_session* raw = nullptr;
        check(dsqc_run_session(cfg.get(), &raw), "session");
        const SessionPtr session(raw);

        dsqc_outcome outcome;
        check(dsqc_session_get_outcome(session.get(), &outcome), "outcome");
        double evan = 0.0;
        check(dsqc_session_get_evan_known_fraction(session.get(), &evan), "evan");

        transcript += "{\"type\":\"packet_start\",\"index\":" + std::to_string(packet) + "}\n";
        const char* lines = nullptr;
        check(dsqc_session_get_transcript(session.get(), &lines), "transcript");
        transcript += lines;
        transcript += "{\"type\":\"evan_summary\",\"packet\":" + std::to_string(packet) +
                      ",\"known_fraction\":" + std::to_string(evan) + "}\n";

        if (outcome != DSQC_OUTCOME_DELIVERED) {
            if (!transcript_path.empty()) {
                write_file(transcript_path, transcript);
            }
            const char* reason =
                outcome == DSQC_OUTCOME_ABORTED ? "aborted (eavesdropper detected)"
                                                : "hash mismatch";
            std::cerr << "dsqc: packet " << packet << " " << reason << "\n";
            return 2;
        }

        std::uint64_t n_bits = 0;
        check(dsqc_session_get_message_bits(session.get(), &n_bits), "message bits");
        std::vector<std::uint8_t> delivered((n_bits + 7) / 8, 0);
        check(dsqc_session_get_message(session.get(), delivered.data(), delivered.size()),
              "message");
        for (std::uint64_t bit = 0; bit < n_bits; ++bit) {
            received_bits.push_back(
                static_cast<std::uint8_t>((delivered[bit / 8] >> (7 - bit % 8)) & 1));
        }
    }

    received_bits.resize(static_cast<std::size_t>(total_bits));
    std::string out_bytes(payload.size(), '\0');
    for (std::size_t i = 0; i < received_bits.size(); ++i) {
        if (received_bits[i]) {
            out_bytes[i / 8] = static_cast<char>(
                static_cast<std::uint8_t>(out_bytes[i / 8]) | (1u << (7 - i % 8)));
        }
    }
    write_file(out_path, out_bytes);
    if (!transcript_path.empty()) {
        write_file(transcript_path, transcript);
    }
    std::printf("delivered %llu bits in %llu packet(s) to %s\n",
                static_cast<unsigned long long>(total_bits),
                static_cast<unsigned long long>(n_packets), out_path.c_str());
    return 0;
}

int cmd_selftest() {
    char* report = nullptr;
    const dsqc_status status = dsqc_selftest(&report);
    if (report != nullptr) {
        std::fputs(report, stdout);
        dsqc_string_free(report);
    }
    if (status == DSQC_OK) {
        return 0;
    }
    if (status != DSQC_ERROR_SELFTEST_FAILED) {
        std::cerr << "dsqc: selftest error: " << dsqc_last_error() << "\n";
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for deterministic secure quantum communication protocols"};
    app.require_subcommand(1);

    CommonFlags sweep_flags;
    std::string sweep_eps = "0:1:0.1";
    std::uint32_t sweep_trials = 1;
    std::string sweep_out = "dsqc_sweep.csv";
    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over intervention rates");
    add_common_flags(*sweep, sweep_flags);
    sweep->add_option("-e,--eps", sweep_eps, "Epsilon value or start:end:step grid");
    sweep->add_option("-t,--trials", sweep_trials, "Sessions per grid point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("-o,--out", sweep_out, "CSV output path");

    CommonFlags send_flags;
    std::string send_eps = "0";
    std::string send_in;
    std::string send_out = "dsqc_received.bin";
    std::string send_transcript;
    CLI::App* send = app.add_subcommand("send", "Transmit a file packet by packet");
    add_common_flags(*send, send_flags);
    send->add_option("-e,--eps", send_eps, "Eavesdropper intervention rate");
    send->add_option("-i,--in", send_in, "Input payload file")->required();
    send->add_option("-o,--out", send_out, "Reassembled output file");
    send->add_option("--transcript", send_transcript, "Transcript output file (JSON lines)");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in release checks");

    CLI11_PARSE(app, argc, argv);

    if (sweep->parsed()) {
        return cmd_sweep(sweep_flags, sweep_eps, sweep_trials, sweep_out);
    }
    if (send->parsed()) {
        const std::vector<double> eps = parse_eps_grid(send_eps);
        if (eps.size() != 1) {
            die("send takes a single epsilon, not a grid");
        }
        return cmd_send(send_flags, eps[0], send_in, send_out, send_transcript);
    }
    if (selftest->parsed()) {
        return cmd_selftest();
    }
    return 1;
}
