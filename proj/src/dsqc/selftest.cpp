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

#include "dsqc/selftest.hpp"

#include <cmath>
#include <cstdio>

#include "dsqc/harness.hpp"

namespace dsqc {

namespace {

constexpr double kBranchCutoff = 1e-12;
constexpr std::uint64_t kSelftestSeed = 0xD5 << 8 | 0xC0;

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

SelftestCheck count_check(std::string name, std::size_t observed, std::size_t expected) {
    SelftestCheck check;
    check.name = std::move(name);
    check.expected = std::to_string(expected);
    check.observed = std::to_string(observed);
    check.pass = observed == expected;
    return check;
}

SelftestCheck near_check(std::string name, double observed, double expected, double tol) {
    SelftestCheck check;
    check.name = std::move(name);
    check.expected = format_double(expected) + " +/- " + format_double(tol);
    check.observed = format_double(observed);
    check.pass = std::abs(observed - expected) <= tol;
    return check;
}

SelftestCheck exact_check(std::string name, double observed, double expected) {
    SelftestCheck check;
    check.name = std::move(name);
    check.expected = format_double(expected) + " exactly";
    check.observed = format_double(observed);
    check.pass = observed == expected;
    return check;
}

SweepRow attack_checkpoint(int protocol, AttackKind kind, std::uint64_t salt) {
    SessionConfig cfg;
    cfg.protocol = protocol;
    cfg.message_bits = 10000;
    cfg.attack.kind = kind;
    const SweepResult sweep =
        run_sweep(cfg, {1.0}, 1, derive_seed(kSelftestSeed, salt));
    return sweep.rows.front();
}

std::size_t pipeline_failures() {
    RandomSource rng(derive_seed(kSelftestSeed, 99));
    std::size_t failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 8 + rng.below(4089);
        const Bits message = generate_key(len, rng);
        const PacketBundle bundle = build_packet_bundle(message, 0, rng);
        const Bits stripped = strip_redundancy(bundle.transmitted, bundle.redundancy_positions);
        const Bits decrypted = otp_apply(stripped, bundle.key);
        const std::optional<Bits> recovered = verify_packet(decrypted);
        if (!recovered || *recovered != message) {
            ++failures;
        }
    }
    return failures;
}

}  // namespace

std::size_t p1_decode_failures(
    const std::function<int(const MeasurementRecordP1&, int)>& decoder) {
    std::size_t failures = 0;
    for (int m = 0; m < 2; ++m) {
        for (int r = 1; r <= 2; ++r) {
            for (int b = 0; b < 2; ++b) {
                TwoQubitState state = encode_bit_p1(m, r);
                if (b == 1) {
                    state = apply_hadamard(apply_hadamard(state, 1), 2);
                }
                const std::array<double, 4> probs = outcome_probabilities(state);
                for (int idx = 0; idx < 4; ++idx) {
                    if (probs[static_cast<std::size_t>(idx)] < kBranchCutoff) {
                        continue;
                    }
                    const MeasurementRecordP1 rec{static_cast<std::uint8_t>(b),
                                                  static_cast<std::uint8_t>(idx >> 1),
                                                  static_cast<std::uint8_t>(idx & 1)};
                    const int decoded =
                        rec.outcome1 == rec.outcome2 ? rec.outcome1 : decoder(rec, r);
                    if (decoded != m) {
                        ++failures;
                    }
                }
            }
        }
    }
    return failures;
}

std::size_t p2_decode_failures(
    const std::function<int(const MeasurementRecordP2&, int)>& decoder) {
    std::size_t failures = 0;
    for (int m = 0; m < 2; ++m) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const TwoQubitState state = bob_premeasure_p2(encode_bit_p2(m, a), b);
                const std::array<double, 4> probs = outcome_probabilities(state);
                for (int idx = 0; idx < 4; ++idx) {
                    if (probs[static_cast<std::size_t>(idx)] < kBranchCutoff) {
                        continue;
                    }
                    const MeasurementRecordP2 rec{static_cast<std::uint8_t>(b),
                                                  static_cast<std::uint8_t>(idx >> 1),
                                                  static_cast<std::uint8_t>(idx & 1)};
                    if (decoder(rec, a) != m) {
                        ++failures;
                    }
                }
            }
        }
    }
    return failures;
}

std::string SelftestReport::to_text() const {
    std::size_t width = 0;
    for (const SelftestCheck& check : checks) {
        width = std::max(width, check.name.size());
    }
    std::string out;
    for (const SelftestCheck& check : checks) {
        out += check.pass ? "[PASS] " : "[FAIL] ";
        out += check.name;
        out.append(width - check.name.size() + 2, ' ');
        out += "expected " + check.expected + ", observed " + check.observed + "\n";
    }
    out += pass ? "selftest: all checks passed\n" : "selftest: FAILED\n";
    return out;
}

SelftestReport run_selftest() {
    SelftestReport report;

    report.checks.push_back(count_check(
        "protocol-1 exhaustive decode failures",
        p1_decode_failures([](const MeasurementRecordP1& rec, int r) {
            return decode_disclosed_p1(rec, r);
        }),
        0));
    report.checks.push_back(count_check(
        "protocol-2 exhaustive decode failures",
        p2_decode_failures([](const MeasurementRecordP2& rec, int a) {
            return decode_p2(rec, a);
        }),
        0));
    report.checks.push_back(count_check("pipeline round-trip failures", pipeline_failures(), 0));

    const SweepRow ir1 = attack_checkpoint(1, AttackKind::InterceptResendP1, 1);
    report.checks.push_back(near_check("intercept-resend p1 qber @ eps=1", ir1.qber, 0.25, 0.015));
    report.checks.push_back(near_check("intercept-resend p1 iae @ eps=1", ir1.iae, 0.75, 0.015));

    const SweepRow pns = attack_checkpoint(1, AttackKind::PhotonNumberSplitP1, 2);
    report.checks.push_back(exact_check("photon-split qber @ eps=1", pns.qber, 0.0));
    report.checks.push_back(near_check("photon-split iae @ eps=1", pns.iae, 0.75, 0.015));

    const SweepRow ir2 = attack_checkpoint(2, AttackKind::InterceptResendP2, 3);
    report.checks.push_back(near_check("intercept-resend p2 qber @ eps=1", ir2.qber, 0.5, 0.015));
    report.checks.push_back(exact_check("intercept-resend p2 iae @ eps=1", ir2.iae, 1.0));

    const SweepRow fq = attack_checkpoint(2, AttackKind::FirstQubitP2, 4);
    report.checks.push_back(exact_check("first-qubit qber @ eps=1", fq.qber, 0.0));
    report.checks.push_back(near_check("first-qubit iae @ eps=1", fq.iae, 0.75, 0.015));

    report.pass = true;
    for (const SelftestCheck& check : report.checks) {
        report.pass = report.pass && check.pass;
    }
    return report;
}

}  // namespace dsqc
