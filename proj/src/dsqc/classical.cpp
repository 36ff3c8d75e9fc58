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

#include "dsqc/classical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace dsqc {

namespace {

std::array<std::uint32_t, 256> make_crc_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int bit = 0; bit < 8; ++bit) {
            c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
        }
        table[i] = c;
    }
    return table;
}

void require_bits(const Bits& bits) {
    for (std::uint8_t b : bits) {
        if (b > 1) {
            throw std::invalid_argument("bit sequence contains a value other than 0/1");
        }
    }
}

}  // namespace

Bits bytes_to_bits(const std::uint8_t* data, std::size_t n_bits) {
    Bits bits(n_bits);
    for (std::size_t i = 0; i < n_bits; ++i) {
        bits[i] = static_cast<std::uint8_t>((data[i / 8] >> (7 - i % 8)) & 1);
    }
    return bits;
}

std::vector<std::uint8_t> bits_to_bytes(const Bits& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
        }
    }
    return bytes;
}

std::uint32_t compute_hash(const Bits& message) {
    static const std::array<std::uint32_t, 256> table = make_crc_table();
    require_bits(message);
    const std::vector<std::uint8_t> bytes = bits_to_bytes(message);
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::uint8_t byte : bytes) {
        crc = (crc >> 8) ^ table[(crc ^ byte) & 0xFFu];
    }
    return crc ^ 0xFFFFFFFFu;
}

Bits hash_to_bits(std::uint32_t hash) {
    Bits bits(32);
    for (std::size_t i = 0; i < 32; ++i) {
        bits[i] = static_cast<std::uint8_t>((hash >> (31 - i)) & 1u);
    }
    return bits;
}

std::uint32_t bits_to_hash(const Bits& bits, std::size_t offset) {
    if (offset + 32 > bits.size()) {
        throw std::invalid_argument("bits_to_hash: out of range");
    }
    std::uint32_t hash = 0;
    for (std::size_t i = 0; i < 32; ++i) {
        hash = (hash << 1) | bits[offset + i];
    }
    return hash;
}

Bits otp_apply(const Bits& x, const Bits& key) {
    if (x.size() != key.size()) {
        throw std::invalid_argument("otp_apply: sequence and key lengths differ");
    }
    Bits out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] ^ key[i];
    }
    return out;
}

Bits generate_key(std::size_t n, RandomSource& rng) {
    if (n == 0) {
        throw std::invalid_argument("generate_key: length must be positive");
    }
    Bits key(n);
    for (std::size_t i = 0; i < n; ++i) {
        key[i] = static_cast<std::uint8_t>(rng.next_bit());
    }
    return key;
}

RedundancyInsertion insert_redundancy(const Bits& p, std::size_t k, RandomSource& rng) {
    if (k == 0) {
        throw std::invalid_argument("insert_redundancy: k must be positive");
    }
    const std::size_t total = p.size() + k;

    // k distinct slots of the final sequence, uniformly without replacement.
    std::unordered_set<std::size_t> chosen;
    std::vector<std::size_t> positions;
    positions.reserve(k);
    while (positions.size() < k) {
        const std::size_t slot = static_cast<std::size_t>(rng.below(total));
        if (chosen.insert(slot).second) {
            positions.push_back(slot);
        }
    }
    std::sort(positions.begin(), positions.end());

    Bits values(k);
    for (std::size_t i = 0; i < k; ++i) {
        values[i] = static_cast<std::uint8_t>(rng.next_bit());
    }

    Bits t(total);
    std::size_t next_pos = 0;
    std::size_t src = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (next_pos < k && positions[next_pos] == i) {
            t[i] = values[next_pos];
            ++next_pos;
        } else {
            t[i] = p[src++];
        }
    }
    return RedundancyInsertion{std::move(t), std::move(positions), std::move(values)};
}

Bits strip_redundancy(const Bits& t, const std::vector<std::size_t>& positions) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= t.size()) {
            throw std::invalid_argument("strip_redundancy: position out of range");
        }
        if (i > 0 && positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("strip_redundancy: positions must be sorted and distinct");
        }
    }
    Bits out;
    out.reserve(t.size() - positions.size());
    std::size_t next_pos = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (next_pos < positions.size() && positions[next_pos] == i) {
            ++next_pos;
        } else {
            out.push_back(t[i]);
        }
    }
    return out;
}

double AbortPolicy::threshold(std::size_t k) const {
    if (expected_error_rate <= 0.0) {
        return 0.0;
    }
    const double sigma =
        std::sqrt(expected_error_rate * (1.0 - expected_error_rate) / static_cast<double>(k));
    return std::clamp(expected_error_rate + sigma_margin * sigma, 0.0, 1.0);
}

RedundancyCheck check_redundancy(const Bits& alice_values, const Bits& bob_values,
                                 const AbortPolicy& policy) {
    if (alice_values.size() != bob_values.size()) {
        throw std::invalid_argument("check_redundancy: value lists differ in length");
    }
    if (alice_values.empty()) {
        throw std::invalid_argument("check_redundancy: no values to compare");
    }
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < alice_values.size(); ++i) {
        mismatches += alice_values[i] != bob_values[i] ? 1u : 0u;
    }
    const double fraction = static_cast<double>(mismatches) / static_cast<double>(alice_values.size());
    return RedundancyCheck{fraction <= policy.threshold(alice_values.size()), fraction};
}

std::optional<Bits> verify_packet(const Bits& c) {
    if (c.size() <= 32) {
        throw std::invalid_argument("verify_packet: packet too short to hold a message and hash");
    }
    Bits message(c.begin(), c.end() - 32);
    const std::uint32_t received = bits_to_hash(c, c.size() - 32);
    if (compute_hash(message) != received) {
        return std::nullopt;
    }
    return message;
}

std::size_t default_redundancy_count(std::size_t p_len) {
    const std::size_t five_percent = (p_len + 19) / 20;
    return std::max<std::size_t>(16, five_percent);
}

PacketBundle build_packet_bundle(const Bits& message, std::size_t redundancy_k,
                                 RandomSource& rng) {
    if (message.empty()) {
        throw std::invalid_argument("build_packet_bundle: empty message");
    }
    PacketBundle bundle;
    bundle.message = message;
    bundle.hash = compute_hash(message);
    bundle.hashed_message = message;
    const Bits hash_bits = hash_to_bits(bundle.hash);
    bundle.hashed_message.insert(bundle.hashed_message.end(), hash_bits.begin(), hash_bits.end());
    bundle.key = generate_key(bundle.hashed_message.size(), rng);
    bundle.ciphertext = otp_apply(bundle.hashed_message, bundle.key);

    const std::size_t k =
        redundancy_k > 0 ? redundancy_k : default_redundancy_count(bundle.ciphertext.size());
    RedundancyInsertion inserted = insert_redundancy(bundle.ciphertext, k, rng);
    bundle.transmitted = std::move(inserted.with_redundancy);
    bundle.redundancy_positions = std::move(inserted.positions);
    bundle.redundancy_values = std::move(inserted.values);
    return bundle;
}

}  // namespace dsqc
