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

#ifndef DSQC_CLASSICAL_HPP
#define DSQC_CLASSICAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsqc/random.hpp"

namespace dsqc {

/// Bit sequences are vectors of 0/1 bytes. Packing into real bytes is
/// MSB-first throughout.
using Bits = std::vector<std::uint8_t>;

Bits bytes_to_bits(const std::uint8_t* data, std::size_t n_bits);
std::vector<std::uint8_t> bits_to_bytes(const Bits& bits);  // zero-padded tail

/// CRC-32 (IEEE 0x04C11DB7, reflected, init/xorout 0xFFFFFFFF) over the bits
/// packed MSB-first into bytes, zero-padded to a byte boundary. The check
/// value of the ASCII bytes "123456789" is 0xCBF43926.
std::uint32_t compute_hash(const Bits& message);

/// 32-bit hash serialized MSB-first.
Bits hash_to_bits(std::uint32_t hash);
std::uint32_t bits_to_hash(const Bits& bits, std::size_t offset);

/// Elementwise XOR; the one-time pad in both directions.
Bits otp_apply(const Bits& x, const Bits& key);

/// n uniform independent bits, n >= 1.
Bits generate_key(std::size_t n, RandomSource& rng);

struct RedundancyInsertion {
    Bits with_redundancy;               // T
    std::vector<std::size_t> positions; // sorted, in T coordinates
    Bits values;                        // inserted bits, in position order
};

/// Inserts k uniform random bits at k slots drawn uniformly without
/// replacement from the |p|+k slots of the final sequence. k >= 1.
RedundancyInsertion insert_redundancy(const Bits& p, std::size_t k, RandomSource& rng);

/// Removes the bits at the listed positions (sorted, distinct, in range).
Bits strip_redundancy(const Bits& t, const std::vector<std::size_t>& positions);

/// Abort rule for the public redundancy-bit comparison. With k compared
/// bits the threshold is expected_error_rate plus sigma_margin binomial
/// standard deviations, clamped to [0,1]; a zero expected rate means any
/// mismatch aborts.
struct AbortPolicy {
    double expected_error_rate = 0.0;
    double sigma_margin = 3.0;

    double threshold(std::size_t k) const;
};

struct RedundancyCheck {
    bool proceed;
    double mismatch_fraction;
};

RedundancyCheck check_redundancy(const Bits& alice_values, const Bits& bob_values,
                                 const AbortPolicy& policy);

/// Splits C into M || S and recomputes the hash of M. Returns M when the
/// hashes agree, nothing on a mismatch. |C| must exceed 32.
std::optional<Bits> verify_packet(const Bits& c);

/// Default redundancy-bit count for a packet of |P| encrypted bits.
std::size_t default_redundancy_count(std::size_t p_len);

/// The preprocessing pipeline in one place: hash, append, encrypt, insert
/// redundancy. Field names follow the wire roles: message, hash, hashed
/// message, key, ciphertext, transmitted sequence.
struct PacketBundle {
    Bits message;                        // M
    std::uint32_t hash = 0;              // S
    Bits hashed_message;                 // C = M || S
    Bits key;                            // K, |K| = |C|
    Bits ciphertext;                     // P = K xor C
    Bits transmitted;                    // T = P with redundancy inserted
    std::vector<std::size_t> redundancy_positions;
    Bits redundancy_values;
};

PacketBundle build_packet_bundle(const Bits& message, std::size_t redundancy_k,
                                 RandomSource& rng);

}  // namespace dsqc

#endif
