/* Copyright 2026 the dsqcsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* dsqcsim public C API.
 *
 * The library simulates two deterministic secure quantum communication
 * protocols end to end: the classical encryption pipeline (CRC-32 hash,
 * one-time pad, redundancy check bits), the per-bit two-qubit quantum
 * encoders, four eavesdropping strategies, and a Monte Carlo sweep harness.
 *
 * All objects are opaque handles created and released by this API. Every
 * fallible call returns dsqc_status; dsqc_last_error() describes the most
 * recent failure on the calling thread. Pointers returned by getters stay
 * valid until their owning handle is freed. Handles are not thread-safe;
 * distinct handles may be used from distinct threads freely.
 */

#ifndef DSQC_H
#define DSQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DSQC_BUILD_SHARED)
#define DSQC_API __declspec(dllexport)
#else
#define DSQC_API __declspec(dllimport)
#endif
#else
#define DSQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsqc_status {
    DSQC_OK = 0,
    DSQC_ERROR_INVALID_ARGUMENT = 1,
    DSQC_ERROR_IO = 2,
    DSQC_ERROR_SELFTEST_FAILED = 3,
    DSQC_ERROR_INTERNAL = 4
} dsqc_status;

typedef enum dsqc_attack {
    DSQC_ATTACK_NONE = 0,
    /* Measure-and-resend posing as Bob; applies to both protocols. */
    DSQC_ATTACK_INTERCEPT_RESEND = 1,
    /* Store an undisturbed duplicate of each pair; protocol 1 only. */
    DSQC_ATTACK_PHOTON_SPLIT = 2,
    /* Measure the first qubit in the diagonal basis; protocol 2 only. */
    DSQC_ATTACK_FIRST_QUBIT = 3
} dsqc_attack;

typedef enum dsqc_outcome {
    DSQC_OUTCOME_DELIVERED = 0,
    DSQC_OUTCOME_ABORTED = 1,
    DSQC_OUTCOME_HASH_MISMATCH = 2
} dsqc_outcome;

typedef struct dsqc_config dsqc_config;
typedef struct dsqc_session dsqc_session;
typedef struct dsqc_sweep dsqc_sweep;

typedef struct dsqc_sweep_row {
    double epsilon;
    double qber;
    double iae;
    double detected_fraction;
    uint64_t n_bits;
    uint64_t seed;
} dsqc_sweep_row;

DSQC_API const char* dsqc_version(void);

/* Thread-local message for the last failing call on this thread. */
DSQC_API const char* dsqc_last_error(void);

/* --- configuration ------------------------------------------------------ */

/* Defaults: protocol 1, 10000 message bits, automatic redundancy count,
 * no attack, no noise, seed 0. The default abort policy is a zero threshold
 * on a clean channel and a noise-calibrated 3-sigma band otherwise. */
DSQC_API dsqc_config* dsqc_config_new(void);
DSQC_API void dsqc_config_free(dsqc_config* cfg);

DSQC_API dsqc_status dsqc_config_set_protocol(dsqc_config* cfg, int protocol);
DSQC_API dsqc_status dsqc_config_set_attack(dsqc_config* cfg, dsqc_attack attack,
                                            double epsilon);
/* Per-pair duplication probability of the photon-splitting attack. */
DSQC_API dsqc_status dsqc_config_set_duplication(dsqc_config* cfg, double p_dup);
/* Random payload length, used when no explicit message is set. */
DSQC_API dsqc_status dsqc_config_set_message_bits(dsqc_config* cfg, uint64_t bits);
/* Explicit payload, MSB-first packing; n_bits of data are read. */
DSQC_API dsqc_status dsqc_config_set_message(dsqc_config* cfg, const uint8_t* data,
                                             uint64_t n_bits);
/* Number of redundancy check bits; 0 restores the default rule. */
DSQC_API dsqc_status dsqc_config_set_redundancy(dsqc_config* cfg, uint64_t k);
/* Per-qubit depolarizing probability of the channel. */
DSQC_API dsqc_status dsqc_config_set_noise(dsqc_config* cfg, double p);
/* Master seed; the per-party streams are derived from it. */
DSQC_API dsqc_status dsqc_config_set_seed(dsqc_config* cfg, uint64_t seed);
/* Abort threshold: expected error rate plus sigma_margin binomial sigmas. */
DSQC_API dsqc_status dsqc_config_set_abort_policy(dsqc_config* cfg,
                                                  double expected_error_rate,
                                                  double sigma_margin);

/* --- sessions ------------------------------------------------------------ */

DSQC_API dsqc_status dsqc_run_session(const dsqc_config* cfg, dsqc_session** out);
DSQC_API void dsqc_session_free(dsqc_session* session);

DSQC_API dsqc_status dsqc_session_get_outcome(const dsqc_session* session,
                                              dsqc_outcome* out);
/* Error rate of Bob's decoded bit sequence against Alice's. */
DSQC_API dsqc_status dsqc_session_get_qber(const dsqc_session* session, double* out);
/* Fraction of message-phase bits Evan ends up knowing. */
DSQC_API dsqc_status dsqc_session_get_evan_known_fraction(const dsqc_session* session,
                                                          double* out);
/* Delivered payload. Query the bit length first, then pass a buffer of at
 * least (n_bits + 7) / 8 bytes. Empty unless the outcome is DELIVERED. */
DSQC_API dsqc_status dsqc_session_get_message_bits(const dsqc_session* session,
                                                   uint64_t* n_bits);
DSQC_API dsqc_status dsqc_session_get_message(const dsqc_session* session, uint8_t* buffer,
                                              size_t buffer_len);
/* Line-delimited JSON transcript of the classical channel; owned by the
 * session handle. */
DSQC_API dsqc_status dsqc_session_get_transcript(const dsqc_session* session,
                                                 const char** out);

/* --- sweeps --------------------------------------------------------------- */

/* Runs `trials` sessions per epsilon with the abort disabled, as the
 * intervention-rate figures in the analysis require. */
DSQC_API dsqc_status dsqc_run_sweep(const dsqc_config* cfg, const double* eps_grid,
                                    size_t n_eps, uint32_t trials, dsqc_sweep** out);
DSQC_API void dsqc_sweep_free(dsqc_sweep* sweep);

DSQC_API dsqc_status dsqc_sweep_get_row_count(const dsqc_sweep* sweep, size_t* out);
DSQC_API dsqc_status dsqc_sweep_get_row(const dsqc_sweep* sweep, size_t index,
                                        dsqc_sweep_row* out);
/* CSV with header epsilon,qber,iae,detected_fraction,n_bits,seed; owned by
 * the sweep handle. */
DSQC_API dsqc_status dsqc_sweep_get_csv(const dsqc_sweep* sweep, const char** out);
DSQC_API dsqc_status dsqc_sweep_write_csv(const dsqc_sweep* sweep, const char* path);

/* --- selftest -------------------------------------------------------------- */

/* Runs the exhaustive decode oracles, the pipeline round trip and the four
 * epsilon = 1 attack checkpoints on a fixed seed. Returns DSQC_OK when every
 * check passes, DSQC_ERROR_SELFTEST_FAILED otherwise. When report is
 * non-NULL it receives the check table; free it with dsqc_string_free. */
DSQC_API dsqc_status dsqc_selftest(char** report);
DSQC_API void dsqc_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* DSQC_H */
