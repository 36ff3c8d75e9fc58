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

#include "dsqc/dsqc.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsqc/harness.hpp"
#include "dsqc/selftest.hpp"

namespace {

thread_local std::string g_last_error;

dsqc_status fail(dsqc_status status, const char* message) {
    g_last_error = message;
    return status;
}

dsqc_status fail_invalid(const char* message) {
    return fail(DSQC_ERROR_INVALID_ARGUMENT, message);
}

/// Runs `fn`, translating exceptions into error codes.
template <typename Fn>
dsqc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(DSQC_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DSQC_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DSQC_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(DSQC_ERROR_INTERNAL, "unknown error");
    }
}

}  // namespace

struct dsqc_config {
    dsqc::SessionConfig cfg;
    dsqc_attack attack = DSQC_ATTACK_NONE;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    bool abort_policy_set = false;
};

struct dsqc_session {
    dsqc::SessionResult result;
    std::string transcript_json;
};

struct dsqc_sweep {
    dsqc::SweepResult result;
    std::string csv;
};

namespace {

/// The protocol-agnostic attack selector resolves to a concrete strategy
/// only once the protocol is known, at run time.
dsqc_status resolve_attack(const dsqc_config& handle, dsqc::SessionConfig& cfg) {
    using dsqc::AttackKind;
    switch (handle.attack) {
        case DSQC_ATTACK_NONE:
            cfg.attack.kind = AttackKind::None;
            return DSQC_OK;
        case DSQC_ATTACK_INTERCEPT_RESEND:
            cfg.attack.kind = cfg.protocol == 1 ? AttackKind::InterceptResendP1
                                                : AttackKind::InterceptResendP2;
            return DSQC_OK;
        case DSQC_ATTACK_PHOTON_SPLIT:
            if (cfg.protocol != 1) {
                return fail_invalid("the photon-splitting attack applies to protocol 1 only");
            }
            cfg.attack.kind = AttackKind::PhotonNumberSplitP1;
            return DSQC_OK;
        case DSQC_ATTACK_FIRST_QUBIT:
            if (cfg.protocol != 2) {
                return fail_invalid("the first-qubit attack applies to protocol 2 only");
            }
            cfg.attack.kind = AttackKind::FirstQubitP2;
            return DSQC_OK;
    }
    return fail_invalid("unknown attack");
}

dsqc_status build_session_config(const dsqc_config* handle, dsqc::SessionConfig& cfg) {
    if (handle == nullptr) {
        return fail_invalid("config is NULL");
    }
    cfg = handle->cfg;
    cfg.attack.epsilon = handle->epsilon;
    cfg.seeds = dsqc::SessionSeeds::from_master(handle->seed);
    if (!handle->abort_policy_set) {
        cfg.abort_policy = dsqc::default_abort_policy(cfg.protocol, cfg.noise_p);
    }
    return resolve_attack(*handle, cfg);
}

}  // namespace

extern "C" {

const char* dsqc_version(void) {
    return "0.1.0";
}

const char* dsqc_last_error(void) {
    return g_last_error.c_str();
}

dsqc_config* dsqc_config_new(void) {
    return new (std::nothrow) dsqc_config();
}

void dsqc_config_free(dsqc_config* cfg) {
    delete cfg;
}

dsqc_status dsqc_config_set_protocol(dsqc_config* cfg, int protocol) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    if (protocol != 1 && protocol != 2) {
        return fail_invalid("protocol must be 1 or 2");
    }
    cfg->cfg.protocol = protocol;
    return DSQC_OK;
}

dsqc_status dsqc_config_set_attack(dsqc_config* cfg, dsqc_attack attack, double epsilon) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    if (attack < DSQC_ATTACK_NONE || attack > DSQC_ATTACK_FIRST_QUBIT) {
        return fail_invalid("unknown attack");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        return fail_invalid("epsilon must lie in [0,1]");
    }
    cfg->attack = attack;
    cfg->epsilon = epsilon;
    return DSQC_OK;
}

dsqc_status dsqc_config_set_duplication(dsqc_config* cfg, double p_dup) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    if (!(p_dup >= 0.0 && p_dup <= 1.0)) {
        return fail_invalid("duplication probability must lie in [0,1]");
    }
    cfg->cfg.attack.duplication_probability = p_dup;
    return DSQC_OK;
}

dsqc_status dsqc_config_set_message_bits(dsqc_config* cfg, uint64_t bits) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    if (bits == 0) {
        return fail_invalid("message_bits must be positive");
    }
    cfg->cfg.message_bits = static_cast<std::size_t>(bits);
    return DSQC_OK;
}

dsqc_status dsqc_config_set_message(dsqc_config* cfg, const uint8_t* data, uint64_t n_bits) {
    if (cfg == nullptr || (data == nullptr && n_bits > 0)) {
        return fail_invalid("config or data is NULL");
    }
    if (n_bits == 0) {
        return fail_invalid("message must contain at least one bit");
    }
    return guarded([&] {
        cfg->cfg.message = dsqc::bytes_to_bits(data, static_cast<std::size_t>(n_bits));
        return DSQC_OK;
    });
}

dsqc_status dsqc_config_set_redundancy(dsqc_config* cfg, uint64_t k) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    cfg->cfg.redundancy_k = static_cast<std::size_t>(k);
    return DSQC_OK;
}

dsqc_status dsqc_config_set_noise(dsqc_config* cfg, double p) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        return fail_invalid("noise probability must lie in [0,1]");
    }
    cfg->cfg.noise_p = p;
    return DSQC_OK;
}

dsqc_status dsqc_config_set_seed(dsqc_config* cfg, uint64_t seed) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    cfg->seed = seed;
    return DSQC_OK;
}

dsqc_status dsqc_config_set_abort_policy(dsqc_config* cfg, double expected_error_rate,
                                         double sigma_margin) {
    if (cfg == nullptr) {
        return fail_invalid("config is NULL");
    }
    if (!(expected_error_rate >= 0.0 && expected_error_rate < 1.0) || sigma_margin < 0.0) {
        return fail_invalid("abort policy parameters out of range");
    }
    cfg->cfg.abort_policy = dsqc::AbortPolicy{expected_error_rate, sigma_margin};
    cfg->abort_policy_set = true;
    return DSQC_OK;
}

dsqc_status dsqc_run_session(const dsqc_config* cfg, dsqc_session** out) {
    if (out == nullptr) {
        return fail_invalid("output pointer is NULL");
    }
    *out = nullptr;
    dsqc::SessionConfig session_cfg;
    const dsqc_status status = build_session_config(cfg, session_cfg);
    if (status != DSQC_OK) {
        return status;
    }
    return guarded([&] {
        auto session = std::make_unique<dsqc_session>();
        session->result = dsqc::run_session(session_cfg);
        session->transcript_json = dsqc::transcript_to_json_lines(session->result.transcript);
        *out = session.release();
        return DSQC_OK;
    });
}

void dsqc_session_free(dsqc_session* session) {
    delete session;
}

dsqc_status dsqc_session_get_outcome(const dsqc_session* session, dsqc_outcome* out) {
    if (session == nullptr || out == nullptr) {
        return fail_invalid("session or output pointer is NULL");
    }
    switch (session->result.status) {
        case dsqc::DeliveryStatus::Delivered:
            *out = DSQC_OUTCOME_DELIVERED;
            break;
        case dsqc::DeliveryStatus::Aborted:
            *out = DSQC_OUTCOME_ABORTED;
            break;
        case dsqc::DeliveryStatus::HashMismatch:
            *out = DSQC_OUTCOME_HASH_MISMATCH;
            break;
    }
    return DSQC_OK;
}

dsqc_status dsqc_session_get_qber(const dsqc_session* session, double* out) {
    if (session == nullptr || out == nullptr) {
        return fail_invalid("session or output pointer is NULL");
    }
    *out = session->result.qber;
    return DSQC_OK;
}

dsqc_status dsqc_session_get_evan_known_fraction(const dsqc_session* session, double* out) {
    if (session == nullptr || out == nullptr) {
        return fail_invalid("session or output pointer is NULL");
    }
    *out = session->result.evan_known_fraction;
    return DSQC_OK;
}

dsqc_status dsqc_session_get_message_bits(const dsqc_session* session, uint64_t* n_bits) {
    if (session == nullptr || n_bits == nullptr) {
        return fail_invalid("session or output pointer is NULL");
    }
    *n_bits = session->result.message.size();
    return DSQC_OK;
}

dsqc_status dsqc_session_get_message(const dsqc_session* session, uint8_t* buffer,
                                     size_t buffer_len) {
    if (session == nullptr || buffer == nullptr) {
        return fail_invalid("session or buffer is NULL");
    }
    const std::vector<std::uint8_t> bytes = dsqc::bits_to_bytes(session->result.message);
    if (buffer_len < bytes.size()) {
        return fail_invalid("buffer too small for the delivered message");
    }
    std::memcpy(buffer, bytes.data(), bytes.size());
    return DSQC_OK;
}

dsqc_status dsqc_session_get_transcript(const dsqc_session* session, const char** out) {
    if (session == nullptr || out == nullptr) {
        return fail_invalid("session or output pointer is NULL");
    }
    *out = session->transcript_json.c_str();
    return DSQC_OK;
}

dsqc_status dsqc_run_sweep(const dsqc_config* cfg, const double* eps_grid, size_t n_eps,
                           uint32_t trials, dsqc_sweep** out) {
    if (out == nullptr) {
        return fail_invalid("output pointer is NULL");
    }
    *out = nullptr;
    if (eps_grid == nullptr || n_eps == 0) {
        return fail_invalid("epsilon grid is empty");
    }
    dsqc::SessionConfig session_cfg;
    const dsqc_status status = build_session_config(cfg, session_cfg);
    if (status != DSQC_OK) {
        return status;
    }
    return guarded([&] {
        auto sweep = std::make_unique<dsqc_sweep>();
        sweep->result = dsqc::run_sweep(session_cfg, {eps_grid, eps_grid + n_eps}, trials,
                                        cfg->seed);
        sweep->csv = dsqc::sweep_to_csv(sweep->result);
        *out = sweep.release();
        return DSQC_OK;
    });
}

void dsqc_sweep_free(dsqc_sweep* sweep) {
    delete sweep;
}

dsqc_status dsqc_sweep_get_row_count(const dsqc_sweep* sweep, size_t* out) {
    if (sweep == nullptr || out == nullptr) {
        return fail_invalid("sweep or output pointer is NULL");
    }
    *out = sweep->result.rows.size();
    return DSQC_OK;
}

dsqc_status dsqc_sweep_get_row(const dsqc_sweep* sweep, size_t index, dsqc_sweep_row* out) {
    if (sweep == nullptr || out == nullptr) {
        return fail_invalid("sweep or output pointer is NULL");
    }
    if (index >= sweep->result.rows.size()) {
        return fail_invalid("row index out of range");
    }
    const dsqc::SweepRow& row = sweep->result.rows[index];
    *out = dsqc_sweep_row{row.epsilon, row.qber,   row.iae,
                          row.detected_fraction,   row.n_bits, row.seed};
    return DSQC_OK;
}

dsqc_status dsqc_sweep_get_csv(const dsqc_sweep* sweep, const char** out) {
    if (sweep == nullptr || out == nullptr) {
        return fail_invalid("sweep or output pointer is NULL");
    }
    *out = sweep->csv.c_str();
    return DSQC_OK;
}

dsqc_status dsqc_sweep_write_csv(const dsqc_sweep* sweep, const char* path) {
    if (sweep == nullptr || path == nullptr) {
        return fail_invalid("sweep or path is NULL");
    }
    std::FILE* file = std::fopen(path, "wb");
    if (file == nullptr) {
        return fail(DSQC_ERROR_IO, "cannot open CSV output file");
    }
    const std::size_t written = std::fwrite(sweep->csv.data(), 1, sweep->csv.size(), file);
    const int close_rc = std::fclose(file);
    if (written != sweep->csv.size() || close_rc != 0) {
        return fail(DSQC_ERROR_IO, "short write to CSV output file");
    }
    return DSQC_OK;
}

dsqc_status dsqc_selftest(char** report) {
    if (report != nullptr) {
        *report = nullptr;
    }
    return guarded([&] {
        const dsqc::SelftestReport result = dsqc::run_selftest();
        if (report != nullptr) {
            const std::string text = result.to_text();
            char* copy = static_cast<char*>(std::malloc(text.size() + 1));
            if (copy == nullptr) {
                return fail(DSQC_ERROR_INTERNAL, "out of memory");
            }
            std::memcpy(copy, text.c_str(), text.size() + 1);
            *report = copy;
        }
        if (!result.pass) {
            return fail(DSQC_ERROR_SELFTEST_FAILED, "selftest reported failing checks");
        }
        return DSQC_OK;
    });
}

void dsqc_string_free(char* str) {
    std::free(str);
}

}  // extern "C"
