/*
 * Copyright 2026 The bbtlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "bbtlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/minsupport.hpp"
#include "bbt/npn.hpp"
#include "bbt/pipelines.hpp"
#include "bbt/synthesis.hpp"
#include "bbt/truth_table.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bbtlab_status map_status(bbt::Status s) {
    return static_cast<bbtlab_status>(static_cast<int>(s));
}

/* Runs body, routing every failure into (status, last_error). */
template <typename Body>
bbtlab_status guarded(Body&& body) {
    try {
        g_last_error.clear();
        body();
        return BBTLAB_OK;
    } catch (const bbt::Error& e) {
        g_last_error = e.what();
        return map_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BBTLAB_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BBTLAB_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return BBTLAB_INTERNAL;
    }
}

bbtlab_status emit(const std::string& text, char** out) {
    if (out == nullptr) {
        g_last_error = "null output parameter";
        return BBTLAB_INVALID_ARGUMENT;
    }
    *out = dup_string(text);
    if (*out == nullptr) {
        g_last_error = "out of memory";
        return BBTLAB_OUT_OF_MEMORY;
    }
    return BBTLAB_OK;
}

uint64_t parse_fid_field(const ordered_json& v) {
    if (v.is_string())
        return bbt::parse_fid_hex(v.get<std::string>());
    if (v.is_number_unsigned())
        return v.get<uint64_t>();
    if (v.is_number_integer() && v.get<int64_t>() >= 0)
        return static_cast<uint64_t>(v.get<int64_t>());
    throw bbt::Error(bbt::Status::invalid_argument, "fid must be a hex string or integer");
}

bbt::RunConfig parse_config(const char* config_json) {
    bbt::RunConfig cfg;
    if (config_json == nullptr)
        return cfg;
    ordered_json j = ordered_json::parse(config_json, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw bbt::Error(bbt::Status::invalid_argument, "config must be a JSON object");
    if (j.contains("n"))
        cfg.n = j["n"].get<int>();
    if (j.contains("fid")) {
        cfg.fid = parse_fid_field(j["fid"]);
        cfg.has_fid = true;
    }
    if (j.contains("family"))
        cfg.family = j["family"].get<std::string>();
    if (j.contains("all"))
        cfg.all = j["all"].get<bool>();
    if (j.contains("sample")) {
        cfg.sample_size = j["sample"].get<uint64_t>();
        cfg.has_sample = true;
    }
    if (j.contains("seed")) {
        cfg.seed = j["seed"].get<uint64_t>();
        cfg.has_seed = true;
    }
    if (j.contains("tau"))
        cfg.tau = j["tau"].get<double>();
    if (j.contains("heuristic_only"))
        cfg.heuristic_only = j["heuristic_only"].get<bool>();
    if (j.contains("budget_nodes"))
        cfg.budget.max_nodes = j["budget_nodes"].get<uint64_t>();
    if (j.contains("budget_seconds"))
        cfg.budget.max_seconds = j["budget_seconds"].get<double>();
    if (j.contains("certs"))
        cfg.certs_path = j["certs"].get<std::string>();
    if (j.contains("out"))
        cfg.out_path = j["out"].get<std::string>();
    if (j.contains("threads"))
        cfg.threads = j["threads"].get<int>();
    if (j.contains("force"))
        cfg.force = j["force"].get<bool>();
    return cfg;
}

} // namespace

struct bbtlab_spectrum {
    bbt::IntegerSpectrum data;
};

extern "C" {

const char* bbtlab_version(void) { return "0.1.0"; }

const char* bbtlab_status_name(bbtlab_status status) {
    return bbt::status_name(static_cast<bbt::Status>(static_cast<int>(status)));
}

const char* bbtlab_last_error(void) { return g_last_error.c_str(); }

void bbtlab_string_free(char* s) { std::free(s); }

bbtlab_status bbtlab_spectrum_from_fid(int n, uint64_t fid, bbtlab_spectrum** out) {
    return guarded([&] {
        if (out == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null output parameter");
        auto* handle = new bbtlab_spectrum{bbt::fwht(bbt::TruthTable::from_fid(n, fid))};
        *out = handle;
    });
}

bbtlab_status bbtlab_spectrum_from_values(int n, const int8_t* values, size_t len,
                                          bbtlab_spectrum** out) {
    return guarded([&] {
        if (out == nullptr || values == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null parameter");
        if (n < 1 || n > 20 || len != (size_t{1} << n))
            throw bbt::Error(bbt::Status::invalid_argument, "values length must be 2^n");
        std::vector<int8_t> v(values, values + len);
        auto* handle = new bbtlab_spectrum{bbt::fwht(bbt::TruthTable(n, std::move(v)))};
        *out = handle;
    });
}

void bbtlab_spectrum_free(bbtlab_spectrum* s) { delete s; }

int bbtlab_spectrum_n(const bbtlab_spectrum* s) { return s == nullptr ? 0 : s->data.n; }

bbtlab_status bbtlab_spectrum_coeffs(const bbtlab_spectrum* s, int64_t* out, size_t len) {
    return guarded([&] {
        if (s == nullptr || out == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null parameter");
        if (len != s->data.coeffs.size())
            throw bbt::Error(bbt::Status::invalid_argument, "coefficient buffer length mismatch");
        std::memcpy(out, s->data.coeffs.data(), len * sizeof(int64_t));
    });
}

bbtlab_status bbtlab_analyze_fid(int n, uint64_t fid, char** out_json) {
    std::string summary;
    const bbtlab_status rc = guarded([&] {
        bbt::RunConfig cfg;
        cfg.n = n;
        cfg.fid = fid;
        cfg.has_fid = true;
        summary = bbt::run_analyze(cfg).summary;
    });
    return rc != BBTLAB_OK ? rc : emit(summary, out_json);
}

bbtlab_status bbtlab_analyze_family(const char* family, int n, char** out_json) {
    std::string summary;
    const bbtlab_status rc = guarded([&] {
        if (family == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null family");
        bbt::RunConfig cfg;
        cfg.n = n;
        cfg.family = family;
        summary = bbt::run_analyze(cfg).summary;
    });
    return rc != BBTLAB_OK ? rc : emit(summary, out_json);
}

bbtlab_status bbtlab_synthesize(int n, uint64_t fid, char** out_json) {
    std::string summary;
    const bbtlab_status rc = guarded([&] {
        bbt::RunConfig cfg;
        cfg.n = n;
        cfg.fid = fid;
        cfg.has_fid = true;
        summary = bbt::run_synth(cfg).summary;
    });
    return rc != BBTLAB_OK ? rc : emit(summary, out_json);
}

bbtlab_status bbtlab_min_support(int n, uint64_t fid, uint64_t max_nodes,
                                 double max_seconds, char** out_json) {
    std::string summary;
    const bbtlab_status rc = guarded([&] {
        bbt::RunConfig cfg;
        cfg.n = n;
        cfg.fid = fid;
        cfg.has_fid = true;
        cfg.budget.max_nodes = max_nodes;
        cfg.budget.max_seconds = max_seconds;
        summary = bbt::run_minsupport(cfg).summary;
    });
    return rc != BBTLAB_OK ? rc : emit(summary, out_json);
}

bbtlab_status bbtlab_verify_mask(int n, uint64_t fid, const int8_t* mask, size_t len,
                                 int* out_ok, int64_t* out_margin) {
    return guarded([&] {
        if (mask == nullptr || out_ok == nullptr || out_margin == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null parameter");
        if (n < 1 || n > 6 || len != (size_t{1} << n))
            throw bbt::Error(bbt::Status::invalid_argument, "mask length must be 2^n");
        const bbt::TruthTable f = bbt::TruthTable::from_fid(n, fid);
        const bbt::TernaryMask w(n, std::vector<int8_t>(mask, mask + len));
        const bbt::VerifyResult vr = bbt::verify(w, f);
        *out_ok = vr.ok ? 1 : 0;
        *out_margin = vr.margin;
    });
}

bbtlab_status bbtlab_npn_canonicalize(int n, uint64_t fid, uint64_t* out_canonical) {
    return guarded([&] {
        if (out_canonical == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null output parameter");
        *out_canonical = bbt::canonicalize(bbt::TruthTable::from_fid(n, fid));
    });
}

bbtlab_status bbtlab_run(const char* subcommand, const char* config_json,
                         bbtlab_progress_fn progress, void* user, int* out_exit_code,
                         char** out_summary) {
    std::string summary;
    int exit_code = 0;
    const bbtlab_status rc = guarded([&] {
        if (subcommand == nullptr)
            throw bbt::Error(bbt::Status::invalid_argument, "null subcommand");
        const bbt::RunConfig cfg = parse_config(config_json);
        bbt::ProgressFn hook;
        if (progress != nullptr)
            hook = [progress, user](uint64_t done, uint64_t total) {
                progress(done, total, user);
            };
        const std::string cmd = subcommand;
        bbt::PipelineResult result;
        if (cmd == "analyze")
            result = bbt::run_analyze(cfg);
        else if (cmd == "synth")
            result = bbt::run_synth(cfg);
        else if (cmd == "minsupport")
            result = bbt::run_minsupport(cfg);
        else if (cmd == "npn")
            result = bbt::run_npn(cfg, hook);
        else if (cmd == "census")
            result = bbt::run_census(cfg, hook);
        else if (cmd == "correlate")
            result = bbt::run_correlate(cfg);
        else if (cmd == "verify")
            result = bbt::run_verify(cfg);
        else
            throw bbt::Error(bbt::Status::invalid_argument,
                             "unknown subcommand: " + cmd);
        summary = std::move(result.summary);
        exit_code = result.exit_code;
    });
    if (rc != BBTLAB_OK)
        return rc;
    if (out_exit_code != nullptr)
        *out_exit_code = exit_code;
    return emit(summary, out_summary);
}

} // extern "C"
