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
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "bbt/minsupport.hpp"
#include "bbt/synthesis.hpp"

namespace bbt {

/* Shared run configuration for every workbench pipeline. The CLI parses
 * flags into this; the C API fills it directly. */
struct RunConfig {
    int n = 0;
    bool all = false;
    bool has_fid = false;
    uint64_t fid = 0;
    std::string family; // empty = none; "scaling" selects the family table
    bool has_sample = false;
    uint64_t sample_size = 0;
    bool has_seed = false;
    uint64_t seed = 0;
    double tau = kDefaultTau;
    bool heuristic_only = false;
    BudgetLimits budget;
    std::string certs_path; // input certificates (correlate, verify)
    std::string out_path;   // primary output artifact
    int threads = 1;
    bool force = false;
};

struct PipelineResult {
    std::string summary; // single-line JSON, always the last line of output
    int exit_code = 0;   // 0 ok, 2 usage, 3 verification, 4 budget
};

/* Heartbeats go to whatever sink the caller provides (the CLI sends them
 * to the diagnostic stream); artifacts never contain them. */
using ProgressFn = std::function<void(uint64_t done, uint64_t total)>;

PipelineResult run_analyze(const RunConfig& cfg);
PipelineResult run_synth(const RunConfig& cfg);
PipelineResult run_minsupport(const RunConfig& cfg);
PipelineResult run_npn(const RunConfig& cfg, const ProgressFn& progress = {});
PipelineResult run_census(const RunConfig& cfg, const ProgressFn& progress = {});
PipelineResult run_correlate(const RunConfig& cfg);
PipelineResult run_verify(const RunConfig& cfg);

/* Refuses to clobber an existing file unless force is set. */
void guard_overwrite(const std::string& path, bool force);

} // namespace bbt
