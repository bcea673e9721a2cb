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

/* Command-line front end. Talks to the core exclusively through the C API
 * so the binary exercises the same surface external embedders get. The
 * machine-readable summary is always the last stdout line; heartbeats and
 * diagnostics go to stderr. */
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bbtlab.h"

namespace {

using ordered_json = nlohmann::ordered_json;

struct Flags {
    int n = 0;
    std::string fid;
    std::string family;
    bool all = false;
    uint64_t sample = 0;
    bool has_sample = false;
    uint64_t seed = 0;
    bool has_seed = false;
    double tau = 0.05;
    bool has_tau = false;
    bool heuristic_only = false;
    uint64_t budget_nodes = 0;
    bool has_budget_nodes = false;
    double budget_secs = 0.0;
    bool has_budget_secs = false;
    std::string certs;
    std::string out;
    int threads = 1;
    bool force = false;
};

/* Relative artifact paths land under BBT_LAB_DATA_DIR when it is set. */
std::string resolve_path(const std::string& path) {
    if (path.empty())
        return path;
    const char* root = std::getenv("BBT_LAB_DATA_DIR");
    if (root == nullptr || *root == '\0')
        return path;
    std::filesystem::path p(path);
    if (p.is_absolute())
        return path;
    return (std::filesystem::path(root) / p).string();
}

/* count() only for options the subcommand actually registered */
bool passed(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

std::string build_config(const CLI::App* cmd, const Flags& f) {
    ordered_json cfg;
    if (passed(cmd, "--n"))
        cfg["n"] = f.n;
    if (passed(cmd, "--fid"))
        cfg["fid"] = f.fid;
    if (passed(cmd, "--family"))
        cfg["family"] = f.family;
    if (f.all)
        cfg["all"] = true;
    if (passed(cmd, "--sample"))
        cfg["sample"] = f.sample;
    if (passed(cmd, "--seed"))
        cfg["seed"] = f.seed;
    if (passed(cmd, "--tau"))
        cfg["tau"] = f.tau;
    if (f.heuristic_only)
        cfg["heuristic_only"] = true;
    if (passed(cmd, "--budget-nodes"))
        cfg["budget_nodes"] = f.budget_nodes;
    if (passed(cmd, "--budget-secs"))
        cfg["budget_seconds"] = f.budget_secs;
    if (passed(cmd, "--certs"))
        cfg["certs"] = resolve_path(f.certs);
    if (passed(cmd, "--out"))
        cfg["out"] = resolve_path(f.out);
    if (passed(cmd, "--threads"))
        cfg["threads"] = f.threads;
    if (f.force)
        cfg["force"] = true;
    return cfg.dump();
}

void heartbeat(uint64_t done, uint64_t total, void* /*user*/) {
    std::fprintf(stderr, "progress %llu/%llu\n", static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
}

int status_exit_code(bbtlab_status status) {
    switch (status) {
    case BBTLAB_OK: return 0;
    case BBTLAB_INVALID_ARGUMENT: return 2;
    case BBTLAB_VERIFICATION_FAILED:
    case BBTLAB_CORRUPT_RECORD: return 3;
    case BBTLAB_BUDGET_EXHAUSTED: return 4;
    default: return 1;
    }
}

int dispatch(const std::string& name, const CLI::App* cmd, const Flags& flags) {
    const std::string config = build_config(cmd, flags);
    int exit_code = 0;
    char* summary = nullptr;
    const bbtlab_status rc =
        bbtlab_run(name.c_str(), config.c_str(), heartbeat, nullptr, &exit_code, &summary);
    if (rc != BBTLAB_OK) {
        ordered_json err;
        err["cmd"] = name;
        err["status"] = bbtlab_status_name(rc);
        err["error"] = bbtlab_last_error();
        std::printf("%s\n", err.dump().c_str());
        return status_exit_code(rc);
    }
    std::printf("%s\n", summary);
    bbtlab_string_free(summary);
    return exit_code;
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--n", f.n, "number of variables");
    cmd->add_option("--fid", f.fid, "function id (hex truth table, e.g. 0x1e)");
    cmd->add_option("--sample", f.sample, "sample this many functions");
    cmd->add_option("--seed", f.seed, "sampling seed (required with --sample)");
    cmd->add_option("--out", f.out, "output artifact path");
    cmd->add_option("--threads", f.threads, "worker threads");
    cmd->add_flag("--force", f.force, "overwrite existing outputs");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bbtlab: exact Boolean-Fourier spectra, contraction diagnostics, "
                 "ternary mask synthesis, and minimum-support certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bbtlab_version()));

    Flags flags;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "spectrum, influences, contraction exponent, bound checks");
    add_common(analyze, flags);
    analyze->add_option("--family", flags.family,
                        "parity|majority|dictator|and|or|tribes, or 'scaling' for the "
                        "family table up to --n");

    CLI::App* synth = app.add_subcommand(
        "synth", "ternary Walsh-threshold masks (heuristic, repair, multi-start)");
    add_common(synth, flags);
    synth->add_flag("--all", flags.all, "run the full universe at this n");
    synth->add_option("--tau", flags.tau, "heuristic threshold (default 0.05)");
    synth->add_flag("--heuristic-only", flags.heuristic_only,
                    "skip repair and multi-start");

    CLI::App* minsupport = app.add_subcommand(
        "minsupport", "exact minimum-support certificate for one function");
    add_common(minsupport, flags);
    minsupport->add_option("--budget-nodes", flags.budget_nodes,
                           "node budget (0 = unlimited)");
    minsupport->add_option("--budget-secs", flags.budget_secs,
                           "time budget in seconds (0 = unlimited)");

    CLI::App* npn = app.add_subcommand(
        "npn", "enumerate canonical classes under input/output negation and permutation");
    add_common(npn, flags);

    CLI::App* census = app.add_subcommand(
        "census", "minimum-support census over the universe or a sample");
    add_common(census, flags);
    census->add_flag("--all", flags.all, "full universe (n <= 4)");
    census->add_option("--budget-nodes", flags.budget_nodes,
                       "per-function node budget (0 = unlimited)");
    census->add_option("--budget-secs", flags.budget_secs,
                       "per-function time budget in seconds (0 = unlimited)");

    CLI::App* correlate = app.add_subcommand(
        "correlate", "diagnostic-vs-support correlation tables from a certificate file");
    add_common(correlate, flags);
    correlate->add_option("--certs", flags.certs, "certificate file (JSON lines)");

    CLI::App* verify = app.add_subcommand(
        "verify", "standalone integer re-verification of a certificate file");
    add_common(verify, flags);
    verify->add_option("--certs", flags.certs, "certificate file (JSON lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return 2;
    }

    for (CLI::App* cmd : {analyze, synth, minsupport, npn, census, correlate, verify})
        if (cmd->parsed())
            return dispatch(cmd->get_name(), cmd, flags);
    return 2;
}
