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
#include "bbt/pipelines.hpp"

#include <chrono>
#include <filesystem>
#include <map>

#include "json.hpp"

#include "bbt/analytics.hpp"
#include "bbt/certstore.hpp"
#include "bbt/contraction.hpp"
#include "bbt/error.hpp"
#include "bbt/families.hpp"
#include "bbt/fwht.hpp"
#include "bbt/influence.hpp"
#include "bbt/npn.hpp"
#include "bbt/parallel.hpp"
#include "bbt/sampling.hpp"
#include "bbt/truth_table.hpp"

namespace bbt {

namespace {

using ordered_json = nlohmann::ordered_json;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string frac(const Rational& r) { return to_string(r); }

ordered_json analyze_report(const TruthTable& f, bool with_spectrum) {
    const IntegerSpectrum spec = fwht(f);
    const InfluenceVector v = influences(spec);
    const ContractionProfile prof = contraction_profile(v);
    const BoundsReport bounds = check_bounds(prof, v);

    ordered_json out;
    out["n"] = f.n();
    if (f.n() <= 6)
        out["fid"] = f.fid_hex();
    if (with_spectrum)
        out["spectrum"] = spec.coeffs; // 2^n * fhat(S), exact integers
    ordered_json infl = ordered_json::array();
    ordered_json expo = ordered_json::array();
    for (int l = 0; l < f.n(); ++l) {
        infl.push_back(frac(v.influence(l)));
        expo.push_back(frac(prof.exponents[static_cast<size_t>(l)]));
    }
    out["influences"] = std::move(infl);
    out["total_influence"] = frac(v.total_influence());
    out["influence_entropy"] = influence_entropy(v);
    out["max_influence"] = frac(max_influence(v));
    out["exponents"] = std::move(expo);
    out["log2_mu"] = frac(prof.log2_mu);
    out["log2_mu_2dp"] = to_fixed2(prof.log2_mu);
    out["mu"] = prof.mu_float;
    out["algebraic_degree"] = prof.algebraic_degree.str();
    ordered_json b;
    b["pass"] = bounds.pass;
    b["degenerate"] = bounds.degenerate;
    b["coarse_low_slack"] = frac(bounds.coarse_low_slack);
    if (!bounds.degenerate)
        b["coarse_high_slack"] = frac(bounds.coarse_high_slack);
    b["jensen_slack"] = frac(bounds.jensen_slack);
    out["bounds"] = std::move(b);
    return out;
}

Certificate mask_record(const TruthTable& f, const SynthesisResult& r) {
    Certificate c;
    c.fid = f.fid();
    c.n = f.n();
    c.has_mask = true;
    c.mask = r.mask;
    c.min_support = r.mask.support();
    c.margin_min = verify(r.mask, f).margin;
    c.optimal = false; // synthesis promises validity, not minimality
    c.solver = r.strategy.empty() ? std::string("multi-start") : r.strategy;
    return c;
}

std::vector<uint64_t> batch_fids(const RunConfig& cfg, int max_full_n) {
    if (cfg.all) {
        if (cfg.n > max_full_n)
            throw Error(Status::invalid_argument, "--all is limited to n <= " +
                                                      std::to_string(max_full_n));
        std::vector<uint64_t> fids(uint64_t{1} << (uint64_t{1} << cfg.n));
        std::iota(fids.begin(), fids.end(), uint64_t{0});
        return fids;
    }
    if (!cfg.has_sample)
        throw Error(Status::invalid_argument, "need --fid, --all, or --sample");
    if (!cfg.has_seed)
        throw Error(Status::invalid_argument, "--sample requires --seed");
    return sample_fids_uniform(cfg.n, cfg.sample_size, cfg.seed);
}

} // namespace

void guard_overwrite(const std::string& path, bool force) {
    if (!force && std::filesystem::exists(path))
        throw Error(Status::invalid_argument, "refusing to overwrite " + path +
                                                  " (pass --force)");
}

PipelineResult run_analyze(const RunConfig& cfg) {
    if (cfg.n < 1)
        throw Error(Status::invalid_argument, "analyze needs --n");
    if (!cfg.family.empty() && cfg.has_fid)
        throw Error(Status::invalid_argument, "--family and --fid are exclusive");

    if (cfg.family == "scaling") {
        std::vector<int> ns;
        for (int k = 3; k <= cfg.n; k += 2)
            ns.push_back(k);
        if (ns.empty())
            throw Error(Status::invalid_argument, "scaling table needs --n >= 3");
        const std::vector<ScalingRow> rows = scaling_table(ns);
        if (!cfg.out_path.empty()) {
            guard_overwrite(cfg.out_path, cfg.force);
            write_text_file(cfg.out_path, scaling_table_csv(rows));
        }
        ordered_json summary;
        summary["cmd"] = "analyze";
        summary["table"] = "scaling";
        ordered_json jr = ordered_json::array();
        for (const ScalingRow& r : rows) {
            ordered_json row;
            row["family"] = r.family;
            row["n"] = r.n;
            row["log2_mu"] = frac(r.log2_mu);
            row["log2_mu_2dp"] = to_fixed2(r.log2_mu);
            jr.push_back(std::move(row));
        }
        summary["rows"] = std::move(jr);
        if (!cfg.out_path.empty())
            summary["out"] = cfg.out_path;
        return {summary.dump(), 0};
    }

    TruthTable f = [&] {
        if (!cfg.family.empty()) {
            FamilySpec spec;
            spec.kind = parse_family_kind(cfg.family);
            spec.n = cfg.n;
            return generate(spec);
        }
        if (!cfg.has_fid)
            throw Error(Status::invalid_argument, "analyze needs --fid or --family");
        return TruthTable::from_fid(cfg.n, cfg.fid);
    }();

    ordered_json report = analyze_report(f, /*with_spectrum=*/true);
    if (!cfg.out_path.empty()) {
        guard_overwrite(cfg.out_path, cfg.force);
        write_text_file(cfg.out_path, report.dump(2) + "\n");
    }
    ordered_json summary = f.n() <= 6 ? report : analyze_report(f, false);
    summary.erase("spectrum"); // keep the mandatory last line compact
    ordered_json out;
    out["cmd"] = "analyze";
    if (!cfg.family.empty())
        out["family"] = cfg.family;
    for (auto& [k, val] : summary.items())
        out[k] = std::move(val);
    if (!cfg.out_path.empty())
        out["out"] = cfg.out_path;
    return {out.dump(), 0};
}

PipelineResult run_synth(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 5)
        throw Error(Status::invalid_argument, "synth supports 1 <= n <= 5");
    const double t0 = now_ms();

    if (cfg.has_fid) {
        const TruthTable f = TruthTable::from_fid(cfg.n, cfg.fid);
        SynthesisResult r;
        if (cfg.heuristic_only) {
            r.mask = heuristic_mask(fwht(f), cfg.tau);
            r.has_mask = verify(r.mask, f).ok;
            r.status = r.has_mask ? SynthStatus::heuristic_ok : SynthStatus::failed;
            char label[48];
            std::snprintf(label, sizeof label, "heuristic tau=%g", cfg.tau);
            r.strategy = label;
        } else {
            r = multi_start_repair(f);
        }
        ordered_json summary;
        summary["cmd"] = "synth";
        summary["n"] = cfg.n;
        summary["fid"] = f.fid_hex();
        summary["status"] = synth_status_name(r.status);
        summary["strategy"] = r.strategy;
        summary["iterations"] = r.iterations;
        if (r.has_mask) {
            const VerifyResult vr = verify(r.mask, f);
            summary["support"] = r.mask.support();
            summary["margin"] = vr.margin;
            summary["verified"] = vr.ok;
            if (!cfg.out_path.empty()) {
                guard_overwrite(cfg.out_path, cfg.force);
                save_certificate_file(cfg.out_path, {mask_record(f, r)}, cfg.n);
                summary["out"] = cfg.out_path;
            }
        } else {
            summary["verified"] = false;
        }
        summary["elapsed_ms"] = now_ms() - t0;
        return {summary.dump(), 0};
    }

    const std::vector<uint64_t> fids = batch_fids(cfg, 4);
    std::vector<SynthesisResult> results(fids.size());
    parallel_for(fids.size(), cfg.threads, [&](uint64_t i) {
        const TruthTable f = TruthTable::from_fid(cfg.n, fids[i]);
        if (cfg.heuristic_only) {
            SynthesisResult r;
            r.mask = heuristic_mask(fwht(f), cfg.tau);
            r.has_mask = verify(r.mask, f).ok;
            r.status = r.has_mask ? SynthStatus::heuristic_ok : SynthStatus::failed;
            results[i] = std::move(r);
        } else {
            results[i] = multi_start_repair(f);
        }
    });

    std::map<std::string, uint64_t> status_counts;
    std::map<std::string, uint64_t> strategy_counts;
    uint64_t successes = 0;
    std::vector<Certificate> records;
    for (size_t i = 0; i < fids.size(); ++i) {
        const SynthesisResult& r = results[i];
        status_counts[synth_status_name(r.status)] += 1;
        if (r.has_mask) {
            ++successes;
            if (!r.strategy.empty())
                strategy_counts[r.strategy] += 1;
            if (!cfg.out_path.empty())
                records.push_back(
                    mask_record(TruthTable::from_fid(cfg.n, fids[i]), r));
        }
    }

    ordered_json summary;
    summary["cmd"] = "synth";
    summary["n"] = cfg.n;
    summary["mode"] = cfg.all ? "all" : "sample";
    if (cfg.has_sample) {
        summary["sample"] = cfg.sample_size;
        summary["seed"] = cfg.seed;
    }
    if (cfg.heuristic_only)
        summary["tau"] = cfg.tau;
    summary["total"] = fids.size();
    summary["successes"] = successes;
    ordered_json sc;
    for (const auto& [k, v] : status_counts)
        sc[k] = v;
    summary["status_counts"] = std::move(sc);
    if (!cfg.heuristic_only) {
        ordered_json stc;
        for (const auto& [k, v] : strategy_counts)
            stc[k] = v;
        summary["strategy_counts"] = std::move(stc);
    }
    if (!cfg.out_path.empty()) {
        guard_overwrite(cfg.out_path, cfg.force);
        save_certificate_file(cfg.out_path, records, cfg.n);
        summary["out"] = cfg.out_path;
    }
    summary["elapsed_ms"] = now_ms() - t0;
    return {summary.dump(), 0};
}

PipelineResult run_minsupport(const RunConfig& cfg) {
    if (!cfg.has_fid)
        throw Error(Status::invalid_argument,
                    "minsupport takes a single --fid (use census for batches)");
    if (cfg.n < 1 || cfg.n > 5)
        throw Error(Status::invalid_argument, "minsupport supports 1 <= n <= 5");
    const TruthTable f = TruthTable::from_fid(cfg.n, cfg.fid);
    const Certificate cert = min_support_exact(f, cfg.budget);

    ordered_json summary;
    summary["cmd"] = "minsupport";
    summary["n"] = cfg.n;
    summary["fid"] = f.fid_hex();
    summary["optimal"] = cert.optimal;
    if (cert.has_mask) {
        summary["support"] = cert.min_support;
        summary["margin_min"] = cert.margin_min;
        ordered_json mask = ordered_json::array();
        for (int8_t v : cert.mask.w)
            mask.push_back(static_cast<int>(v));
        summary["mask"] = std::move(mask);
    }
    summary["solver"] = cert.solver;
    summary["nodes"] = cert.nodes;
    summary["elapsed_ms"] = cert.elapsed_ms;
    if (!cfg.out_path.empty()) {
        if (!cert.has_mask)
            throw Error(Status::budget_exhausted,
                        "no certificate to write (search exhausted)");
        guard_overwrite(cfg.out_path, cfg.force);
        save_certificate_file(cfg.out_path, {cert}, cfg.n);
        summary["out"] = cfg.out_path;
    }
    return {summary.dump(), cert.optimal ? 0 : 4};
}

PipelineResult run_npn(const RunConfig& cfg, const ProgressFn& progress) {
    if (cfg.n < 2 || cfg.n > 5)
        throw Error(Status::invalid_argument, "npn enumeration supports 2 <= n <= 5");
    const double t0 = now_ms();
    const uint64_t universe = uint64_t{1} << (uint64_t{1} << cfg.n);
    const NpnUniverse u = enumerate_universe(cfg.n, [&](uint64_t done) {
        if (progress)
            progress(done, universe);
    });
    ordered_json summary;
    summary["cmd"] = "npn";
    summary["n"] = cfg.n;
    summary["classes"] = u.class_count;
    if (!cfg.out_path.empty()) {
        guard_overwrite(cfg.out_path, cfg.force);
        write_text_file(cfg.out_path, universe_to_text(u));
        summary["out"] = cfg.out_path;
    }
    summary["elapsed_ms"] = now_ms() - t0;
    return {summary.dump(), 0};
}

PipelineResult run_census(const RunConfig& cfg, const ProgressFn& progress) {
    if (cfg.n < 1 || cfg.n > 5)
        throw Error(Status::invalid_argument, "census supports 1 <= n <= 5");
    std::optional<SampleSpec> sample;
    if (cfg.has_sample) {
        if (!cfg.has_seed)
            throw Error(Status::invalid_argument, "--sample requires --seed");
        sample = SampleSpec{cfg.sample_size, cfg.seed};
    } else if (!cfg.all) {
        throw Error(Status::invalid_argument, "census needs --all or --sample");
    }
    const double t0 = now_ms();
    const SupportCensus census =
        support_census(cfg.n, sample, cfg.budget, cfg.threads, progress);

    ordered_json summary;
    summary["cmd"] = "census";
    summary["n"] = cfg.n;
    summary["mode"] = sample ? (cfg.n <= 4 ? "stratified-sample" : "uniform-sample")
                             : "full";
    if (sample) {
        summary["sample"] = sample->count;
        summary["seed"] = sample->seed;
    }
    ordered_json counts;
    for (const auto& [support, count] : census.counts)
        counts[std::to_string(support)] = count;
    summary["counts"] = std::move(counts);
    summary["solved"] = census.solved;
    summary["mean_support"] = census.mean_support;
    summary["max_support"] = census.max_support;
    summary["all_odd"] = census.all_odd;
    summary["exhausted"] = census.exhausted;
    ordered_json ef = ordered_json::array();
    for (size_t i = 0; i < census.exhausted_fids.size() && i < 16; ++i)
        ef.push_back(fid_to_hex(census.exhausted_fids[i]));
    summary["exhausted_fids_head"] = std::move(ef);

    if (!cfg.out_path.empty()) {
        guard_overwrite(cfg.out_path, cfg.force);
        std::vector<Certificate> persistable;
        for (const Certificate& c : census.certificates)
            if (c.has_mask)
                persistable.push_back(c);
        save_certificate_file(cfg.out_path, persistable, cfg.n);
        summary["out"] = cfg.out_path;
        std::filesystem::path csv(cfg.out_path);
        csv.replace_extension(".csv");
        guard_overwrite(csv.string(), cfg.force);
        write_text_file(csv.string(), census_csv(census));
        summary["csv"] = csv.string();
    }
    summary["elapsed_ms"] = now_ms() - t0;
    const int exit_code = census.solved == 0 ? 4 : 0;
    return {summary.dump(), exit_code};
}

PipelineResult run_correlate(const RunConfig& cfg) {
    if (cfg.certs_path.empty())
        throw Error(Status::invalid_argument, "correlate needs --certs");
    const CertificateSet set = load_certificate_file(cfg.certs_path);

    SampleMeta meta;
    const uint64_t universe = uint64_t{1} << (uint64_t{1} << set.n);
    meta.mode = set.records.size() == universe ? SampleMode::full
                                               : SampleMode::uniform_sample;
    meta.seed = cfg.has_seed ? cfg.seed : 0;
    meta.size = set.records.size();
    const CorrelationReport report = correlation_study(set.records, {}, meta);

    ordered_json summary;
    summary["cmd"] = "correlate";
    summary["n"] = report.n;
    summary["mode"] = sample_mode_name(report.meta.mode);
    summary["records"] = set.records.size();
    ordered_json marg = ordered_json::array();
    for (const MarginalRow& m : report.marginal) {
        ordered_json row;
        row["diagnostic"] = m.diagnostic;
        if (m.pearson_defined) {
            row["r"] = m.r;
            row["p_r"] = m.p_r;
        }
        if (m.spearman_defined) {
            row["rho"] = m.rho;
            row["p_rho"] = m.p_rho;
        }
        marg.push_back(std::move(row));
    }
    summary["marginal"] = std::move(marg);
    ordered_json cond = ordered_json::array();
    uint64_t low_power = 0;
    for (const ConditionalRow& c : report.conditional) {
        if (c.low_power) {
            ++low_power;
            continue; // full table lives in the CSV artifact
        }
        ordered_json row;
        row["I_bin"] = static_cast<double>(c.bin_key) / 20.0;
        row["size"] = c.size;
        if (c.rho_mu_defined) {
            row["rho_mu"] = c.rho_mu;
            row["p_mu"] = c.p_mu;
        }
        if (c.rho_h_defined) {
            row["rho_H"] = c.rho_h;
            row["p_H"] = c.p_h;
        }
        cond.push_back(std::move(row));
    }
    summary["conditional"] = std::move(cond);
    summary["low_power_bins"] = low_power;

    if (!cfg.out_path.empty()) {
        guard_overwrite(cfg.out_path, cfg.force);
        write_text_file(cfg.out_path, marginal_csv(report));
        std::filesystem::path cpath(cfg.out_path);
        cpath.replace_extension(".cond.csv");
        guard_overwrite(cpath.string(), cfg.force);
        write_text_file(cpath.string(), conditional_csv(report));
        summary["out"] = cfg.out_path;
        summary["out_conditional"] = cpath.string();
    }
    return {summary.dump(), 0};
}

PipelineResult run_verify(const RunConfig& cfg) {
    if (cfg.certs_path.empty())
        throw Error(Status::invalid_argument, "verify needs --certs");
    const double t0 = now_ms();
    const AuditReport report = audit_certificate_file(cfg.certs_path);

    ordered_json summary;
    summary["cmd"] = "verify";
    summary["n"] = report.n;
    summary["records"] = report.records;
    summary["passed"] = report.passed;
    summary["failed"] = report.failed;
    summary["integer_ops"] = report.integer_ops;
    summary["pass"] = report.pass();
    ordered_json fails = ordered_json::array();
    for (size_t i = 0; i < report.failures.size() && i < 16; ++i) {
        ordered_json row;
        row["fid"] = report.failures[i].fid_hex;
        row["reason"] = report.failures[i].reason;
        fails.push_back(std::move(row));
    }
    summary["failures_head"] = std::move(fails);
    summary["elapsed_ms"] = now_ms() - t0;
    return {summary.dump(), report.pass() ? 0 : 3};
}

} // namespace bbt
