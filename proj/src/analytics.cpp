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
#include "bbt/analytics.hpp"

#include <algorithm>
#include <cstdio>

#include "bbt/cancellation.hpp"
#include "bbt/contraction.hpp"
#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/influence.hpp"
#include "bbt/sampling.hpp"
#include "bbt/stats.hpp"
#include "bbt/truth_table.hpp"

namespace bbt {

namespace {

struct FunctionRow {
    uint64_t fid = 0;
    int64_t infl_total = 0;
    Rational log2_mu;
    double mu = 1.0;
    double entropy = 0.0;
    Rational max_inf;
    double cancel_index = 0.0;
    double support = 0.0;
};

std::string fmt4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

CensusReport separation_census(int n) {
    if (n < 1 || n > 4)
        throw Error(Status::invalid_argument, "separation census is exhaustive, n <= 4");
    CensusReport out;
    out.n = n;
    out.universe_size = uint64_t{1} << (uint64_t{1} << n);

    // influence-total level -> exponent -> function count
    std::map<int64_t, std::map<Rational, uint64_t>> levels;
    for (uint64_t fid = 0; fid < out.universe_size; ++fid) {
        const TruthTable f = TruthTable::from_fid(n, fid);
        const InfluenceVector v = influences(fwht(f));
        const ContractionProfile prof = contraction_profile(v);
        levels[v.total][prof.log2_mu] += 1;
    }

    const int64_t four_n = int64_t{1} << (2 * n);
    const Rational witness_a(-2, 3), witness_b(-1, 2);
    for (const auto& [total, spectrum] : levels) {
        uint64_t members = 0, same = 0;
        for (const auto& [r, k] : spectrum) {
            members += k;
            same += k * (k - 1) / 2;
        }
        const uint64_t pairs = members * (members - 1) / 2 - same;
        if (pairs > 0)
            out.separation_by_influence[Rational(total, four_n)] = pairs;
        out.separation_pair_count += pairs;
        if (spectrum.count(witness_a) && spectrum.count(witness_b))
            out.witness_found = true;
    }
    out.degree_histogram = degree_histogram(n);
    return out;
}

std::map<BigInt, uint64_t> degree_histogram(int n) {
    if (n < 1 || n > 4)
        throw Error(Status::invalid_argument, "degree histogram is exhaustive, n <= 4");
    std::map<BigInt, uint64_t> hist;
    const uint64_t universe = uint64_t{1} << (uint64_t{1} << n);
    for (uint64_t fid = 0; fid < universe; ++fid) {
        const TruthTable f = TruthTable::from_fid(n, fid);
        const ContractionProfile prof = contraction_profile(influences(fwht(f)));
        hist[prof.algebraic_degree] += 1;
    }
    return hist;
}

std::string sample_mode_name(SampleMode mode) {
    switch (mode) {
    case SampleMode::full: return "full";
    case SampleMode::uniform_sample: return "uniform-sample";
    case SampleMode::npn_sample: return "npn-sample";
    }
    throw Error(Status::invalid_argument, "bad sample mode");
}

CorrelationReport correlation_study(const std::vector<Certificate>& certs,
                                    const std::vector<std::string>& diagnostics,
                                    const SampleMeta& meta) {
    std::vector<FunctionRow> rows;
    int n = 0;
    for (const Certificate& c : certs) {
        if (!c.optimal || !c.has_mask)
            continue; // exhausted solves carry no trustworthy support value
        if (n == 0)
            n = c.n;
        else if (n != c.n)
            throw Error(Status::invalid_argument, "mixed n in certificate list");
        FunctionRow row;
        row.fid = c.fid;
        const InfluenceVector v = influences(fwht(TruthTable::from_fid(c.n, c.fid)));
        const ContractionProfile prof = contraction_profile(v);
        row.infl_total = v.total;
        row.log2_mu = prof.log2_mu;
        row.mu = prof.mu_float;
        row.entropy = influence_entropy(v);
        row.max_inf = max_influence(v);
        row.cancel_index = layer_cancellation(c.mask).cancellation_index;
        row.support = static_cast<double>(c.min_support);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error(Status::invalid_argument, "no optimal certificates to correlate");

    CorrelationReport out;
    out.n = n;
    out.meta = meta;
    if (out.meta.size == 0)
        out.meta.size = rows.size();

    std::vector<double> support(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        support[i] = rows[i].support;

    const std::vector<std::string> all = {"I",       "mu",      "log2_mu",
                                          "H_inf",   "max_inf", "cancellation"};
    std::vector<std::string> selected = diagnostics.empty() ? all : diagnostics;
    for (const std::string& name : selected) {
        if (std::find(all.begin(), all.end(), name) == all.end())
            throw Error(Status::invalid_argument, "unknown diagnostic: " + name);
        std::vector<double> x(rows.size());
        std::vector<Rational> xr;
        bool exact_ranks = false;
        const int64_t four_n = int64_t{1} << (2 * n);
        if (name == "I") {
            exact_ranks = true;
            xr.reserve(rows.size());
            for (size_t i = 0; i < rows.size(); ++i) {
                x[i] = static_cast<double>(rows[i].infl_total) / static_cast<double>(four_n);
                xr.emplace_back(rows[i].infl_total, four_n);
            }
        } else if (name == "mu" || name == "log2_mu") {
            exact_ranks = true; // mu and log2(mu) share ranks, compared exactly
            xr.reserve(rows.size());
            for (size_t i = 0; i < rows.size(); ++i) {
                x[i] = name == "mu" ? rows[i].mu : to_double(rows[i].log2_mu);
                xr.push_back(rows[i].log2_mu);
            }
        } else if (name == "H_inf") {
            for (size_t i = 0; i < rows.size(); ++i)
                x[i] = rows[i].entropy;
        } else if (name == "max_inf") {
            exact_ranks = true;
            xr.reserve(rows.size());
            for (size_t i = 0; i < rows.size(); ++i) {
                x[i] = to_double(rows[i].max_inf);
                xr.push_back(rows[i].max_inf);
            }
        } else { // cancellation
            for (size_t i = 0; i < rows.size(); ++i)
                x[i] = rows[i].cancel_index;
        }

        MarginalRow m;
        m.diagnostic = name;
        const PearsonResult pr = pearson(x, support);
        m.pearson_defined = pr.defined;
        if (pr.defined) {
            m.r = pr.r;
            m.p_r = correlation_p(pr.r, rows.size()).display;
        } else {
            m.p_r = "n/a";
        }
        const SpearmanResult sp =
            exact_ranks ? spearman(xr, support) : spearman(x, support);
        m.spearman_defined = sp.defined;
        if (sp.defined) {
            m.rho = sp.rho;
            m.p_rho = sp.p_display;
        } else {
            m.p_rho = "n/a";
        }
        out.marginal.push_back(std::move(m));
    }

    // conditional table: Spearman within each influence bin
    std::map<int, std::vector<size_t>> bins;
    for (size_t i = 0; i < rows.size(); ++i)
        bins[influence_bin_key(rows[i].infl_total, n)].push_back(i);
    for (const auto& [key, members] : bins) {
        ConditionalRow c;
        c.bin_key = key;
        c.size = members.size();
        c.low_power = members.size() < 50;
        std::vector<Rational> mu_in;
        std::vector<double> h_in, sup_in;
        mu_in.reserve(members.size());
        h_in.reserve(members.size());
        sup_in.reserve(members.size());
        for (size_t i : members) {
            mu_in.push_back(rows[i].log2_mu);
            h_in.push_back(rows[i].entropy);
            sup_in.push_back(rows[i].support);
        }
        const SpearmanResult smu = spearman(mu_in, sup_in);
        c.rho_mu_defined = smu.defined;
        c.rho_mu = smu.rho;
        c.p_mu = smu.defined ? smu.p_display : "n/a";
        const SpearmanResult sh = spearman(h_in, sup_in);
        c.rho_h_defined = sh.defined;
        c.rho_h = sh.rho;
        c.p_h = sh.defined ? sh.p_display : "n/a";
        out.conditional.push_back(std::move(c));
    }
    return out;
}

std::string marginal_csv(const CorrelationReport& report) {
    std::string out = "diagnostic,r,p,rho,p\n";
    for (const MarginalRow& m : report.marginal) {
        out += m.diagnostic;
        out += ',';
        out += m.pearson_defined ? fmt4(m.r) : "n/a";
        out += ',';
        out += m.p_r;
        out += ',';
        out += m.spearman_defined ? fmt4(m.rho) : "n/a";
        out += ',';
        out += m.p_rho;
        out += '\n';
    }
    return out;
}

std::string conditional_csv(const CorrelationReport& report) {
    std::string out = "I_bin,bin_size,rho_mu,p,rho_H,p\n";
    for (const ConditionalRow& c : report.conditional) {
        char head[64];
        std::snprintf(head, sizeof head, "%.2f,%llu,", static_cast<double>(c.bin_key) / 20.0,
                      static_cast<unsigned long long>(c.size));
        out += head;
        out += c.rho_mu_defined ? fmt4(c.rho_mu) : "n/a";
        out += ',';
        out += c.p_mu;
        out += ',';
        out += c.rho_h_defined ? fmt4(c.rho_h) : "n/a";
        out += ',';
        out += c.p_h;
        out += '\n';
    }
    return out;
}

std::vector<uint64_t> sampler(SampleMode mode, int n, uint64_t size, uint64_t seed,
                              const NpnUniverse* universe) {
    if (n < 1 || n > 6)
        throw Error(Status::invalid_argument, "sampler supports n in [1,6]");
    if (mode == SampleMode::uniform_sample)
        return sample_fids_uniform(n, size, seed);
    if (mode == SampleMode::npn_sample) {
        if (universe == nullptr || universe->n != n)
            throw Error(Status::io_error,
                        "canonical universe for this n is missing; enumerate it first");
        if (size > universe->canonical_fids.size())
            throw Error(Status::invalid_argument, "sample larger than universe");
        const std::vector<uint64_t> idx =
            sample_without_replacement(universe->canonical_fids.size(), size, seed);
        std::vector<uint64_t> fids;
        fids.reserve(idx.size());
        for (uint64_t i : idx)
            fids.push_back(universe->canonical_fids[i]);
        return fids;
    }
    throw Error(Status::invalid_argument, "sampler needs an explicit sample mode");
}

} // namespace bbt
