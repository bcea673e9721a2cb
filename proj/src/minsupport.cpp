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
#include "bbt/minsupport.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <numeric>

#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/parallel.hpp"
#include "bbt/sampling.hpp"

namespace bbt {

const SolverBackend& builtin_backend() {
    static const SolverBackend backend{"bb-exact", true, true};
    return backend;
}

namespace {

using Clock = std::chrono::steady_clock;

struct LevelSearch {
    const std::vector<int8_t>* fv = nullptr;
    const std::vector<int64_t>* coeffs = nullptr;
    size_t size = 0;
    int k = 0;
    int64_t margin_target = 0;
    int64_t dot_target = 0;
    std::vector<uint32_t> cand;                   // branch order
    std::vector<std::vector<int64_t>> suffix_top; // [pos][r]: r largest |c| from pos on
    bool lex_mode = false;

    uint64_t* nodes = nullptr;
    uint64_t max_nodes = 0;
    bool timed = false;
    Clock::time_point deadline;
    bool exhausted = false;

    std::vector<int8_t> w;
    std::vector<int64_t> y;
    int64_t dot = 0;
    bool found = false;
    std::vector<int8_t> witness;

    void build_suffix_top() {
        suffix_top.assign(cand.size() + 1, {});
        for (size_t pos = 0; pos <= cand.size(); ++pos) {
            std::vector<int64_t> tail;
            tail.reserve(cand.size() - pos);
            for (size_t t = pos; t < cand.size(); ++t)
                tail.push_back(std::llabs((*coeffs)[cand[t]]));
            std::sort(tail.begin(), tail.end(), std::greater<int64_t>());
            std::vector<int64_t> sums(tail.size() + 1, 0);
            for (size_t r = 0; r < tail.size(); ++r)
                sums[r + 1] = sums[r] + tail[r];
            suffix_top[pos] = std::move(sums);
        }
    }

    bool over_budget() {
        if (max_nodes != 0 && *nodes > max_nodes) {
            exhausted = true;
            return true;
        }
        if (timed && (*nodes & 0xFFF) == 0 && Clock::now() > deadline) {
            exhausted = true;
            return true;
        }
        return false;
    }

    void dfs(size_t pos, int chosen) {
        if (found || exhausted)
            return;
        ++*nodes;
        if (over_budget())
            return;

        const int remaining = k - chosen;
        if (remaining == 0) {
            int64_t worst = INT64_MAX;
            for (size_t i = 0; i < size; ++i)
                worst = std::min(worst, static_cast<int64_t>((*fv)[i]) * y[i]);
            if (worst >= margin_target) {
                found = true;
                witness = w;
            }
            return;
        }
        if (cand.size() - pos < static_cast<size_t>(remaining))
            return;
        if (dot + suffix_top[pos][static_cast<size_t>(remaining)] < dot_target)
            return;
        int64_t worst = INT64_MAX;
        for (size_t i = 0; i < size; ++i)
            worst = std::min(worst, static_cast<int64_t>((*fv)[i]) * y[i]);
        if (worst + remaining < margin_target)
            return;

        const uint32_t S = cand[pos];
        const int64_t c = (*coeffs)[S];
        int8_t first = 1, second = -1;
        if (lex_mode) {
            first = -1;
            second = 1;
        } else if (c < 0) {
            first = -1;
            second = 1;
        }
        for (int branch = 0; branch < 2 && !found && !exhausted; ++branch) {
            const int8_t sign = branch == 0 ? first : second;
            w[S] = sign;
            dot += sign * c;
            for (size_t i = 0; i < size; ++i)
                y[i] += sign * index_sign(static_cast<uint32_t>(i), S);
            dfs(pos + 1, chosen + 1);
            for (size_t i = 0; i < size; ++i)
                y[i] -= sign * index_sign(static_cast<uint32_t>(i), S);
            dot -= sign * c;
            w[S] = 0;
        }
        if (!found && !exhausted)
            dfs(pos + 1, chosen); // leave S out
    }
};

bool run_level(const TruthTable& f, const IntegerSpectrum& spectrum, int k,
               bool lex_mode, uint64_t* nodes, const BudgetLimits& budget,
               Clock::time_point start, std::vector<int8_t>* witness,
               bool* exhausted) {
    LevelSearch search;
    search.fv = &f.values();
    search.coeffs = &spectrum.coeffs;
    search.size = f.values().size();
    search.k = k;
    search.margin_target = (k % 2 == 0) ? 2 : 1; // margins share the support parity
    search.dot_target = static_cast<int64_t>(search.size) * search.margin_target;
    search.lex_mode = lex_mode;
    search.nodes = nodes;
    search.max_nodes = budget.max_nodes;
    if (budget.max_seconds > 0) {
        search.timed = true;
        search.deadline =
            start + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds));
    }

    search.cand.resize(search.size);
    std::iota(search.cand.begin(), search.cand.end(), uint32_t{0});
    if (!lex_mode) {
        std::sort(search.cand.begin(), search.cand.end(),
                  [&](uint32_t a, uint32_t b) {
                      const int64_t ca = std::llabs(spectrum.coeffs[a]);
                      const int64_t cb = std::llabs(spectrum.coeffs[b]);
                      return ca != cb ? ca > cb : a < b;
                  });
    }
    search.build_suffix_top();
    search.w.assign(search.size, 0);
    search.y.assign(search.size, 0);

    search.dfs(0, 0);
    if (search.exhausted)
        *exhausted = true;
    if (search.found)
        *witness = std::move(search.witness);
    return search.found;
}

Certificate exhausted_certificate(const TruthTable& f, uint64_t nodes,
                                  Clock::time_point start) {
    Certificate cert;
    cert.fid = f.fid();
    cert.n = f.n();
    cert.optimal = false;
    cert.solver = builtin_backend().label;
    cert.nodes = nodes;
    const SynthesisResult incumbent = multi_start_repair(f);
    if (incumbent.has_mask) {
        cert.has_mask = true;
        cert.mask = incumbent.mask;
        cert.min_support = incumbent.mask.support();
        cert.margin_min = verify(incumbent.mask, f).margin;
    }
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return cert;
}

} // namespace

Certificate min_support_exact(const TruthTable& f, const BudgetLimits& budget) {
    if (f.n() > 5)
        throw Error(Status::invalid_argument, "exact search supports n <= 5");
    const Clock::time_point start = Clock::now();
    const IntegerSpectrum spectrum = fwht(f);
    uint64_t nodes = 0;

    for (int k = 1; k <= static_cast<int>(f.values().size()); ++k) {
        bool exhausted = false;
        std::vector<int8_t> witness;
        const bool feasible = run_level(f, spectrum, k, /*lex_mode=*/false, &nodes,
                                        budget, start, &witness, &exhausted);
        if (exhausted)
            return exhausted_certificate(f, nodes, start);
        if (!feasible)
            continue;

        /* Deterministic witness: lex-least (support set, sign vector). */
        std::vector<int8_t> lex_witness;
        bool lex_exhausted = false;
        const bool lex_found = run_level(f, spectrum, k, /*lex_mode=*/true, &nodes,
                                         budget, start, &lex_witness, &lex_exhausted);
        Certificate cert;
        cert.fid = f.fid();
        cert.n = f.n();
        cert.has_mask = true;
        cert.mask = TernaryMask(f.n(), lex_found ? std::move(lex_witness)
                                                 : std::move(witness));
        cert.min_support = k;
        cert.margin_min = verify(cert.mask, f).margin;
        cert.optimal = true;
        cert.solver = builtin_backend().label;
        cert.nodes = nodes;
        cert.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return cert;
    }

    throw Error(Status::synthesis_failed,
                "no ternary mask at any support level (anomaly)");
}

SupportCensus support_census(int n, const std::optional<SampleSpec>& sample,
                             const BudgetLimits& budget, int threads,
                             const std::function<void(uint64_t, uint64_t)>& progress) {
    if (n < 1 || n > 5)
        throw Error(Status::invalid_argument, "census supports 1 <= n <= 5");
    if (n == 5 && !sample)
        throw Error(Status::invalid_argument, "n=5 census must be sampled");

    std::vector<uint64_t> fids;
    if (sample) {
        if (sample->count == 0)
            throw Error(Status::invalid_argument, "empty sample");
        if (n <= 4)
            fids = sample_fids_stratified(n, sample->count, sample->seed);
        else
            fids = sample_fids_uniform(n, sample->count, sample->seed);
    } else {
        const uint64_t universe = uint64_t{1} << (uint64_t{1} << n);
        fids.resize(universe);
        std::iota(fids.begin(), fids.end(), uint64_t{0});
    }
    std::sort(fids.begin(), fids.end()); // aggregate in fid order

    std::vector<Certificate> certs(fids.size());
    std::atomic<uint64_t> done{0};
    parallel_for(fids.size(), threads, [&](uint64_t i) {
        certs[i] = min_support_exact(TruthTable::from_fid(n, fids[i]), budget);
        const uint64_t d = done.fetch_add(1, std::memory_order_relaxed) + 1;
        if (progress && (d % 512 == 0 || d == fids.size()))
            progress(d, fids.size());
    });

    SupportCensus census;
    census.n = n;
    uint64_t support_sum = 0;
    for (auto& cert : certs) {
        if (!cert.optimal) {
            ++census.exhausted;
            census.exhausted_fids.push_back(cert.fid);
        } else {
            ++census.solved;
            ++census.counts[cert.min_support];
            support_sum += static_cast<uint64_t>(cert.min_support);
            census.max_support = std::max(census.max_support, cert.min_support);
            if (cert.min_support % 2 == 0)
                census.all_odd = false;
        }
        census.certificates.push_back(std::move(cert));
    }
    if (census.solved > 0)
        census.mean_support =
            static_cast<double>(support_sum) / static_cast<double>(census.solved);
    return census;
}

std::string census_csv(const SupportCensus& census) {
    std::string out = "support,count,fraction\n";
    for (const auto& [support, count] : census.counts) {
        char line[96];
        std::snprintf(line, sizeof line, "%d,%llu,%.6f\n", support,
                      static_cast<unsigned long long>(count),
                      census.solved ? static_cast<double>(count) /
                                          static_cast<double>(census.solved)
                                    : 0.0);
        out += line;
    }
    return out;
}

ParityReport parity_audit(const std::vector<Certificate>& certs) {
    ParityReport report;
    for (const auto& cert : certs) {
        if (!cert.has_mask)
            continue;
        ++report.checked;
        const TruthTable f = TruthTable::from_fid(cert.n, cert.fid);
        const VerifyResult res = verify(cert.mask, f);
        const int parity = cert.mask.support() % 2;
        for (int64_t m : res.margin_vector)
            if (((m % 2) + 2) % 2 != parity)
                report.margins_match_support_parity = false;
        if (!cert.optimal)
            continue;
        if (cert.min_support % 2 == 1)
            ++report.odd_support;
        else
            report.even_support_fids.push_back(cert.fid);
    }
    return report;
}

} // namespace bbt
