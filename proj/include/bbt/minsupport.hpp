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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbt/synthesis.hpp"
#include "bbt/truth_table.hpp"

namespace bbt {

struct BudgetLimits {
    uint64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0;  // 0 = unlimited
    bool unlimited() const { return max_nodes == 0 && max_seconds <= 0; }
};

/* Exact minimum-support certificate. When optimal, no ternary mask of
 * smaller support represents the function (level search is exhaustive).
 * A budget-exhausted solve has optimal=false and carries the best known
 * valid mask if one exists (has_mask=false otherwise). */
struct Certificate {
    uint64_t fid = 0;
    int n = 0;
    bool has_mask = false;
    TernaryMask mask;
    int min_support = 0;
    int64_t margin_min = 0;
    bool optimal = false;
    std::string solver;
    double elapsed_ms = 0.0;
    uint64_t nodes = 0;
};

/* Backend seam: the built-in exact search is always present; adapters for
 * external solvers can register the same shape later. */
struct SolverBackend {
    std::string label;
    bool exact = false;
    bool anytime = false;
};

const SolverBackend& builtin_backend();

/* Iterative-deepening branch and bound over (support set, signs).
 * Levels k = 1, 2, ... are each searched exhaustively; within a level,
 * candidates are ordered by |coefficient| descending with the coefficient
 * sign tried first, and partial masks are cut by a per-row reachability
 * bound and a total-margin dot bound. The first feasible level is re-walked
 * in lexicographic order (ascending set, -1 before +1) so the returned
 * optimum is the lex-least (support set, sign vector) witness. */
Certificate min_support_exact(const TruthTable& f, const BudgetLimits& budget = {});

struct SupportCensus {
    int n = 0;
    std::map<int, uint64_t> counts;       // support -> count (optimal solves)
    uint64_t solved = 0;
    uint64_t exhausted = 0;
    std::vector<uint64_t> exhausted_fids;
    double mean_support = 0.0;
    int max_support = 0;
    bool all_odd = true;
    std::vector<Certificate> certificates; // fid order
};

struct SampleSpec {
    uint64_t count = 0;
    uint64_t seed = 0;
};

/* Census over the full universe (n <= 4) or a sample (n <= 5). Sampling at
 * n=4 is stratified over equal fid ranges; n=5 draws fids uniformly.
 * progress (optional) receives (done, total) now and then from worker
 * threads; it must be cheap and thread-safe. */
SupportCensus support_census(int n, const std::optional<SampleSpec>& sample,
                             const BudgetLimits& budget, int threads = 1,
                             const std::function<void(uint64_t, uint64_t)>& progress = {});

std::string census_csv(const SupportCensus& census);

struct ParityReport {
    uint64_t checked = 0;
    bool margins_match_support_parity = true; // hard theorem-level assertion
    uint64_t odd_support = 0;
    std::vector<uint64_t> even_support_fids;  // monitored expectation, not an error
};

/* Hard check: every margin entry has the support's parity. Soft tally:
 * odd-support share among optimal certificates. */
ParityReport parity_audit(const std::vector<Certificate>& certs);

} // namespace bbt
