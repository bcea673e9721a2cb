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
#include <map>
#include <string>
#include <vector>

#include "bbt/minsupport.hpp"
#include "bbt/npn.hpp"
#include "bbt/rational.hpp"

namespace bbt {

struct CensusReport {
    int n = 0;
    uint64_t universe_size = 0;
    /* unordered pairs {f,g} with exactly equal total influence but different
     * contraction exponents, plus the same count split by influence level */
    uint64_t separation_pair_count = 0;
    std::map<Rational, uint64_t> separation_by_influence;
    bool witness_found = false; // equal-I pair with exponents -2/3 vs -1/2
    std::map<BigInt, uint64_t> degree_histogram;
};

/* Exhaustive pass over all 2^(2^n) functions; n <= 3. */
CensusReport separation_census(int n);

/* Histogram of the exact algebraic degree of the contraction exponent. */
std::map<BigInt, uint64_t> degree_histogram(int n);

enum class SampleMode { full, uniform_sample, npn_sample };

std::string sample_mode_name(SampleMode mode);

struct SampleMeta {
    SampleMode mode = SampleMode::full;
    uint64_t seed = 0;
    uint64_t size = 0;
};

struct MarginalRow {
    std::string diagnostic;
    bool pearson_defined = false;
    double r = 0.0;
    std::string p_r;
    bool spearman_defined = false;
    double rho = 0.0;
    std::string p_rho;
};

struct ConditionalRow {
    int bin_key = 0; // influence rounded to 0.05 steps, times 20
    uint64_t size = 0;
    bool low_power = false; // fewer than 50 members
    bool rho_mu_defined = false;
    double rho_mu = 0.0;
    std::string p_mu;
    bool rho_h_defined = false;
    double rho_h = 0.0;
    std::string p_h;
};

struct CorrelationReport {
    int n = 0;
    SampleMeta meta;
    std::vector<MarginalRow> marginal;
    std::vector<ConditionalRow> conditional;
    std::string p_method = "t-approx";
};

/* Marginal Pearson/Spearman of each diagnostic against optimal support plus
 * the conditional per-influence-bin Spearman table. Only optimal
 * certificates contribute. diagnostics empty = all of
 * {I, mu, log2_mu, H_inf, max_inf, cancellation}. */
CorrelationReport correlation_study(const std::vector<Certificate>& certs,
                                    const std::vector<std::string>& diagnostics,
                                    const SampleMeta& meta);

std::string marginal_csv(const CorrelationReport& report);
std::string conditional_csv(const CorrelationReport& report);

/* Reproducible fid sample; npn mode draws canonical reps without
 * replacement and requires the enumerated universe. */
std::vector<uint64_t> sampler(SampleMode mode, int n, uint64_t size, uint64_t seed,
                              const NpnUniverse* universe = nullptr);

} // namespace bbt
