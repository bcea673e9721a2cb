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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bbt/analytics.hpp"
#include "bbt/error.hpp"
#include "bbt/minsupport.hpp"
#include "bbt/npn.hpp"

using namespace bbt;

TEST_CASE("n=2 separation census, worked by hand") {
    // At total influence 1 the universe holds the four single characters
    // (exponent -1/2) and the eight two-level threshold functions
    // (exponent -2/3): C(12,2) - C(4,2) - C(8,2) = 32 separated pairs.
    const CensusReport report = separation_census(2);
    CHECK(report.n == 2);
    CHECK(report.universe_size == 16);
    CHECK(report.separation_pair_count == 32);
    REQUIRE(report.separation_by_influence.size() == 1);
    const auto& [level, pairs] = *report.separation_by_influence.begin();
    CHECK(level == make_rational(1, 1));
    CHECK(pairs == 32);
    CHECK(report.witness_found); // -2/3 and -1/2 meet at influence 1
    REQUIRE(report.degree_histogram.size() == 3);
    CHECK(report.degree_histogram.at(BigInt(1)) == 4);
    CHECK(report.degree_histogram.at(BigInt(2)) == 4);
    CHECK(report.degree_histogram.at(BigInt(3)) == 8);
}

TEST_CASE("n=3 separation census") {
    const CensusReport report = separation_census(3);
    CHECK(report.universe_size == 256);
    CHECK(report.separation_pair_count == 288);
    REQUIRE(report.separation_by_influence.size() == 2);
    uint64_t sum = 0;
    for (const auto& [level, pairs] : report.separation_by_influence) {
        CHECK(pairs == 144);
        sum += pairs;
    }
    CHECK(sum == report.separation_pair_count);
    CHECK(report.witness_found);
}

TEST_CASE("n=3 exact degree histogram") {
    const std::map<BigInt, uint64_t> hist = degree_histogram(3);
    const std::map<BigInt, uint64_t> expected = {
        {BigInt(1), 72}, {BigInt(2), 8},  {BigInt(3), 24}, {BigInt(5), 16},
        {BigInt(6), 24}, {BigInt(7), 16}, {BigInt(35), 96}};
    CHECK(hist == expected);
    uint64_t total = 0;
    for (const auto& [deg, count] : hist)
        total += count;
    CHECK(total == 256);
}

TEST_CASE("correlation study over the full n=2 universe") {
    const SupportCensus census = support_census(2, std::nullopt, {});
    SampleMeta meta;
    meta.mode = SampleMode::full;
    meta.size = census.certificates.size();
    const std::vector<std::string> diagnostics = {"I",     "mu",      "log2_mu",
                                                  "H_inf", "max_inf", "cancellation"};
    const CorrelationReport report =
        correlation_study(census.certificates, diagnostics, meta);
    CHECK(report.n == 2);
    CHECK(report.p_method == "t-approx");
    CHECK(sample_mode_name(report.meta.mode) == "full");

    REQUIRE(report.marginal.size() == diagnostics.size());
    for (size_t i = 0; i < diagnostics.size(); ++i) {
        CHECK(report.marginal[i].diagnostic == diagnostics[i]);
        REQUIRE(report.marginal[i].spearman_defined);
        CHECK(std::abs(report.marginal[i].rho) <= 1.0);
    }

    // bins: I=0 holds the constants, I=1 the characters plus the
    // threshold functions, I=2 the two parities
    REQUIRE(report.conditional.size() == 3);
    CHECK(report.conditional[0].bin_key == 0);
    CHECK(report.conditional[0].size == 2);
    CHECK_FALSE(report.conditional[0].rho_mu_defined);
    CHECK(report.conditional[1].bin_key == 20);
    CHECK(report.conditional[1].size == 12);
    REQUIRE(report.conditional[1].rho_mu_defined);
    CHECK(report.conditional[1].rho_mu == doctest::Approx(-1.0));
    CHECK(report.conditional[1].p_mu == "<1e-300");
    REQUIRE(report.conditional[1].rho_h_defined);
    CHECK(report.conditional[1].rho_h == doctest::Approx(1.0));
    CHECK(report.conditional[2].bin_key == 40);
    CHECK(report.conditional[2].size == 2);
    CHECK_FALSE(report.conditional[2].rho_mu_defined);
    for (const ConditionalRow& row : report.conditional)
        CHECK(row.low_power); // nothing reaches 50 members at n=2

    SUBCASE("study is deterministic") {
        const CorrelationReport again =
            correlation_study(census.certificates, diagnostics, meta);
        REQUIRE(again.marginal.size() == report.marginal.size());
        for (size_t i = 0; i < report.marginal.size(); ++i) {
            CHECK(again.marginal[i].rho ==
                  doctest::Approx(report.marginal[i].rho));
            CHECK(again.marginal[i].p_rho == report.marginal[i].p_rho);
        }
    }

    SUBCASE("csv emitters") {
        const std::string marg = marginal_csv(report);
        CHECK(marg.rfind("diagnostic,r,p,rho,p\n", 0) == 0);
        CHECK(marg.find("\nI,") != std::string::npos);
        CHECK(marg.find("\ncancellation,") != std::string::npos);
        const std::string cond = conditional_csv(report);
        CHECK(cond.rfind("I_bin,bin_size,rho_mu,p,rho_H,p\n", 0) == 0);
        CHECK(cond.find("\n1.00,12,") != std::string::npos);
        CHECK(cond.find("n/a") != std::string::npos); // degenerate bins
    }
}

TEST_CASE("uniform sampler is seed-reproducible and in range") {
    const std::vector<uint64_t> a = sampler(SampleMode::uniform_sample, 4, 100, 42);
    const std::vector<uint64_t> b = sampler(SampleMode::uniform_sample, 4, 100, 42);
    const std::vector<uint64_t> c = sampler(SampleMode::uniform_sample, 4, 100, 43);
    REQUIRE(a.size() == 100);
    CHECK(a == b);
    CHECK(a != c);
    for (uint64_t fid : a)
        CHECK(fid < 65536);
}

TEST_CASE("npn sampler draws distinct canonical representatives") {
    const NpnUniverse u = enumerate_universe(3);
    const std::vector<uint64_t> draw =
        sampler(SampleMode::npn_sample, 3, 5, 9, &u);
    REQUIRE(draw.size() == 5);
    const std::set<uint64_t> distinct(draw.begin(), draw.end());
    CHECK(distinct.size() == 5); // without replacement
    for (uint64_t fid : draw)
        CHECK(std::binary_search(u.canonical_fids.begin(),
                                 u.canonical_fids.end(), fid));
    CHECK(draw == sampler(SampleMode::npn_sample, 3, 5, 9, &u));
}

TEST_CASE("sampler argument validation") {
    const NpnUniverse u = enumerate_universe(2);
    try {
        sampler(SampleMode::npn_sample, 2, 2, 1, nullptr);
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.code() == Status::io_error);
    }
    CHECK_THROWS_AS(sampler(SampleMode::npn_sample, 2, 5, 1, &u), Error);
    CHECK_THROWS_AS(sampler(SampleMode::full, 2, 1, 1), Error);
}