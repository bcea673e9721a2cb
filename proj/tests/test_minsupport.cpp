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

#include <cstdint>
#include <vector>

#include "bbt/fwht.hpp"
#include "bbt/minsupport.hpp"
#include "bbt/synthesis.hpp"
#include "bbt/truth_table.hpp"

using namespace bbt;

namespace {

/* Reference evaluation by the dense character sum, independent of the
 * butterfly cascade used inside the solver. */
std::vector<int64_t> oracle_eval(int n, const std::vector<int8_t>& w) {
    const uint32_t size = uint32_t{1} << n;
    std::vector<int64_t> y(size, 0);
    for (uint32_t i = 0; i < size; ++i)
        for (uint32_t s = 0; s < size; ++s)
            if (w[s] != 0)
                y[i] += int64_t{index_sign(i, s)} * w[s];
    return y;
}

int64_t oracle_margin(const TruthTable& f, const std::vector<int8_t>& w) {
    const std::vector<int64_t> y = oracle_eval(f.n(), w);
    int64_t margin = INT64_MAX;
    for (uint32_t i = 0; i < f.size(); ++i) {
        const int64_t m = int64_t{f.values()[i]} * y[i];
        if (m < margin)
            margin = m;
    }
    return margin;
}

struct OracleWitness {
    int support = 0;
    std::vector<int8_t> w;
    int64_t margin = 0;
};

/* Exhaustive reference: grow k, walk k-subsets of character indices in
 * lexicographic order, and within a subset walk sign vectors with -1
 * ordered before +1 (earlier subset positions vary slowest). The first
 * representing mask found this way is the lex-least witness at the
 * smallest support. */
OracleWitness oracle_min_support(const TruthTable& f) {
    const uint32_t size = f.size();
    for (int k = 1; k <= static_cast<int>(size); ++k) {
        std::vector<uint32_t> idx(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
            idx[static_cast<size_t>(j)] = static_cast<uint32_t>(j);
        while (true) {
            for (uint64_t m = 0; m < (uint64_t{1} << k); ++m) {
                std::vector<int8_t> w(size, 0);
                for (int j = 0; j < k; ++j) {
                    const bool plus = (m >> (k - 1 - j)) & 1;
                    w[idx[static_cast<size_t>(j)]] = plus ? 1 : -1;
                }
                const int64_t margin = oracle_margin(f, w);
                if (margin >= 1)
                    return OracleWitness{k, w, margin};
            }
            int j = k - 1;
            while (j >= 0 &&
                   idx[static_cast<size_t>(j)] == size - uint32_t(k - j))
                --j;
            if (j < 0)
                break;
            ++idx[static_cast<size_t>(j)];
            for (int t = j + 1; t < k; ++t)
                idx[static_cast<size_t>(t)] =
                    idx[static_cast<size_t>(t - 1)] + 1;
        }
    }
    return OracleWitness{};
}

} // namespace

TEST_CASE("exact solver matches the exhaustive oracle on every n=2 function") {
    for (uint64_t fid = 0; fid < 16; ++fid) {
        const TruthTable f = TruthTable::from_fid(2, fid);
        const Certificate cert = min_support_exact(f);
        const OracleWitness ref = oracle_min_support(f);
        CAPTURE(fid);
        REQUIRE(cert.optimal);
        REQUIRE(cert.has_mask);
        CHECK(cert.min_support == ref.support);
        CHECK(cert.margin_min == ref.margin);
        CHECK(cert.mask.w == ref.w);
    }
}

TEST_CASE("exact solver matches the exhaustive oracle on every n=3 function") {
    for (uint64_t fid = 0; fid < 256; ++fid) {
        const TruthTable f = TruthTable::from_fid(3, fid);
        const Certificate cert = min_support_exact(f);
        const OracleWitness ref = oracle_min_support(f);
        CAPTURE(fid);
        REQUIRE(cert.optimal);
        REQUIRE(cert.has_mask);
        REQUIRE(cert.mask.w.size() == 8);
        CHECK(cert.min_support == ref.support);
        CHECK(cert.mask.support() == ref.support);
        CHECK(cert.margin_min == ref.margin);
        CHECK(cert.mask.w == ref.w);
        CHECK(cert.margin_min >= 1);
        CHECK((cert.margin_min - cert.min_support) % 2 == 0);
        CHECK(cert.nodes > 0);
        CHECK_FALSE(cert.solver.empty());
    }
}

TEST_CASE("single characters get support-1 certificates with the + sign") {
    const TruthTable parity = TruthTable::from_fid(3, 0x96);
    const Certificate cert = min_support_exact(parity);
    REQUIRE(cert.optimal);
    CHECK(cert.min_support == 1);
    CHECK(cert.margin_min == 1);
    REQUIRE(cert.mask.w.size() == 8);
    CHECK(cert.mask.w[7] == 1);
    CHECK(cert.mask.support() == 1);
}

TEST_CASE("repeat solves return the identical lex-least witness") {
    const TruthTable f = TruthTable::from_fid(3, 0xe8);
    const Certificate a = min_support_exact(f);
    const Certificate b = min_support_exact(f);
    REQUIRE(a.has_mask);
    REQUIRE(b.has_mask);
    CHECK(a.mask.w == b.mask.w);
    CHECK(a.min_support == b.min_support);
    CHECK(a.margin_min == b.margin_min);
}

TEST_CASE("an exhausted node budget yields a non-optimal incumbent") {
    const TruthTable f = TruthTable::from_fid(3, 0xfe);
    BudgetLimits budget;
    budget.max_nodes = 1;
    const Certificate cert = min_support_exact(f, budget);
    CHECK_FALSE(cert.optimal);
    REQUIRE(cert.has_mask); // multi-start synthesis covers all of n=3
    const VerifyResult vr = verify(cert.mask, f);
    CHECK(vr.ok);
    CHECK(cert.margin_min == vr.margin);
    CHECK(cert.min_support == cert.mask.support());
    const Certificate exact = min_support_exact(f);
    CHECK(cert.min_support >= exact.min_support);
}

TEST_CASE("full n=2 census: supports split 8/8 across 1 and 3") {
    const SupportCensus census = support_census(2, std::nullopt, {});
    CHECK(census.n == 2);
    CHECK(census.solved == 16);
    CHECK(census.exhausted == 0);
    REQUIRE(census.counts.size() == 2);
    CHECK(census.counts.at(1) == 8);
    CHECK(census.counts.at(3) == 8);
    CHECK(census.mean_support == doctest::Approx(2.0));
    CHECK(census.max_support == 3);
    CHECK(census.all_odd);
    REQUIRE(census.certificates.size() == 16);
    for (size_t i = 0; i < census.certificates.size(); ++i) {
        CHECK(census.certificates[i].fid == i); // fid-sorted
        CHECK(census.certificates[i].optimal);
    }
    const ParityReport parity = parity_audit(census.certificates);
    CHECK(parity.checked == 16);
    CHECK(parity.margins_match_support_parity);
    CHECK(parity.odd_support == 16);
    CHECK(parity.even_support_fids.empty());
}

TEST_CASE("sampled censuses are reproducible for a fixed seed") {
    SampleSpec spec;
    spec.count = 12;
    spec.seed = 7;
    const SupportCensus a = support_census(4, spec, {});
    const SupportCensus b = support_census(4, spec, {});
    REQUIRE(a.certificates.size() == 12);
    REQUIRE(b.certificates.size() == 12);
    for (size_t i = 0; i < a.certificates.size(); ++i) {
        CHECK(a.certificates[i].fid == b.certificates[i].fid);
        CHECK(a.certificates[i].min_support == b.certificates[i].min_support);
        CHECK(a.certificates[i].mask.w == b.certificates[i].mask.w);
    }
    CHECK(a.counts == b.counts);
}

TEST_CASE("census progress callback reaches the final count") {
    uint64_t last_done = 0;
    uint64_t last_total = 0;
    support_census(2, std::nullopt, {}, 1, [&](uint64_t done, uint64_t total) {
        last_done = done;
        last_total = total;
    });
    CHECK(last_done == 16);
    CHECK(last_total == 16);
}

TEST_CASE("census csv lists one row per support value") {
    const SupportCensus census = support_census(2, std::nullopt, {});
    const std::string csv = census_csv(census);
    CHECK(csv.rfind("support,count,fraction\n", 0) == 0);
    CHECK(csv.find("1,8,0.500000\n") != std::string::npos);
    CHECK(csv.find("3,8,0.500000\n") != std::string::npos);
}
