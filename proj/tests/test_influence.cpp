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

#include <cmath>
#include <random>

#include "bbt/fwht.hpp"
#include "bbt/influence.hpp"
#include "bbt/truth_table.hpp"

using namespace bbt;

namespace {

InfluenceVector of_fid(int n, uint64_t fid) {
    return influences(fwht(TruthTable::from_fid(n, fid)));
}

/* Definition-level reference: Inf_l = Pr[f(x) != f(x ^ e_l)]. */
int64_t flip_numerator(const TruthTable& t, int l) {
    // probability scaled by 4^n = (2^n count of disagreeing inputs) * 2^n
    int64_t disagree = 0;
    for (int i = 0; i < t.size(); ++i)
        if (t[i] != t[i ^ (1 << l)])
            ++disagree;
    return disagree << t.n(); // disagree/2^n * 4^n
}

} // namespace

TEST_CASE("influences match the flip definition") {
    for (uint64_t fid = 0; fid < 256; ++fid) {
        const TruthTable t = TruthTable::from_fid(3, fid);
        const InfluenceVector v = influences(fwht(t));
        for (int l = 0; l < 3; ++l)
            REQUIRE(v.numerators[static_cast<size_t>(l)] == flip_numerator(t, l));
    }
    std::mt19937_64 gen(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const TruthTable t = TruthTable::from_fid(5, gen() >> 32);
        const InfluenceVector v = influences(fwht(t));
        for (int l = 0; l < 5; ++l)
            REQUIRE(v.numerators[static_cast<size_t>(l)] == flip_numerator(t, l));
    }
}

TEST_CASE("dictator has one full influence") {
    const InfluenceVector v = of_fid(2, 0xa); // f = x1 (bit 0 set -> -1)
    CHECK(v.numerators[0] == 16);
    CHECK(v.numerators[1] == 0);
    CHECK(v.total == 16);
    CHECK(v.total_influence() == 1);
    CHECK(max_influence(v) == 1);
    CHECK(influence_entropy(v) == doctest::Approx(0.0));
}

TEST_CASE("parity has every influence equal to one") {
    const InfluenceVector v = of_fid(3, 0x96);
    for (int l = 0; l < 3; ++l)
        CHECK(v.influence(l) == 1);
    CHECK(v.total == 3 * 64);
    CHECK(influence_entropy(v) == doctest::Approx(std::log2(3.0)));
}

TEST_CASE("constants are influence-free and entropy reports zero") {
    const InfluenceVector v = of_fid(3, 0);
    CHECK(v.total == 0);
    CHECK(influence_entropy(v) == 0.0);
    CHECK(max_influence(v) == 0);
}
