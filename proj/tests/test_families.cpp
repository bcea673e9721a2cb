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

#include "bbt/error.hpp"
#include "bbt/families.hpp"

using namespace bbt;

namespace {

TruthTable make(FamilyKind kind, int n, int k = 1) {
    FamilySpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.k = k;
    return generate(spec);
}

} // namespace

TEST_CASE("family truth tables at small n") {
    CHECK(make(FamilyKind::parity, 3).fid() == 0x96);
    CHECK(make(FamilyKind::dictator, 3, 1).fid() == 0xaa);
    CHECK(make(FamilyKind::dictator, 3, 3).fid() == 0xf0);
    CHECK(make(FamilyKind::and_, 2).fid() == 0xe);  // +1 only on the all-true input
    CHECK(make(FamilyKind::or_, 2).fid() == 0x8);   // -1 only on the all-false input
    CHECK(make(FamilyKind::majority, 3).fid() == 0xe8);
}

TEST_CASE("tribes with one-wide blocks degenerates to or") {
    CHECK(make(FamilyKind::tribes, 3).fid() == make(FamilyKind::or_, 3).fid());
}

TEST_CASE("tribes partition uses complete blocks only") {
    FamilySpec spec;
    spec.kind = FamilyKind::tribes;
    spec.n = 5; // width floor(log2 5) = 2 -> blocks {1,2}, {3,4}; 5 unused
    const auto blocks = tribes_partition(spec);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{1, 2});
    CHECK(blocks[1] == std::vector<int>{3, 4});
}

TEST_CASE("explicit tribes blocks are validated") {
    FamilySpec spec;
    spec.kind = FamilyKind::tribes;
    spec.n = 3;
    spec.tribes_blocks = {{1, 2}, {2, 3}}; // overlap
    CHECK_THROWS_AS(tribes_partition(spec), Error);
    spec.tribes_blocks = {{1, 4}}; // out of range
    CHECK_THROWS_AS(tribes_partition(spec), Error);
}

TEST_CASE("majority requires odd n") {
    CHECK_THROWS_AS(make(FamilyKind::majority, 4), Error);
}

TEST_CASE("family name round trip") {
    for (const auto kind : {FamilyKind::parity, FamilyKind::majority, FamilyKind::dictator,
                            FamilyKind::and_, FamilyKind::or_, FamilyKind::tribes})
        CHECK(parse_family_kind(family_kind_name(kind)) == kind);
    CHECK_THROWS_AS(parse_family_kind("xor"), Error);
}

TEST_CASE("scaling rows at n=3 match the published column") {
    const std::vector<ScalingRow> rows = scaling_table({3});
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].family == "parity");
    CHECK(to_fixed2(rows[0].log2_mu) == "-1.50");
    CHECK(rows[0].log2_mu == make_rational(-3, 2));
    CHECK(rows[1].family == "majority");
    CHECK(to_fixed2(rows[1].log2_mu) == "-1.00");
    CHECK(rows[2].family == "dictator");
    CHECK(to_fixed2(rows[2].log2_mu) == "-0.50");
    CHECK(rows[3].family == "and");
    CHECK(to_fixed2(rows[3].log2_mu) == "-0.60");
    CHECK(rows[4].family == "tribes");
    CHECK(to_fixed2(rows[4].log2_mu) == "-0.60");
}

TEST_CASE("scaling rejects even n") {
    CHECK_THROWS_AS(scaling_table({4}), Error);
}

TEST_CASE("scaling csv shape") {
    const std::string csv = scaling_table_csv(scaling_table({3, 5}));
    CHECK(csv.rfind("family,n,log2_mu_exact,log2_mu_2dp\n", 0) == 0);
    CHECK(csv.find("parity,3,-3/2,-1.50") != std::string::npos);
    CHECK(csv.find("parity,5,-5/2,-2.50") != std::string::npos);
}
