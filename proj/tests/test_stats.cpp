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

#include "bbt/rational.hpp"
#include "bbt/stats.hpp"

using namespace bbt;

TEST_CASE("pearson on a hand-checked sample") {
    // scipy.stats.pearsonr reference values
    const std::vector<double> x = {3, 1, 4, 1, 5, 9, 2, 6};
    const std::vector<double> y = {2, 7, 1, 8, 2, 8, 1, 8};
    const PearsonResult p = pearson(x, y);
    REQUIRE(p.defined);
    CHECK(p.r == doctest::Approx(0.209655319073012).epsilon(1e-12));
}

TEST_CASE("pearson degenerate inputs are undefined") {
    CHECK_FALSE(pearson({1, 1, 1}, {1, 2, 3}).defined);
    CHECK_FALSE(pearson({1, 2, 3}, {4, 4, 4}).defined);
    CHECK_FALSE(pearson({1}, {2}).defined);
    CHECK(pearson({1, 2}, {2, 1}).defined);
}

TEST_CASE("average ranks share ties") {
    const std::vector<double> v = {10.0, 10.0, 30.0};
    const std::vector<double> r = average_ranks(v);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(1.5));
    CHECK(r[1] == doctest::Approx(1.5));
    CHECK(r[2] == doctest::Approx(3.0));
}

TEST_CASE("rational ranks agree with their double counterparts") {
    const std::vector<Rational> v = {make_rational(-1, 2), make_rational(-3, 2),
                                     make_rational(-1, 2), make_rational(0, 1)};
    const std::vector<double> r = average_ranks(v);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == doctest::Approx(2.5));
    CHECK(r[1] == doctest::Approx(1.0));
    CHECK(r[2] == doctest::Approx(2.5));
    CHECK(r[3] == doctest::Approx(4.0));
}

TEST_CASE("spearman against scipy references") {
    SUBCASE("ties on both sides") {
        const std::vector<double> x = {3, 1, 4, 1, 5, 9, 2, 6};
        const std::vector<double> y = {2, 7, 1, 8, 2, 8, 1, 8};
        const SpearmanResult s = spearman(x, y);
        REQUIRE(s.defined);
        CHECK(s.rho == doctest::Approx(0.198853681209925).epsilon(1e-12));
        CHECK(s.p_value == doctest::Approx(0.6368617833).epsilon(1e-6));
        CHECK(s.p_display.substr(0, 6) == "0.6369");
    }
    SUBCASE("tie-free") {
        const std::vector<double> x = {1, 2, 3, 4, 5, 6};
        const std::vector<double> y = {2, 1, 4, 3, 6, 5};
        const SpearmanResult s = spearman(x, y);
        REQUIRE(s.defined);
        CHECK(s.rho == doctest::Approx(0.828571428571429).epsilon(1e-12));
        CHECK(s.p_value == doctest::Approx(0.04156268222).epsilon(1e-6));
    }
}

TEST_CASE("perfect monotone agreement floors the p display") {
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {10, 20, 30, 40};
    const SpearmanResult s = spearman(x, y);
    REQUIRE(s.defined);
    CHECK(s.rho == doctest::Approx(1.0));
    CHECK(s.p_display == "<1e-300");
}

TEST_CASE("too-small samples report no p value") {
    const SpearmanResult s = spearman(std::vector<double>{1, 2},
                                      std::vector<double>{2, 1});
    CHECK(s.p_display == "n/a");
}

TEST_CASE("exact-rational ranking drives the overload") {
    // -1/2 < -1/3 < 0 ordering is exact even where doubles would tie
    const std::vector<Rational> x = {make_rational(-1, 3), make_rational(-1, 2),
                                     make_rational(0, 1)};
    const std::vector<double> y = {2, 1, 3};
    const SpearmanResult s = spearman(x, y);
    REQUIRE(s.defined);
    CHECK(s.rho == doctest::Approx(1.0));
}

TEST_CASE("correlation p helper") {
    CHECK(correlation_p(0.5, 2).display == "n/a");
    CHECK(correlation_p(1.0, 10).display == "<1e-300");
    const CorrelationP p = correlation_p(0.209655319073012, 8);
    CHECK(p.p_value == doctest::Approx(0.6182637176).epsilon(1e-6));
    CHECK(p.display.substr(0, 6) == "0.6183");
}

TEST_CASE("influence bin keys round half to even") {
    // key = 20 * total / 4^n, computed exactly on integers
    CHECK(influence_bin_key(448, 4) == 35);   // 1.75 -> 35 exactly
    CHECK(influence_bin_key(2458, 5) == 48);  // 2.4004 -> 48
    CHECK(influence_bin_key(0, 3) == 0);
    CHECK(influence_bin_key(64, 3) == 20);    // total influence 1
    // half-integers: 2.5 -> 2, 7.5 -> 8
    CHECK(influence_bin_key(8, 3) == 2);
    CHECK(influence_bin_key(24, 3) == 8);
}