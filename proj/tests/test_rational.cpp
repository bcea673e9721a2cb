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

using namespace bbt;

TEST_CASE("rationals reduce to lowest terms") {
    const Rational q = make_rational(2, 4);
    CHECK(num(q) == 1);
    CHECK(den(q) == 2);
    CHECK(to_string(q) == "1/2");
    CHECK(to_string(make_rational(-4, 6)) == "-2/3");
    CHECK(to_string(Rational(0)) == "0/1");
}

TEST_CASE("denominator stays positive") {
    const Rational q = make_rational(1, -2);
    CHECK(num(q) == -1);
    CHECK(den(q) == 2);
}

TEST_CASE("bigint overload") {
    const BigInt a = BigInt(1) << 100;
    const Rational q = make_rational(a, a * 2);
    CHECK(to_string(q) == "1/2");
}

TEST_CASE("fixed 2dp formatting") {
    CHECK(to_fixed2(make_rational(-2, 3)) == "-0.67");
    CHECK(to_fixed2(make_rational(-1, 2)) == "-0.50");
    CHECK(to_fixed2(make_rational(-3, 2)) == "-1.50");
    CHECK(to_fixed2(Rational(0)) == "0.00");
    CHECK(to_fixed2(make_rational(1, 1)) == "1.00");
}

TEST_CASE("exact comparisons survive values doubles cannot hold") {
    const Rational a = make_rational(1, (1LL << 62)) + make_rational(1, 3);
    const Rational b = make_rational(1, 3);
    CHECK(a > b);
    CHECK(a - b == make_rational(1, 1LL << 62));
}

TEST_CASE("to_double") {
    CHECK(to_double(make_rational(1, 2)) == doctest::Approx(0.5));
    CHECK(to_double(make_rational(-2, 3)) == doctest::Approx(-2.0 / 3.0));
}
