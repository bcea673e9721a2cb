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

#include "bbt/contraction.hpp"
#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/influence.hpp"
#include "bbt/truth_table.hpp"

using namespace bbt;

namespace {

ContractionProfile profile_of(int n, uint64_t fid) {
    return contraction_profile(influences(fwht(TruthTable::from_fid(n, fid))));
}

} // namespace

TEST_CASE("dictator exponent is -1/2 with degree 2") {
    const ContractionProfile p = profile_of(2, 0xa);
    CHECK(p.log2_mu == make_rational(-1, 2));
    CHECK(p.algebraic_degree == 2);
    CHECK(p.exponents[0] == 2);
    CHECK(p.exponents[1] == 1);
    CHECK(p.mu_float == doctest::Approx(std::exp2(-0.5)));
}

TEST_CASE("parity exponent is -n/2") {
    const ContractionProfile p = profile_of(3, 0x96);
    CHECK(p.log2_mu == make_rational(-3, 2));
    for (const Rational& e : p.exponents)
        CHECK(e == 2);
}

TEST_CASE("constants contract nothing") {
    const ContractionProfile p = profile_of(3, 0);
    CHECK(p.log2_mu == 0);
    CHECK(p.algebraic_degree == 1);
    CHECK(p.mu_float == doctest::Approx(1.0));
}

TEST_CASE("bounds hold exhaustively at n <= 3 and parity Jensen slack is zero") {
    for (int n = 1; n <= 3; ++n) {
        const uint64_t universe = uint64_t{1} << (1 << n);
        for (uint64_t fid = 0; fid < universe; ++fid) {
            const InfluenceVector v = influences(fwht(TruthTable::from_fid(n, fid)));
            const BoundsReport rep = check_bounds(contraction_profile(v), v);
            REQUIRE(rep.pass);
        }
    }
    const InfluenceVector v = influences(fwht(TruthTable::from_fid(3, 0x96)));
    const BoundsReport rep = check_bounds(contraction_profile(v), v);
    CHECK(rep.jensen_slack == 0);
}

TEST_CASE("schur comparison") {
    SUBCASE("strict majorization lowers phi") {
        const SchurVerdict v = schur_compare({Rational(1), Rational(0)},
                                             {make_rational(1, 2), make_rational(1, 2)});
        CHECK(v.majorizes);
        CHECK_FALSE(v.is_permutation);
        CHECK(v.phi_x == make_rational(1, 2));
        CHECK(v.phi_y == make_rational(2, 3));
        CHECK(v.strict_holds);
    }
    SUBCASE("permutations tie") {
        const SchurVerdict v = schur_compare({Rational(1), Rational(2)},
                                             {Rational(2), Rational(1)});
        CHECK(v.majorizes);
        CHECK(v.is_permutation);
        CHECK_FALSE(v.strict_holds);
        CHECK(v.phi_x == v.phi_y);
    }
    SUBCASE("unequal sums are rejected") {
        CHECK_THROWS_AS(schur_compare({Rational(1)}, {Rational(2)}), Error);
        try {
            schur_compare({Rational(1)}, {Rational(2)});
        } catch (const Error& e) {
            CHECK(e.code() == Status::unequal_sums);
        }
    }
    SUBCASE("incomparable vectors do not majorize") {
        const SchurVerdict v =
            schur_compare({make_rational(1, 2), make_rational(1, 2), Rational(0)},
                          {make_rational(3, 4), make_rational(1, 8), make_rational(1, 8)});
        CHECK_FALSE(v.majorizes);
    }
}

TEST_CASE("butterfly operator norms") {
    CHECK(butterfly_opnorm(1.0) == doctest::Approx(2.0));
    CHECK(butterfly_opnorm(2.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(butterfly_opnorm(4.0) == doctest::Approx(std::exp2(0.75)));
    CHECK(butterfly_opnorm(INFINITY) == doctest::Approx(2.0));
    CHECK_THROWS_AS(butterfly_opnorm(0.5), Error);

    for (const double p : {1.0, 1.25, 1.5, 2.0, 3.0, 64.0}) {
        const OpnormReport rep = verify_opnorm_numeric(p, 20000, 1234);
        CHECK(rep.bound_respected);
        CHECK(rep.maximizer_attains);
        CHECK(rep.clarkson_ok);
    }
}

TEST_CASE("norm propagation under the contraction factor") {
    for (const double infl : {0.0, 0.25, 0.5, 1.0}) {
        const NormPropReport rep = norm_propagation_check(infl, 64, 500, 7);
        CHECK(rep.pass);
        CHECK(rep.factor == doctest::Approx(std::exp2(-infl / (1.0 + infl))));
    }
    CHECK_THROWS_AS(norm_propagation_check(1.5, 64, 10, 7), Error);
}
