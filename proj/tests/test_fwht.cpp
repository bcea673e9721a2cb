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

#include <random>

#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/truth_table.hpp"

using namespace bbt;

namespace {

/* Quadratic-time reference: coeffs[S] = sum_i values[i] * (-1)^|i & S|. */
std::vector<int64_t> naive_transform(const TruthTable& t) {
    const int size = t.size();
    std::vector<int64_t> out(static_cast<size_t>(size), 0);
    for (int S = 0; S < size; ++S)
        for (int i = 0; i < size; ++i)
            out[static_cast<size_t>(S)] +=
                index_sign(static_cast<uint32_t>(i), static_cast<uint32_t>(S)) * t[i];
    return out;
}

} // namespace

TEST_CASE("index convention") {
    CHECK(index_sign(0, 0) == 1);
    CHECK(index_sign(1, 1) == -1);
    CHECK(index_sign(3, 1) == -1);
    CHECK(index_sign(3, 3) == 1);
    for (uint32_t i = 0; i < 16; ++i)
        for (uint32_t S = 0; S < 16; ++S)
            CHECK(index_sign(i, S) == index_sign(S, i));
}

TEST_CASE("fid round trip and bit convention") {
    // bit i of fid set <=> values[i] = -1; index 0 is the all-(+1) input
    const TruthTable t = TruthTable::from_fid(2, 0x8);
    CHECK(t[0] == 1);
    CHECK(t[1] == 1);
    CHECK(t[2] == 1);
    CHECK(t[3] == -1);
    CHECK(t.fid() == 0x8);
    CHECK(t.fid_hex() == "0x8");
    CHECK(TruthTable::from_hex(2, "0x8") == t);
    CHECK_THROWS_AS(TruthTable::from_fid(2, 0x10), Error); // stray bit
}

TEST_CASE("fwht equals the quadratic reference") {
    for (int n = 1; n <= 3; ++n) {
        const uint64_t universe = uint64_t{1} << (1 << n);
        for (uint64_t fid = 0; fid < universe; ++fid) {
            const TruthTable t = TruthTable::from_fid(n, fid);
            const IntegerSpectrum s = fwht(t);
            REQUIRE(s.coeffs == naive_transform(t));
        }
    }
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const TruthTable t = TruthTable::from_fid(5, gen() >> 32);
        REQUIRE(fwht(t).coeffs == naive_transform(t));
    }
}

TEST_CASE("parity concentrates on the full set") {
    // parity values are (-1)^popcount(i) => fid 0x96 at n=3
    const TruthTable t = TruthTable::from_fid(3, 0x96);
    const IntegerSpectrum s = fwht(t);
    for (int S = 0; S < 8; ++S)
        CHECK(s.coeffs[static_cast<size_t>(S)] == (S == 7 ? 8 : 0));
}

TEST_CASE("inverse transform is exact and validates integrality") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 40; ++trial) {
        const TruthTable t = TruthTable::from_fid(4, gen() >> 48);
        const IntegerSpectrum s = fwht(t);
        CHECK(fwht_inverse_table(s) == t);
    }
    IntegerSpectrum bad;
    bad.n = 2;
    bad.coeffs = {1, 0, 0, 0}; // H applied gives 1 everywhere, not divisible by 4
    CHECK_THROWS_AS(fwht_inverse(bad), Error);
    try {
        fwht_inverse(bad);
    } catch (const Error& e) {
        CHECK(e.code() == Status::non_integer_result);
    }
}

TEST_CASE("hadamard involution up to 2^n") {
    std::mt19937_64 gen(7);
    std::vector<int64_t> v(16);
    for (auto& x : v)
        x = static_cast<int64_t>(gen() % 41) - 20;
    const std::vector<int64_t> twice = apply_hadamard(apply_hadamard(v));
    for (size_t i = 0; i < v.size(); ++i)
        CHECK(twice[i] == 16 * v[i]);
}

TEST_CASE("parseval") {
    for (uint64_t fid = 0; fid < 16; ++fid)
        CHECK(parseval_holds(fwht(TruthTable::from_fid(2, fid))));
    IntegerSpectrum tampered = fwht(TruthTable::from_fid(2, 0x6));
    tampered.coeffs[0] += 2;
    CHECK_FALSE(parseval_holds(tampered));
}
