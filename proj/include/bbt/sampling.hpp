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
#include <random>
#include <utility>
#include <vector>

#include "bbt/error.hpp"

namespace bbt {

/* All sampling in the library uses mt19937_64 seeded directly and always
 * consumes the generator's high bits, so sampled sets are reproducible from
 * (n, count, seed) alone. */

/* Uniform fid in [0, 2^(2^n)) for n <= 6, from the top 2^n bits per draw. */
inline uint64_t draw_fid(std::mt19937_64& gen, int n) {
    const int bits = 1 << n;
    return bits == 64 ? gen() : gen() >> (64 - bits);
}

/* Uniform integer in [0, bound) by rejection on the high bits; unbiased. */
inline uint64_t draw_below(std::mt19937_64& gen, uint64_t bound) {
    if (bound == 0)
        throw Error(Status::invalid_argument, "empty draw range");
    int bits = 0;
    while (bits < 64 && (uint64_t{1} << bits) < bound)
        ++bits;
    for (;;) {
        const uint64_t v = bits == 64 ? gen() : bits == 0 ? 0 : gen() >> (64 - bits);
        if (v < bound)
            return v;
    }
}

/* count independent uniform fids (rare duplicates kept, order preserved). */
inline std::vector<uint64_t> sample_fids_uniform(int n, uint64_t count, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(count));
    for (uint64_t i = 0; i < count; ++i)
        out.push_back(draw_fid(gen, n));
    return out;
}

/* count distinct indices from [0, universe) via sparse partial Fisher-Yates. */
inline std::vector<uint64_t> sample_without_replacement(uint64_t universe,
                                                        uint64_t count, uint64_t seed) {
    if (count > universe)
        throw Error(Status::invalid_argument, "sample larger than universe");
    std::mt19937_64 gen(seed);
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<std::pair<uint64_t, uint64_t>> moved; // tiny, linear scan
    auto lookup = [&](uint64_t idx) {
        for (const auto& kv : moved)
            if (kv.first == idx)
                return kv.second;
        return idx;
    };
    auto store = [&](uint64_t idx, uint64_t val) {
        for (auto& kv : moved)
            if (kv.first == idx) {
                kv.second = val;
                return;
            }
        moved.emplace_back(idx, val);
    };
    for (uint64_t i = 0; i < count; ++i) {
        const uint64_t j = i + draw_below(gen, universe - i);
        const uint64_t vj = lookup(j);
        store(j, lookup(i));
        out.push_back(vj);
    }
    return out;
}

/* Stratified fid sample: count equal fid-range strata, one draw each. */
inline std::vector<uint64_t> sample_fids_stratified(int n, uint64_t count,
                                                    uint64_t seed) {
    if (n > 5)
        throw Error(Status::invalid_argument, "stratified sampling supports n <= 5");
    const uint64_t universe = uint64_t{1} << (uint64_t{1} << n);
    if (count == 0 || count > universe)
        throw Error(Status::invalid_argument, "bad stratified sample size");
    std::mt19937_64 gen(seed);
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(count));
    for (uint64_t s = 0; s < count; ++s) {
        const uint64_t lo = universe / count * s + universe % count * s / count;
        const uint64_t hi =
            universe / count * (s + 1) + universe % count * (s + 1) / count;
        out.push_back(lo + draw_below(gen, hi - lo));
    }
    return out;
}

} // namespace bbt
