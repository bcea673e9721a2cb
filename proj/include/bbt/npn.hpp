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
#include <functional>
#include <string>
#include <vector>

#include "bbt/truth_table.hpp"

namespace bbt {

/* Orbit element: permute inputs, negate a subset of inputs, optionally negate
 * the output. Group size 2 * 2^n * n!. */
struct NpnTransform {
    std::vector<int> perm;     // image of each coordinate, 0-based
    uint32_t negate_mask = 0;  // bit j: negate input j+1
    bool negate_output = false;
};

TruthTable apply_transform(const TruthTable& f, const NpnTransform& t);

/* Lex-least fid over the whole orbit; n <= 5. */
uint64_t canonicalize(const TruthTable& f);

struct NpnUniverse {
    int n = 0;
    std::vector<uint64_t> canonical_fids; // ascending
    uint64_t class_count = 0;
};

/* Ascending-fid orbit marking. n=5 allocates a 2^32-bit visited bitmap
 * (512 MiB); progress callback (optional) receives fids processed so far. */
NpnUniverse enumerate_universe(int n,
                               const std::function<void(uint64_t)>& progress = {});

/* Universe file: "{"n":N,"count":C}" header line then one hex fid per line. */
std::string universe_to_text(const NpnUniverse& u);
NpnUniverse universe_from_text(const std::string& text);

struct InvarianceReport {
    uint64_t functions = 0;
    uint64_t transforms_checked = 0;
    bool total_influence_invariant = true;
    bool log2_mu_invariant = true;
    bool influence_multiset_invariant = true;
    uint64_t min_support_checked = 0;
    bool min_support_invariant = true;
};

/* For each sampled fid, applies random orbit elements and checks that total
 * influence, the exact contraction exponent, and the influence multiset are
 * unchanged; min_support is compared where check_min_support allows. */
InvarianceReport npn_invariance_audit(int n, const std::vector<uint64_t>& fids,
                                      int transforms_per_function, uint64_t seed,
                                      bool check_min_support);

} // namespace bbt
