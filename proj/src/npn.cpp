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
#include "bbt/npn.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <new>
#include <numeric>
#include <sstream>

#include "bbt/contraction.hpp"
#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/influence.hpp"
#include "bbt/minsupport.hpp"
#include "bbt/sampling.hpp"

namespace bbt {

TruthTable apply_transform(const TruthTable& f, const NpnTransform& t) {
    const int n = f.n();
    if (static_cast<int>(t.perm.size()) != n)
        throw Error(Status::invalid_argument, "permutation arity mismatch");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int image : t.perm) {
        if (image < 0 || image >= n || seen[static_cast<size_t>(image)])
            throw Error(Status::invalid_argument, "not a permutation");
        seen[static_cast<size_t>(image)] = true;
    }
    if (n < 32 && (t.negate_mask >> n) != 0)
        throw Error(Status::invalid_argument, "negation mask out of range");

    const size_t size = f.values().size();
    std::vector<int8_t> values(size);
    const int8_t s = t.negate_output ? int8_t{-1} : int8_t{1};
    for (size_t i = 0; i < size; ++i) {
        /* source index: bit k of sigma(i) = bit perm[k] of i, xor negations */
        size_t src = 0;
        for (int k = 0; k < n; ++k) {
            const unsigned bit =
                static_cast<unsigned>((i >> t.perm[static_cast<size_t>(k)]) & 1) ^
                ((t.negate_mask >> k) & 1u);
            src |= static_cast<size_t>(bit) << k;
        }
        values[i] = static_cast<int8_t>(s * f.values()[src]);
    }
    return TruthTable(n, std::move(values));
}

namespace {

/* Byte-scatter tables: for each input permutation x input negation, fid bits
 * move by table lookup in 8-bit chunks. Output negation is fid complement. */
struct MapTables {
    int n = 0;
    int chunks = 0;
    size_t map_count = 0;
    std::vector<uint32_t> table; // [(map * chunks + chunk) * 256 + byte]

    uint32_t apply(size_t map, uint32_t fid) const {
        const uint32_t* base = table.data() + map * static_cast<size_t>(chunks) * 256;
        uint32_t out = 0;
        for (int c = 0; c < chunks; ++c)
            out |= base[static_cast<size_t>(c) * 256 + ((fid >> (8 * c)) & 0xFF)];
        return out;
    }
};

MapTables build_map_tables(int n) {
    if (n < 1 || n > 5)
        throw Error(Status::invalid_argument, "orbit tables support n <= 5");
    const uint32_t size = uint32_t{1} << n;
    MapTables tables;
    tables.n = n;
    tables.chunks = static_cast<int>((size + 7) / 8);

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    tables.map_count = perms.size() << n;
    tables.table.assign(tables.map_count * static_cast<size_t>(tables.chunks) * 256, 0);

    /* Where bit j of f lands in g: invert sigma.  With sigma(i) bit k =
     * (i bit p[k]) xor (m bit k), the inverse scatters bit k of (j xor m)
     * to position p[k]. */
    std::vector<uint32_t> land(size);
    size_t map = 0;
    for (const auto& p : perms) {
        for (uint32_t m = 0; m < size; ++m, ++map) {
            for (uint32_t j = 0; j < size; ++j) {
                const uint32_t jm = j ^ m;
                uint32_t pos = 0;
                for (int k = 0; k < n; ++k)
                    pos |= ((jm >> k) & 1u) << p[static_cast<size_t>(k)];
                land[j] = pos;
            }
            uint32_t* base =
                tables.table.data() + map * static_cast<size_t>(tables.chunks) * 256;
            for (int c = 0; c < tables.chunks; ++c) {
                uint32_t* row = base + static_cast<size_t>(c) * 256;
                for (uint32_t byte = 0; byte < 256; ++byte) {
                    uint32_t out = 0;
                    for (int b = 0; b < 8; ++b) {
                        const uint32_t j = static_cast<uint32_t>(8 * c + b);
                        if (j < size && ((byte >> b) & 1u))
                            out |= uint32_t{1} << land[j];
                    }
                    row[byte] = out;
                }
            }
        }
    }
    return tables;
}

const MapTables& cached_tables(int n) {
    static std::mutex mutex;
    static MapTables cache[6];
    std::lock_guard<std::mutex> lock(mutex);
    if (cache[n].n != n)
        cache[n] = build_map_tables(n);
    return cache[n];
}

uint64_t fid_complement(int n, uint64_t fid) {
    const int bits = 1 << n;
    return bits == 64 ? ~fid : fid ^ ((uint64_t{1} << bits) - 1);
}

} // namespace

uint64_t canonicalize(const TruthTable& f) {
    if (f.n() > 5)
        throw Error(Status::invalid_argument, "canonicalize supports n <= 5");
    const MapTables& tables = cached_tables(f.n());
    const uint32_t fid = static_cast<uint32_t>(f.fid());
    uint64_t best = UINT64_MAX;
    for (size_t map = 0; map < tables.map_count; ++map) {
        const uint32_t g = tables.apply(map, fid);
        best = std::min(best, static_cast<uint64_t>(g));
        best = std::min(best, fid_complement(f.n(), g));
    }
    return best;
}

NpnUniverse enumerate_universe(int n, const std::function<void(uint64_t)>& progress) {
    if (n < 2 || n > 5)
        throw Error(Status::invalid_argument, "universe enumeration supports 2 <= n <= 5");
    const MapTables& tables = cached_tables(n);
    const uint64_t universe = uint64_t{1} << (uint64_t{1} << n);

    std::vector<uint64_t> visited;
    try {
        visited.assign(static_cast<size_t>((universe + 63) / 64), 0);
    } catch (const std::bad_alloc&) {
        throw Error(Status::out_of_memory,
                    "visited bitmap allocation failed (n=5 needs 512 MiB)");
    }
    auto test = [&](uint64_t fid) {
        return (visited[static_cast<size_t>(fid >> 6)] >> (fid & 63)) & 1;
    };
    auto set = [&](uint64_t fid) {
        visited[static_cast<size_t>(fid >> 6)] |= uint64_t{1} << (fid & 63);
    };

    NpnUniverse out;
    out.n = n;
    const uint64_t progress_step = uint64_t{1} << 24;
    for (uint64_t fid = 0; fid < universe; ++fid) {
        if (progress && (fid & (progress_step - 1)) == 0)
            progress(fid);
        if (test(fid))
            continue;
        out.canonical_fids.push_back(fid);
        for (size_t map = 0; map < tables.map_count; ++map) {
            const uint32_t g = tables.apply(map, static_cast<uint32_t>(fid));
            set(g);
            set(fid_complement(n, g));
        }
    }
    if (progress)
        progress(universe);
    out.class_count = out.canonical_fids.size();
    return out;
}

std::string universe_to_text(const NpnUniverse& u) {
    std::string out = "{\"n\":" + std::to_string(u.n) +
                      ",\"count\":" + std::to_string(u.class_count) + "}\n";
    out.reserve(out.size() + u.canonical_fids.size() * 8);
    for (uint64_t fid : u.canonical_fids) {
        out += fid_to_hex(fid);
        out += '\n';
    }
    return out;
}

NpnUniverse universe_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw Error(Status::corrupt_record, "empty universe file");
    NpnUniverse u;
    unsigned long long count = 0;
    if (std::sscanf(line.c_str(), "{\"n\":%d,\"count\":%llu}", &u.n, &count) != 2)
        throw Error(Status::corrupt_record, "bad universe header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            u.canonical_fids.push_back(parse_fid_hex(line));
        } catch (const Error&) {
            throw Error(Status::corrupt_record,
                        "bad universe line: " + line);
        }
    }
    u.class_count = u.canonical_fids.size();
    if (u.class_count != count)
        throw Error(Status::corrupt_record, "universe count mismatch");
    return u;
}

InvarianceReport npn_invariance_audit(int n, const std::vector<uint64_t>& fids,
                                      int transforms_per_function, uint64_t seed,
                                      bool check_min_support) {
    if (n > 5)
        throw Error(Status::invalid_argument, "audit supports n <= 5");
    std::mt19937_64 gen(seed);
    InvarianceReport report;
    for (uint64_t fid : fids) {
        const TruthTable f = TruthTable::from_fid(n, fid);
        const InfluenceVector base_infl = influences(fwht(f));
        const ContractionProfile base_prof = contraction_profile(base_infl);
        std::vector<int64_t> base_multiset = base_infl.numerators;
        std::sort(base_multiset.begin(), base_multiset.end());
        int base_support = -1;
        if (check_min_support)
            base_support = min_support_exact(f).min_support;
        ++report.functions;

        for (int t = 0; t < transforms_per_function; ++t) {
            NpnTransform tf;
            tf.perm.resize(static_cast<size_t>(n));
            std::iota(tf.perm.begin(), tf.perm.end(), 0);
            for (int k = n - 1; k > 0; --k)
                std::swap(tf.perm[static_cast<size_t>(k)],
                          tf.perm[static_cast<size_t>(
                              draw_below(gen, static_cast<uint64_t>(k + 1)))]);
            tf.negate_mask =
                static_cast<uint32_t>(draw_below(gen, uint64_t{1} << n));
            tf.negate_output = draw_below(gen, 2) == 1;

            const TruthTable g = apply_transform(f, tf);
            const InfluenceVector gi = influences(fwht(g));
            const ContractionProfile gp = contraction_profile(gi);
            ++report.transforms_checked;
            if (gi.total != base_infl.total)
                report.total_influence_invariant = false;
            if (gp.log2_mu != base_prof.log2_mu)
                report.log2_mu_invariant = false;
            std::vector<int64_t> multiset = gi.numerators;
            std::sort(multiset.begin(), multiset.end());
            if (multiset != base_multiset)
                report.influence_multiset_invariant = false;
            if (check_min_support) {
                ++report.min_support_checked;
                if (min_support_exact(g).min_support != base_support)
                    report.min_support_invariant = false;
            }
        }
    }
    return report;
}

} // namespace bbt
