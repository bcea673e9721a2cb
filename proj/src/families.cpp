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
#include "bbt/families.hpp"

#include <bit>
#include <cstdint>

#include "bbt/contraction.hpp"
#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/influence.hpp"

namespace bbt {

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "parity")
        return FamilyKind::parity;
    if (name == "majority" || name == "maj")
        return FamilyKind::majority;
    if (name == "dictator")
        return FamilyKind::dictator;
    if (name == "and")
        return FamilyKind::and_;
    if (name == "or")
        return FamilyKind::or_;
    if (name == "tribes")
        return FamilyKind::tribes;
    throw Error(Status::invalid_argument, "unknown family: " + name);
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::parity:
        return "parity";
    case FamilyKind::majority:
        return "majority";
    case FamilyKind::dictator:
        return "dictator";
    case FamilyKind::and_:
        return "and";
    case FamilyKind::or_:
        return "or";
    case FamilyKind::tribes:
        return "tribes";
    }
    throw Error(Status::internal, "bad family kind");
}

std::vector<std::vector<int>> tribes_partition(const FamilySpec& spec) {
    if (spec.n < 1 || spec.n > 20)
        throw Error(Status::invalid_argument, "tribes needs 1 <= n <= 20");
    if (!spec.tribes_blocks.empty()) {
        std::vector<bool> used(static_cast<size_t>(spec.n), false);
        for (const auto& block : spec.tribes_blocks) {
            if (block.empty())
                throw Error(Status::invalid_argument, "empty tribes block");
            for (int c : block) {
                if (c < 1 || c > spec.n)
                    throw Error(Status::invalid_argument, "tribes coordinate out of range");
                if (used[static_cast<size_t>(c - 1)])
                    throw Error(Status::invalid_argument, "tribes blocks overlap");
                used[static_cast<size_t>(c - 1)] = true;
            }
        }
        return spec.tribes_blocks;
    }
    int w = spec.tribes_width;
    if (w == 0)
        w = spec.n >= 2 ? std::bit_width(static_cast<unsigned>(spec.n)) - 1 : 1;
    if (w < 1 || w > spec.n)
        throw Error(Status::invalid_argument, "bad tribes width");
    const int s = spec.n / w;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(s));
    for (int b = 0; b < s; ++b) {
        std::vector<int> block;
        block.reserve(static_cast<size_t>(w));
        for (int j = 0; j < w; ++j)
            block.push_back(b * w + j + 1);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

TruthTable generate(const FamilySpec& spec) {
    if (spec.n < 1 || spec.n > 20)
        throw Error(Status::invalid_argument, "family needs 1 <= n <= 20");
    const size_t size = size_t{1} << spec.n;
    std::vector<int8_t> values(size);

    switch (spec.kind) {
    case FamilyKind::parity:
        for (size_t i = 0; i < size; ++i)
            values[i] = (std::popcount(i) & 1) ? int8_t{-1} : int8_t{1};
        break;
    case FamilyKind::majority: {
        if ((spec.n & 1) == 0)
            throw Error(Status::invalid_argument, "majority needs odd n");
        const int thresh = (spec.n - 1) / 2;
        for (size_t i = 0; i < size; ++i)
            values[i] = (std::popcount(i) <= thresh) ? int8_t{1} : int8_t{-1};
        break;
    }
    case FamilyKind::dictator: {
        if (spec.k < 1 || spec.k > spec.n)
            throw Error(Status::invalid_argument, "dictator coordinate out of range");
        const size_t bit = size_t{1} << (spec.k - 1);
        for (size_t i = 0; i < size; ++i)
            values[i] = (i & bit) ? int8_t{-1} : int8_t{1};
        break;
    }
    case FamilyKind::and_:
        for (size_t i = 0; i < size; ++i)
            values[i] = (i == 0) ? int8_t{1} : int8_t{-1};
        break;
    case FamilyKind::or_:
        for (size_t i = 0; i < size; ++i)
            values[i] = (i == size - 1) ? int8_t{-1} : int8_t{1};
        break;
    case FamilyKind::tribes: {
        const auto blocks = tribes_partition(spec);
        std::vector<size_t> masks;
        masks.reserve(blocks.size());
        for (const auto& block : blocks) {
            size_t m = 0;
            for (int c : block)
                m |= size_t{1} << (c - 1);
            masks.push_back(m);
        }
        for (size_t i = 0; i < size; ++i) {
            bool any = false;
            for (size_t m : masks)
                if ((i & m) == 0) {
                    any = true;
                    break;
                }
            values[i] = any ? int8_t{1} : int8_t{-1};
        }
        break;
    }
    }
    return TruthTable(spec.n, std::move(values));
}

std::vector<ScalingRow> scaling_table(const std::vector<int>& n_values) {
    static const FamilyKind order[] = {FamilyKind::parity, FamilyKind::majority,
                                       FamilyKind::dictator, FamilyKind::and_,
                                       FamilyKind::tribes};
    for (int n : n_values)
        if (n < 1 || n > 15 || (n & 1) == 0)
            throw Error(Status::invalid_argument, "scaling table needs odd n <= 15");

    std::vector<ScalingRow> rows;
    rows.reserve(5 * n_values.size());
    for (FamilyKind kind : order) {
        for (int n : n_values) {
            FamilySpec spec;
            spec.kind = kind;
            spec.n = n;
            const TruthTable table = generate(spec);
            const IntegerSpectrum spectrum = fwht(table);
            const InfluenceVector infl = influences(spectrum);
            const ContractionProfile profile = contraction_profile(infl);
            rows.push_back({family_kind_name(kind), n, profile.log2_mu});
        }
    }
    return rows;
}

std::string scaling_table_csv(const std::vector<ScalingRow>& rows) {
    std::string out = "family,n,log2_mu_exact,log2_mu_2dp\n";
    for (const auto& row : rows) {
        out += row.family;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += to_string(row.log2_mu);
        out += ',';
        out += to_fixed2(row.log2_mu);
        out += '\n';
    }
    return out;
}

} // namespace bbt
