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

#include <string>
#include <vector>

#include "bbt/rational.hpp"
#include "bbt/truth_table.hpp"

namespace bbt {

enum class FamilyKind { parity, majority, dictator, and_, or_, tribes };

/* Family descriptor. For dictator, k is the 1-based coordinate. For tribes,
 * tribes_width = 0 selects the default width floor(log2 n); only complete
 * blocks of consecutive coordinates are formed, trailing coordinates are
 * unused. An explicit tribes_blocks partition (1-based coordinate lists)
 * overrides the width. */
struct FamilySpec {
    FamilyKind kind = FamilyKind::parity;
    int n = 0;
    int k = 1;
    int tribes_width = 0;
    std::vector<std::vector<int>> tribes_blocks;
};

FamilyKind parse_family_kind(const std::string& name);
std::string family_kind_name(FamilyKind kind);

/* Resolved tribes partition for the given spec (also validates it). */
std::vector<std::vector<int>> tribes_partition(const FamilySpec& spec);

TruthTable generate(const FamilySpec& spec);

struct ScalingRow {
    std::string family;
    int n = 0;
    Rational log2_mu;
};

/* Full analysis pipeline per (family, n) for the five canonical families,
 * in row order parity, majority, dictator, and, tribes. Each n must be odd
 * (majority needs it) and at most 15. */
std::vector<ScalingRow> scaling_table(const std::vector<int>& n_values);

/* CSV with columns family,n,log2_mu_exact,log2_mu_2dp. */
std::string scaling_table_csv(const std::vector<ScalingRow>& rows);

} // namespace bbt
