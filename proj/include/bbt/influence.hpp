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
#include <vector>

#include "bbt/fwht.hpp"
#include "bbt/rational.hpp"

namespace bbt {

/* Coordinate influences as exact numerators over 4^n:
 * Inf_l = numerators[l-1] / 4^n, I(f) = total / 4^n. */
struct InfluenceVector {
    int n = 0;
    std::vector<int64_t> numerators;
    int64_t total = 0;

    int64_t four_n() const { return int64_t{1} << (2 * n); }
    Rational influence(int l) const { return Rational(numerators[static_cast<size_t>(l)], four_n()); }
    Rational total_influence() const { return Rational(total, four_n()); }
};

InfluenceVector influences(const IntegerSpectrum& s);

/* Shannon entropy (base 2) of the normalized influence distribution
 * p_l = Inf_l / I; zero-influence terms contribute nothing and constants
 * (I = 0) report 0 so census pipelines never see a NaN. */
double influence_entropy(const InfluenceVector& v);

Rational max_influence(const InfluenceVector& v);

} // namespace bbt
