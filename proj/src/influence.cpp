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
#include "bbt/influence.hpp"

#include <algorithm>
#include <cmath>

namespace bbt {

InfluenceVector influences(const IntegerSpectrum& s) {
    InfluenceVector v;
    v.n = s.n;
    v.numerators.assign(static_cast<size_t>(s.n), 0);
    const size_t N = s.coeffs.size();
    for (size_t S = 0; S < N; ++S) {
        const int64_t c2 = s.coeffs[S] * s.coeffs[S];
        for (int l = 0; l < s.n; ++l)
            if (S >> l & 1) v.numerators[static_cast<size_t>(l)] += c2;
    }
    for (int64_t a : v.numerators) v.total += a;
    return v;
}

double influence_entropy(const InfluenceVector& v) {
    if (v.total == 0) return 0.0;
    double h = 0.0;
    for (int64_t a : v.numerators) {
        if (a == 0) continue;
        const double p = static_cast<double>(a) / static_cast<double>(v.total);
        h -= p * std::log2(p);
    }
    return h;
}

Rational max_influence(const InfluenceVector& v) {
    int64_t m = 0;
    for (int64_t a : v.numerators) m = std::max(m, a);
    return Rational(m, v.four_n());
}

} // namespace bbt
