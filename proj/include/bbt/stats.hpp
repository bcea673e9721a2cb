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
#include <string>
#include <vector>

#include "bbt/rational.hpp"

namespace bbt {

struct PearsonResult {
    bool defined = false; // false when either side has zero variance
    double r = 0.0;
};

PearsonResult pearson(const std::vector<double>& x, const std::vector<double>& y);

/* Fractional ranks 1..N with ties averaged (the standard convention). */
std::vector<double> average_ranks(const std::vector<double>& v);
std::vector<double> average_ranks(const std::vector<Rational>& v);

struct SpearmanResult {
    bool defined = false;
    double rho = 0.0;
    double t = 0.0;        // t approximation with N-2 degrees of freedom
    double p_value = 1.0;  // two-sided
    std::string p_display; // "<1e-300" below representable range
};

/* Pearson on average ranks; ties handled exactly. The Rational overload
 * ranks the first argument in exact arithmetic (no double collisions). */
SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y);
SpearmanResult spearman(const std::vector<Rational>& x, const std::vector<double>& y);

struct CorrelationP {
    double p_value = 1.0;
    std::string display = "n/a";
};

/* Two-sided p for a correlation r over N samples (t approximation, N-2
 * degrees of freedom). N < 3 yields "n/a". */
CorrelationP correlation_p(double r, uint64_t n_samples);

/* Influence-bin key: round(20 * I) to nearest, half to even, computed on
 * integers from the influence-total numerator over 4^n. */
int influence_bin_key(int64_t total_numerator, int n);

} // namespace bbt
