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

#include "bbt/minsupport.hpp"
#include "bbt/synthesis.hpp"

namespace bbt {

/* rho(a,b) = min(|a+b|,|a-b|) / (|a|+|b|); 0 means a butterfly pair that
 * cancels completely, 1 means none of its mass can cancel. rho(0,0) = 1 (an
 * inert pair cancels nothing). */
double pair_ratio(double a, double b);

struct CancellationReport {
    int n = 0;
    /* min of pair_ratio over layer-l pairs of the propagated v^(l-1) */
    std::vector<double> rho_layer_min;
    /* median of pair_ratio over layer-l pairs of the propagated v^(l-1) */
    std::vector<double> rho_layer_median;
    /* median of pair_ratio over layer-l pairs applied to the raw mask */
    std::vector<double> rho_tilde;
    double rho_layer_min_mean = 0.0;
    double rho_tilde_mean = 0.0; // the input proxy aggregate
    /* mean over layers of (1 - rho_layer_median): high when propagation
     * keeps destroying mass layer after layer */
    double cancellation_index = 0.0;
};

/* Propagates v^(0) = w through the butterfly cascade, scoring each layer's
 * pairing both on the propagated intermediates and on the raw mask. */
CancellationReport layer_cancellation(const TernaryMask& w);

struct CorrelationValue {
    bool defined = false; // false when either side has zero variance
    double r = 0.0;
};

/* Pearson correlation of the cancellation index against optimal support
 * over a set of certificates (intended: the full n=3 universe). */
CorrelationValue cancellation_support_correlation(const std::vector<Certificate>& certs);

/* Rows: fid, support, per-layer rho minima, input-proxy aggregate. */
std::string cancellation_csv(const std::vector<Certificate>& certs);

} // namespace bbt
