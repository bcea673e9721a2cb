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

#include "bbt/influence.hpp"
#include "bbt/rational.hpp"

namespace bbt {

/* Influence-adaptive contraction data: per-layer exponents p_l = 1 + Inf_l,
 * log2 of the contraction invariant as an exact reduced rational
 *   r = -sum_l Inf_l / (1 + Inf_l),
 * and the algebraic degree, reported as the denominator of r in lowest terms
 * (2^r is a root of 2^a x^q - 1 with r = -a/q). */
struct ContractionProfile {
    int n = 0;
    std::vector<Rational> exponents;
    Rational log2_mu;
    BigInt algebraic_degree;
    double mu_float = 1.0; // display only, never compared
};

struct BoundsReport {
    bool pass = false;
    Rational coarse_low_slack;  // r - (-I) >= 0
    Rational coarse_high_slack; // -I/2 - r >= 0 (only when I > 0)
    Rational jensen_slack;      // r - (-I/(1+I/n)) >= 0
    bool degenerate = false;    // I = 0, bounds collapse to r = 0
};

struct SchurVerdict {
    bool majorizes = false;
    bool is_permutation = false;
    Rational phi_x;
    Rational phi_y;
    /* For a strict majorization, strict_holds reports phi_x < phi_y,
     * equivalently mu(x) > mu(y). */
    bool strict_holds = false;
};

struct OpnormReport {
    double p = 0.0;
    double bound = 0.0;
    double max_ratio = 0.0;       // best ratio found by random search
    double maximizer_ratio = 0.0; // ratio attained by the known maximizer
    bool bound_respected = false;
    bool maximizer_attains = false;
    bool clarkson_ok = false;
};

struct NormPropReport {
    double p = 0.0;
    double factor = 0.0;
    double max_excess = 0.0;
    bool pass = false;
};

ContractionProfile contraction_profile(const InfluenceVector& v);

/* max(2^{1/p}, 2^{1-1/p}); throws invalid_argument for p < 1. */
double butterfly_opnorm(double p);
double butterfly_opnorm(const Rational& p);

/* Random-search check of the operator-norm formula on 2-vectors plus both
 * Clarkson inequalities on sampled pairs. */
OpnormReport verify_opnorm_numeric(double p, int trials, uint64_t seed);

/* Exact-rational check of the coarse and Jensen bounds on log2(mu). */
BoundsReport check_bounds(const ContractionProfile& profile, const InfluenceVector& v);

/* Majorization comparison of two equal-sum vectors in [0,1]^n through
 * Phi(x) = sum x/(1+x); throws unequal_sums when the sums differ. */
SchurVerdict schur_compare(const std::vector<Rational>& x, const std::vector<Rational>& y);

/* Checks ||B^{-1} v||_p <= 2^{-infl/(1+infl)} ||v||_p with p = 1 + infl for
 * the block-diagonal butterfly layer on random vectors of length len. */
NormPropReport norm_propagation_check(double infl, int len, int trials, uint64_t seed);

} // namespace bbt
