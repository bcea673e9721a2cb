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

#include "bbt/fwht.hpp"
#include "bbt/truth_table.hpp"

namespace bbt {

/* Ternary weight vector over subsets; f is represented when
 * sign((H_n w)_i) = f_i everywhere with margin at least 1. */
struct TernaryMask {
    int n = 0;
    std::vector<int8_t> w;

    TernaryMask() = default;
    TernaryMask(int n_, std::vector<int8_t> w_);
    int support() const;
};

struct VerifyResult {
    bool ok = false;
    int64_t margin = 0;
    std::vector<int64_t> margin_vector;
};

enum class SynthStatus { heuristic_ok, repaired, rounded, failed };

std::string synth_status_name(SynthStatus status);

struct SynthesisResult {
    bool has_mask = false;
    TernaryMask mask;
    SynthStatus status = SynthStatus::failed;
    int iterations = 0;
    std::string strategy;
};

/* Exact integer check: y = H_n w, ok iff f_i y_i >= 1 for all i.
 * margin = min_i f_i y_i; its parity always equals the support parity. */
VerifyResult verify(const TernaryMask& w, const TruthTable& f);

/* w_S = sign(coeffs[S]) when |coeffs[S]|/2^n exceeds tau, else 0. */
TernaryMask heuristic_mask(const IntegerSpectrum& s, double tau);

/* Violation-set descent. Each move adds sign(delta_S) to one entry with
 * saturation at +-1, preferring moves that strictly shrink the violation
 * set (largest |delta_S| first, then smallest S); when none exists, the
 * best move that keeps the violation count unchanged is taken, at most 8
 * consecutively. Status failed signals fall-through to another strategy. */
SynthesisResult greedy_repair(const TernaryMask& w0, const TruthTable& f, int max_iter = 200);

/* Start 1: default-threshold heuristic then repair. Start 2: the same over
 * thresholds {0.01, 0.1, 0.2, 0.3}. Start 3: sorted rounding, growing the
 * mask by coefficient magnitude until it verifies. Requires n <= 5. */
SynthesisResult multi_start_repair(const TruthTable& f);

/* Full violation gradient of the empty mask: delta_S = 2^n fhat(S),
 * identical to the transform coefficients. */
std::vector<int64_t> fourier_rounding_gradient(const TruthTable& f);

constexpr double kDefaultTau = 0.05;

} // namespace bbt
