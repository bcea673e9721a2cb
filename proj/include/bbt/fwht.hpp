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

#include "bbt/truth_table.hpp"

namespace bbt {

/* Scaled Fourier coefficients coeffs[S] = 2^n * fhat(S), exact integers.
 * For a Boolean table, Parseval reads sum_S coeffs[S]^2 = 4^n and every
 * coefficient has the parity of 2^n.
 */
struct IntegerSpectrum {
    int n = 0;
    std::vector<int64_t> coeffs;
};

/* Character sign (-1)^popcount(i & S); the one index convention every other
 * computation in the library is built on. */
inline int index_sign(uint32_t i, uint32_t S) {
    return (__builtin_popcount(i & S) & 1) ? -1 : 1;
}

/* In-place butterfly cascade; layer l pairs indices differing in bit l-1. */
void hadamard_inplace(std::vector<int64_t>& v);

/* H_n * w in exact integer arithmetic. */
std::vector<int64_t> apply_hadamard(const std::vector<int64_t>& w);

IntegerSpectrum fwht(const TruthTable& t);

/* Inverse transform; throws non_integer_result when the cascade output is not
 * divisible by 2^n (a spectrum that does not come from an integer vector). */
std::vector<int64_t> fwht_inverse(const IntegerSpectrum& s);

/* Inverse transform specialized to +-1 outputs. */
TruthTable fwht_inverse_table(const IntegerSpectrum& s);

bool parseval_holds(const IntegerSpectrum& s);

} // namespace bbt
