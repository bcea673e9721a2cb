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
#include "bbt/fwht.hpp"

namespace bbt {

void hadamard_inplace(std::vector<int64_t>& v) {
    const size_t N = v.size();
    if (N == 0 || (N & (N - 1)))
        throw Error(Status::invalid_argument, "hadamard length must be a power of two");
    for (size_t h = 1; h < N; h <<= 1) {
        for (size_t base = 0; base < N; base += h << 1) {
            for (size_t i = base; i < base + h; ++i) {
                int64_t a = v[i];
                int64_t b = v[i + h];
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
    }
}

std::vector<int64_t> apply_hadamard(const std::vector<int64_t>& w) {
    std::vector<int64_t> v = w;
    hadamard_inplace(v);
    return v;
}

IntegerSpectrum fwht(const TruthTable& t) {
    IntegerSpectrum s;
    s.n = t.n();
    s.coeffs.assign(t.values().begin(), t.values().end());
    hadamard_inplace(s.coeffs);
    return s;
}

std::vector<int64_t> fwht_inverse(const IntegerSpectrum& s) {
    if (s.coeffs.size() != (size_t{1} << s.n))
        throw Error(Status::invalid_argument, "spectrum length != 2^n");
    std::vector<int64_t> v = s.coeffs;
    hadamard_inplace(v);
    const int64_t N = int64_t{1} << s.n;
    for (int64_t& x : v) {
        if (x % N != 0)
            throw Error(Status::non_integer_result, "inverse transform is not integral");
        x /= N;
    }
    return v;
}

TruthTable fwht_inverse_table(const IntegerSpectrum& s) {
    std::vector<int64_t> v = fwht_inverse(s);
    std::vector<int8_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 1 && v[i] != -1)
            throw Error(Status::non_integer_result, "inverse transform is not a +-1 table");
        out[i] = static_cast<int8_t>(v[i]);
    }
    return TruthTable(s.n, std::move(out));
}

bool parseval_holds(const IntegerSpectrum& s) {
    // 4^n fits int64 for n <= 20; the squares are summed as unsigned to be safe
    unsigned long long sum = 0;
    for (int64_t c : s.coeffs) sum += static_cast<unsigned long long>(c * c);
    return sum == (1ULL << (2 * s.n));
}

} // namespace bbt
