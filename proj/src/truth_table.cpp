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
#include "bbt/truth_table.hpp"

#include <cstdio>

namespace bbt {

TruthTable::TruthTable(int n, std::vector<int8_t> values) : n_(n), values_(std::move(values)) {
    if (n < 1 || n > 20)
        throw Error(Status::invalid_argument, "variable count out of range: " + std::to_string(n));
    if (values_.size() != (size_t{1} << n))
        throw Error(Status::invalid_argument, "truth table length != 2^n");
    for (int8_t v : values_)
        if (v != 1 && v != -1)
            throw Error(Status::invalid_argument, "truth table entries must be -1 or +1");
}

TruthTable TruthTable::from_fid(int n, uint64_t fid) {
    if (n < 1 || n > 6)
        throw Error(Status::invalid_argument, "fid construction requires 1 <= n <= 6");
    const int N = 1 << n;
    if (n < 6 && fid >> N)
        throw Error(Status::invalid_argument, "fid has bits beyond 2^n");
    std::vector<int8_t> v(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i)
        v[static_cast<size_t>(i)] = (fid >> i) & 1 ? int8_t{-1} : int8_t{1};
    return TruthTable(n, std::move(v));
}

TruthTable TruthTable::from_hex(int n, const std::string& hex_fid) {
    return from_fid(n, parse_fid_hex(hex_fid));
}

uint64_t TruthTable::fid() const {
    if (n_ > 6)
        throw Error(Status::invalid_argument, "fid only defined for n <= 6");
    uint64_t f = 0;
    for (int i = 0; i < size(); ++i)
        if (values_[static_cast<size_t>(i)] == -1) f |= uint64_t{1} << i;
    return f;
}

std::string TruthTable::fid_hex() const { return fid_to_hex(fid()); }

uint64_t parse_fid_hex(const std::string& s) {
    size_t pos = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) pos = 2;
    if (pos >= s.size())
        throw Error(Status::invalid_argument, "empty fid literal");
    uint64_t f = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw Error(Status::invalid_argument, "bad hex digit in fid: " + s);
        if (f >> 60)
            throw Error(Status::invalid_argument, "fid literal overflows 64 bits: " + s);
        f = (f << 4) | static_cast<uint64_t>(d);
    }
    return f;
}

std::string fid_to_hex(uint64_t fid) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(fid));
    return buf;
}

} // namespace bbt
