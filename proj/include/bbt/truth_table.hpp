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

#include "bbt/error.hpp"

namespace bbt {

/* Boolean function as a +-1 vector over input bitmasks. Bit j of the input
 * index i is 1 iff variable x_{j+1} = -1, so index 0 is the all-(+1) input.
 * The fid identifier packs values little-endian: bit i set iff values[i] = -1.
 */
class TruthTable {
  public:
    TruthTable(int n, std::vector<int8_t> values);

    static TruthTable from_fid(int n, uint64_t fid);
    static TruthTable from_hex(int n, const std::string& hex_fid);

    int n() const noexcept { return n_; }
    int size() const noexcept { return 1 << n_; }
    const std::vector<int8_t>& values() const noexcept { return values_; }
    int8_t operator[](int i) const { return values_[static_cast<size_t>(i)]; }

    uint64_t fid() const; // requires n <= 6 so the id fits 64 bits
    std::string fid_hex() const;

    bool operator==(const TruthTable& o) const noexcept {
        return n_ == o.n_ && values_ == o.values_;
    }

  private:
    int n_;
    std::vector<int8_t> values_;
};

uint64_t parse_fid_hex(const std::string& s);
std::string fid_to_hex(uint64_t fid);

} // namespace bbt
