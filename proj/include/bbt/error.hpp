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

#include <stdexcept>
#include <string>

namespace bbt {

enum class Status : int {
    ok = 0,
    invalid_argument = 1,
    non_integer_result = 2,
    verification_failed = 3,
    budget_exhausted = 4,
    synthesis_failed = 5,
    io_error = 6,
    corrupt_record = 7,
    unequal_sums = 8,
    out_of_memory = 9,
    internal = 10,
};

/* Single exception type for the library; the code maps 1:1 onto the C API
 * status enum so wrappers never have to parse messages. */
class Error : public std::runtime_error {
  public:
    Error(Status code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Status code() const noexcept { return code_; }

  private:
    Status code_;
};

inline const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::invalid_argument: return "invalid_argument";
        case Status::non_integer_result: return "non_integer_result";
        case Status::verification_failed: return "verification_failed";
        case Status::budget_exhausted: return "budget_exhausted";
        case Status::synthesis_failed: return "synthesis_failed";
        case Status::io_error: return "io_error";
        case Status::corrupt_record: return "corrupt_record";
        case Status::unequal_sums: return "unequal_sums";
        case Status::out_of_memory: return "out_of_memory";
        case Status::internal: return "internal";
    }
    return "unknown";
}

} // namespace bbt
