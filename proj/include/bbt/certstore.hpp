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

#include "bbt/minsupport.hpp"

namespace bbt {

/* Certificate files are a one-line JSON header
 *   {"format_version":1,"n":N,"producer":"...","count":C}
 * followed by one JSON certificate per line, sorted by fid. Hex fids keep
 * the files diff-able; unknown format versions are rejected loudly. */
constexpr int kCertFormatVersion = 1;

extern const char* const kProducer;

struct CertificateSet {
    int n = 0;
    std::string producer;
    std::vector<Certificate> records;
};

/* Byte-stable serialization: records sorted by fid, fixed key order, and
 * elapsed_ms pinned to 0.0 so reruns produce identical bytes. Records
 * without a mask (exhausted searches) are not persistable and are
 * rejected. */
std::string certificates_to_text(const std::vector<Certificate>& certs, int n,
                                 const std::string& producer = kProducer);

/* Parses and re-verifies every record (integer sign check against the fid).
 * Structural damage (bad hex, stray fid bits, wrong mask length, entries
 * outside {-1,0,+1}, support or count mismatch) raises corrupt_record; a
 * structurally sound record whose mask or stored margin fails the integer
 * check raises verification_failed naming the offending fid. */
CertificateSet certificates_from_text(const std::string& text);

void save_certificate_file(const std::string& path, const std::vector<Certificate>& certs,
                           int n);
CertificateSet load_certificate_file(const std::string& path);

struct AuditFailure {
    std::string fid_hex;
    std::string reason;
};

/* Standalone re-verification that trusts nothing but the raw mask bytes:
 * y = H w is recomputed as a dense integer matrix-vector product (one
 * multiply per matrix entry) and sign(y_i) = f_i checked for every input.
 * Integer multiplies are counted; per-record failures are report entries,
 * never exceptions. */
struct AuditReport {
    int n = 0;
    uint64_t records = 0;
    uint64_t passed = 0;
    uint64_t failed = 0;
    uint64_t integer_ops = 0;
    std::vector<AuditFailure> failures;

    bool pass() const { return failed == 0; }
};

AuditReport audit_certificates_text(const std::string& text);
AuditReport audit_certificate_file(const std::string& path);

/* Shared small-file helpers (io_error on failure). */
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace bbt
