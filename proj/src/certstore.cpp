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
#include "bbt/certstore.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bbt/error.hpp"
#include "bbt/fwht.hpp"
#include "bbt/synthesis.hpp"
#include "bbt/truth_table.hpp"

namespace bbt {

const char* const kProducer = "bbtlab 0.1.0";

namespace {

using ordered_json = nlohmann::ordered_json;

std::string row_to_json(const Certificate& c) {
    ordered_json row;
    row["fid"] = fid_to_hex(c.fid);
    row["n"] = c.n;
    ordered_json mask = ordered_json::array();
    for (int8_t v : c.mask.w)
        mask.push_back(static_cast<int>(v));
    row["mask"] = std::move(mask);
    row["support"] = c.min_support;
    row["margin_min"] = c.margin_min;
    row["optimal"] = c.optimal;
    row["solver"] = c.solver;
    row["elapsed_ms"] = 0.0; // pinned for byte-stable reruns
    return row.dump();
}

[[noreturn]] void corrupt(const std::string& what) {
    throw Error(Status::corrupt_record, what);
}

/* Splits into non-empty lines; trailing newline optional. */
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos)
            end = text.size();
        if (end > pos)
            lines.emplace_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

struct ParsedHeader {
    int n = 0;
    std::string producer;
    uint64_t count = 0;
};

ParsedHeader parse_header(const std::string& line) {
    ordered_json h = ordered_json::parse(line, nullptr, false);
    if (h.is_discarded() || !h.is_object())
        corrupt("unparseable header line");
    if (!h.contains("format_version") || !h["format_version"].is_number_integer())
        corrupt("header missing format_version");
    if (h["format_version"].get<int>() != kCertFormatVersion)
        corrupt("unknown certificate format_version");
    if (!h.contains("n") || !h["n"].is_number_integer())
        corrupt("header missing n");
    ParsedHeader out;
    out.n = h["n"].get<int>();
    if (out.n < 1 || out.n > 6)
        corrupt("header n out of range");
    if (h.contains("producer") && h["producer"].is_string())
        out.producer = h["producer"].get<std::string>();
    if (!h.contains("count") || !h["count"].is_number_unsigned())
        corrupt("header missing count");
    out.count = h["count"].get<uint64_t>();
    return out;
}

struct ParsedRow {
    Certificate cert;
    std::string structural_error; // empty when the row decodes cleanly
};

/* Structural decode only; no signature math here. */
ParsedRow parse_row(const std::string& line, int n) {
    ParsedRow out;
    ordered_json row = ordered_json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
        out.structural_error = "unparseable record";
        return out;
    }
    const size_t size = size_t{1} << n;
    Certificate& c = out.cert;
    c.n = n;
    try {
        if (!row.contains("fid") || !row["fid"].is_string())
            throw Error(Status::corrupt_record, "missing fid");
        c.fid = parse_fid_hex(row["fid"].get<std::string>());
        if (n < 6 && (c.fid >> (uint64_t{1} << n)) != 0)
            throw Error(Status::corrupt_record, "fid has stray bits");
        if (!row.contains("n") || !row["n"].is_number_integer() || row["n"].get<int>() != n)
            throw Error(Status::corrupt_record, "record n mismatch");
        if (!row.contains("mask") || !row["mask"].is_array() || row["mask"].size() != size)
            throw Error(Status::corrupt_record, "mask length mismatch");
        std::vector<int8_t> w(size);
        for (size_t i = 0; i < size; ++i) {
            if (!row["mask"][i].is_number_integer())
                throw Error(Status::corrupt_record, "non-integer mask entry");
            const int v = row["mask"][i].get<int>();
            if (v < -1 || v > 1)
                throw Error(Status::corrupt_record, "mask entry outside {-1,0,+1}");
            w[i] = static_cast<int8_t>(v);
        }
        c.mask = TernaryMask(n, std::move(w));
        c.has_mask = true;
        if (!row.contains("support") || !row["support"].is_number_integer())
            throw Error(Status::corrupt_record, "missing support");
        c.min_support = row["support"].get<int>();
        if (c.min_support != c.mask.support())
            throw Error(Status::corrupt_record, "support does not match mask");
        if (!row.contains("margin_min") || !row["margin_min"].is_number_integer())
            throw Error(Status::corrupt_record, "missing margin_min");
        c.margin_min = row["margin_min"].get<int64_t>();
        if (!row.contains("optimal") || !row["optimal"].is_boolean())
            throw Error(Status::corrupt_record, "missing optimal flag");
        c.optimal = row["optimal"].get<bool>();
        if (row.contains("solver") && row["solver"].is_string())
            c.solver = row["solver"].get<std::string>();
        c.elapsed_ms = 0.0;
    } catch (const Error& e) {
        out.structural_error = e.what();
    } catch (const std::exception& e) {
        out.structural_error = e.what();
    }
    return out;
}

} // namespace

std::string certificates_to_text(const std::vector<Certificate>& certs, int n,
                                 const std::string& producer) {
    if (n < 1 || n > 6)
        throw Error(Status::invalid_argument, "n out of range");
    std::vector<const Certificate*> rows;
    rows.reserve(certs.size());
    for (const Certificate& c : certs) {
        if (!c.has_mask)
            throw Error(Status::invalid_argument,
                        "certificate without a mask cannot be persisted: " + fid_to_hex(c.fid));
        if (c.n != n)
            throw Error(Status::invalid_argument, "certificate n mismatch");
        rows.push_back(&c);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Certificate* a, const Certificate* b) { return a->fid < b->fid; });

    ordered_json header;
    header["format_version"] = kCertFormatVersion;
    header["n"] = n;
    header["producer"] = producer;
    header["count"] = rows.size();

    std::string out = header.dump();
    out += '\n';
    for (const Certificate* c : rows) {
        out += row_to_json(*c);
        out += '\n';
    }
    return out;
}

CertificateSet certificates_from_text(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty())
        corrupt("empty certificate file");
    const ParsedHeader header = parse_header(lines[0]);

    CertificateSet set;
    set.n = header.n;
    set.producer = header.producer;
    if (lines.size() - 1 != header.count)
        corrupt("header count does not match record count");

    for (size_t i = 1; i < lines.size(); ++i) {
        ParsedRow row = parse_row(lines[i], header.n);
        if (!row.structural_error.empty())
            corrupt(row.structural_error);
        const Certificate& c = row.cert;
        const TruthTable f = TruthTable::from_fid(c.n, c.fid);
        const VerifyResult vr = verify(c.mask, f);
        if (!vr.ok || vr.margin != c.margin_min)
            throw Error(Status::verification_failed,
                        "certificate failed integer re-verification: " + fid_to_hex(c.fid));
        set.records.push_back(std::move(row.cert));
    }
    return set;
}

void save_certificate_file(const std::string& path, const std::vector<Certificate>& certs,
                           int n) {
    write_text_file(path, certificates_to_text(certs, n));
}

CertificateSet load_certificate_file(const std::string& path) {
    return certificates_from_text(read_text_file(path));
}

AuditReport audit_certificates_text(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty())
        corrupt("empty certificate file");
    const ParsedHeader header = parse_header(lines[0]);

    AuditReport report;
    report.n = header.n;
    const uint32_t size = uint32_t{1} << header.n;

    for (size_t i = 1; i < lines.size(); ++i) {
        report.records += 1;
        ParsedRow row = parse_row(lines[i], header.n);
        if (!row.structural_error.empty()) {
            report.failed += 1;
            report.failures.push_back({"line " + std::to_string(i + 1), row.structural_error});
            continue;
        }
        const Certificate& c = row.cert;
        /* Dense integer product y = H w, one multiply per matrix entry;
         * deliberately avoids the solver's butterfly code path. */
        bool ok = true;
        const uint64_t fid = c.fid;
        for (uint32_t r = 0; r < size; ++r) {
            int64_t y = 0;
            for (uint32_t s = 0; s < size; ++s)
                y += static_cast<int64_t>(index_sign(r, s)) * c.mask.w[s];
            report.integer_ops += size;
            const int64_t fr = ((fid >> r) & 1) ? -1 : 1;
            if (fr * y < 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            report.passed += 1;
        } else {
            report.failed += 1;
            report.failures.push_back({fid_to_hex(c.fid), "sign check failed"});
        }
    }
    if (report.records != header.count) {
        report.failed += 1;
        report.failures.push_back({"header", "count does not match record count"});
    }
    return report;
}

AuditReport audit_certificate_file(const std::string& path) {
    return audit_certificates_text(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Status::io_error, "cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error(Status::io_error, "read failed: " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Status::io_error, "cannot open for writing: " + path);
    out << text;
    out.flush();
    if (!out)
        throw Error(Status::io_error, "write failed: " + path);
}

} // namespace bbt
