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
#include "bbt/cancellation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bbt/error.hpp"
#include "bbt/stats.hpp"

namespace bbt {

double pair_ratio(double a, double b) {
    const double denom = std::fabs(a) + std::fabs(b);
    if (denom == 0.0)
        return 1.0;
    return std::min(std::fabs(a + b), std::fabs(a - b)) / denom;
}

namespace {

double median_inplace(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

} // namespace

CancellationReport layer_cancellation(const TernaryMask& w) {
    CancellationReport report;
    report.n = w.n;
    const size_t size = w.w.size();

    std::vector<double> v(w.w.begin(), w.w.end());
    std::vector<double> prop_ratios, raw_ratios;
    prop_ratios.reserve(size / 2);
    raw_ratios.reserve(size / 2);

    for (int layer = 1; layer <= w.n; ++layer) {
        const size_t bit = size_t{1} << (layer - 1);
        prop_ratios.clear();
        raw_ratios.clear();
        double layer_min = 1.0;
        for (size_t i = 0; i < size; ++i) {
            if (i & bit)
                continue;
            const double r = pair_ratio(v[i], v[i | bit]);
            prop_ratios.push_back(r);
            layer_min = std::min(layer_min, r);
            raw_ratios.push_back(
                pair_ratio(static_cast<double>(w.w[i]), static_cast<double>(w.w[i | bit])));
        }
        report.rho_layer_min.push_back(layer_min);
        report.rho_layer_median.push_back(median_inplace(prop_ratios));
        report.rho_tilde.push_back(median_inplace(raw_ratios));

        for (size_t i = 0; i < size; ++i) {
            if (i & bit)
                continue;
            const double a = v[i];
            const double b = v[i | bit];
            v[i] = a + b;
            v[i | bit] = a - b;
        }
    }

    double min_sum = 0.0, tilde_sum = 0.0, index_sum = 0.0;
    for (int l = 0; l < w.n; ++l) {
        min_sum += report.rho_layer_min[static_cast<size_t>(l)];
        tilde_sum += report.rho_tilde[static_cast<size_t>(l)];
        index_sum += 1.0 - report.rho_layer_median[static_cast<size_t>(l)];
    }
    report.rho_layer_min_mean = min_sum / w.n;
    report.rho_tilde_mean = tilde_sum / w.n;
    report.cancellation_index = index_sum / w.n;
    return report;
}

CorrelationValue cancellation_support_correlation(const std::vector<Certificate>& certs) {
    std::vector<double> index, support;
    for (const auto& cert : certs) {
        if (!cert.has_mask || !cert.optimal)
            continue;
        index.push_back(layer_cancellation(cert.mask).cancellation_index);
        support.push_back(static_cast<double>(cert.min_support));
    }
    CorrelationValue out;
    if (index.size() < 2)
        return out;
    const PearsonResult p = pearson(index, support);
    out.defined = p.defined;
    out.r = p.r;
    return out;
}

std::string cancellation_csv(const std::vector<Certificate>& certs) {
    std::string out = "fid,support,";
    int n = 0;
    for (const auto& cert : certs)
        if (cert.has_mask) {
            n = cert.n;
            break;
        }
    for (int l = 1; l <= n; ++l) {
        char col[32];
        std::snprintf(col, sizeof col, "rho_layer%d_min,", l);
        out += col;
    }
    out += "rho_tilde_mean\n";
    for (const auto& cert : certs) {
        if (!cert.has_mask)
            continue;
        const CancellationReport rep = layer_cancellation(cert.mask);
        out += fid_to_hex(cert.fid);
        char buf[32];
        std::snprintf(buf, sizeof buf, ",%d", cert.mask.support());
        out += buf;
        for (double r : rep.rho_layer_min) {
            std::snprintf(buf, sizeof buf, ",%.6f", r);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.6f\n", rep.rho_tilde_mean);
        out += buf;
    }
    return out;
}

} // namespace bbt
