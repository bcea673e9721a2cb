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
#include "bbt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "bbt/error.hpp"

namespace bbt {

PearsonResult pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw Error(Status::invalid_argument, "length mismatch");
    PearsonResult out;
    const size_t n = x.size();
    if (n < 2)
        return out;
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0)
        return out;
    out.defined = true;
    out.r = sxy / std::sqrt(sxx * syy);
    out.r = std::clamp(out.r, -1.0, 1.0);
    return out;
}

namespace {

template <typename T>
std::vector<double> ranks_of(const std::vector<T>& v) {
    const size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && !(v[order[i]] < v[order[j + 1]]))
            ++j;
        const double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

SpearmanResult spearman_on_ranks(const std::vector<double>& rx,
                                 const std::vector<double>& ry) {
    SpearmanResult out;
    const PearsonResult p = pearson(rx, ry);
    if (!p.defined)
        return out;
    out.defined = true;
    out.rho = p.r;
    const double n = static_cast<double>(rx.size());
    const double denom = 1.0 - out.rho * out.rho;
    if (n >= 3.0 && denom > 0.0)
        out.t = out.rho * std::sqrt((n - 2.0) / denom);
    else if (n >= 3.0)
        out.t = out.rho > 0 ? INFINITY : -INFINITY;
    const CorrelationP cp = correlation_p(out.rho, rx.size());
    out.p_value = cp.p_value;
    out.p_display = cp.display;
    return out;
}

} // namespace

std::vector<double> average_ranks(const std::vector<double>& v) { return ranks_of(v); }
std::vector<double> average_ranks(const std::vector<Rational>& v) { return ranks_of(v); }

SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw Error(Status::invalid_argument, "length mismatch");
    return spearman_on_ranks(ranks_of(x), ranks_of(y));
}

SpearmanResult spearman(const std::vector<Rational>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw Error(Status::invalid_argument, "length mismatch");
    return spearman_on_ranks(ranks_of(x), ranks_of(y));
}

CorrelationP correlation_p(double r, uint64_t n_samples) {
    CorrelationP out;
    if (n_samples < 3)
        return out; // "n/a"
    const double n = static_cast<double>(n_samples);
    const double denom = 1.0 - r * r;
    if (denom <= 0.0) {
        out.p_value = 0.0;
        out.display = "<1e-300";
        return out;
    }
    const double t = r * std::sqrt((n - 2.0) / denom);
    const boost::math::students_t dist(n - 2.0);
    out.p_value = 2.0 * boost::math::cdf(dist, -std::fabs(t));
    if (out.p_value < 1e-300) {
        out.display = "<1e-300";
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", out.p_value);
        out.display = buf;
    }
    return out;
}

int influence_bin_key(int64_t total_numerator, int n) {
    if (total_numerator < 0 || n < 1 || n > 20)
        throw Error(Status::invalid_argument, "bad bin input");
    const int64_t q = 20 * total_numerator;
    const int64_t d = int64_t{1} << (2 * n);
    const int64_t lo = q / d;
    const int64_t rem = q - lo * d;
    if (2 * rem < d)
        return static_cast<int>(lo);
    if (2 * rem > d)
        return static_cast<int>(lo + 1);
    return static_cast<int>(lo % 2 == 0 ? lo : lo + 1); // half to even
}

} // namespace bbt
