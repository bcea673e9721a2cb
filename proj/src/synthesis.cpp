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
#include "bbt/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "bbt/error.hpp"

namespace bbt {

TernaryMask::TernaryMask(int n_, std::vector<int8_t> w_) : n(n_), w(std::move(w_)) {
    if (n < 1 || n > 20)
        throw Error(Status::invalid_argument, "mask needs 1 <= n <= 20");
    if (w.size() != (size_t{1} << n))
        throw Error(Status::invalid_argument, "mask length must be 2^n");
    for (int8_t e : w)
        if (e < -1 || e > 1)
            throw Error(Status::invalid_argument, "mask entries must be -1, 0, or +1");
}

int TernaryMask::support() const {
    int count = 0;
    for (int8_t e : w)
        count += (e != 0);
    return count;
}

std::string synth_status_name(SynthStatus status) {
    switch (status) {
    case SynthStatus::heuristic_ok:
        return "heuristic_ok";
    case SynthStatus::repaired:
        return "repaired";
    case SynthStatus::rounded:
        return "rounded";
    case SynthStatus::failed:
        return "failed";
    }
    throw Error(Status::internal, "bad synthesis status");
}

namespace {

std::vector<int64_t> transform_of_mask(const TernaryMask& w) {
    std::vector<int64_t> y(w.w.begin(), w.w.end());
    hadamard_inplace(y);
    return y;
}

} // namespace

VerifyResult verify(const TernaryMask& w, const TruthTable& f) {
    if (w.n != f.n())
        throw Error(Status::invalid_argument, "mask/table arity mismatch");
    VerifyResult res;
    const std::vector<int64_t> y = transform_of_mask(w);
    res.margin_vector.resize(y.size());
    res.ok = true;
    res.margin = INT64_MAX;
    for (size_t i = 0; i < y.size(); ++i) {
        const int64_t m = static_cast<int64_t>(f.values()[i]) * y[i];
        res.margin_vector[i] = m;
        res.margin = std::min(res.margin, m);
        if (m < 1)
            res.ok = false;
    }
    return res;
}

TernaryMask heuristic_mask(const IntegerSpectrum& s, double tau) {
    if (!(tau > 0.0))
        throw Error(Status::invalid_argument, "tau must be positive");
    const double threshold = std::ldexp(tau, s.n);
    std::vector<int8_t> w(s.coeffs.size(), 0);
    for (size_t i = 0; i < s.coeffs.size(); ++i) {
        const int64_t c = s.coeffs[i];
        if (static_cast<double>(std::llabs(c)) > threshold)
            w[i] = c > 0 ? int8_t{1} : int8_t{-1};
    }
    return TernaryMask(s.n, std::move(w));
}

SynthesisResult greedy_repair(const TernaryMask& w0, const TruthTable& f, int max_iter) {
    if (w0.n != f.n())
        throw Error(Status::invalid_argument, "mask/table arity mismatch");
    if (max_iter < 0)
        throw Error(Status::invalid_argument, "max_iter must be nonnegative");

    const size_t size = w0.w.size();
    const auto& fv = f.values();
    TernaryMask w = w0;
    std::vector<int64_t> y = transform_of_mask(w);

    auto violations = [&](const std::vector<int64_t>& yy) {
        size_t count = 0;
        for (size_t i = 0; i < size; ++i)
            count += (static_cast<int64_t>(fv[i]) * yy[i] <= 0);
        return count;
    };

    SynthesisResult res;
    int plateau = 0;
    std::vector<int64_t> delta(size), trial(size);
    for (int moves = 0;; ++moves) {
        const size_t vcount = violations(y);
        if (vcount == 0) {
            res.has_mask = true;
            res.mask = w;
            res.status = moves == 0 ? SynthStatus::heuristic_ok : SynthStatus::repaired;
            res.iterations = moves;
            return res;
        }
        if (moves >= max_iter)
            break;

        /* delta_S = sum over violated rows of f_i chi_S(i) */
        std::fill(delta.begin(), delta.end(), 0);
        for (size_t i = 0; i < size; ++i) {
            if (static_cast<int64_t>(fv[i]) * y[i] > 0)
                continue;
            const int64_t fi = fv[i];
            for (size_t S = 0; S < size; ++S)
                delta[S] += fi * index_sign(static_cast<uint32_t>(i),
                                            static_cast<uint32_t>(S));
        }

        struct Pick {
            bool found = false;
            int64_t absd = 0;
            size_t S = 0;
            int8_t nw = 0;
        };
        Pick reducing, plateau_pick;
        for (size_t S = 0; S < size; ++S) {
            const int64_t d = delta[S];
            if (d == 0)
                continue;
            const int8_t step = d > 0 ? int8_t{1} : int8_t{-1};
            const int8_t nw = static_cast<int8_t>(
                std::clamp<int>(w.w[S] + step, -1, 1));
            if (nw == w.w[S])
                continue;
            const int64_t t = nw - w.w[S];
            size_t new_count = 0;
            for (size_t i = 0; i < size; ++i) {
                const int64_t yy = y[i] + t * index_sign(static_cast<uint32_t>(i),
                                                         static_cast<uint32_t>(S));
                new_count += (static_cast<int64_t>(fv[i]) * yy <= 0);
            }
            const int64_t absd = std::llabs(d);
            if (new_count < vcount) {
                if (!reducing.found || absd > reducing.absd)
                    reducing = {true, absd, S, nw};
            } else if (new_count == vcount) {
                if (!plateau_pick.found || absd > plateau_pick.absd)
                    plateau_pick = {true, absd, S, nw};
            }
        }

        Pick chosen;
        if (reducing.found) {
            chosen = reducing;
            plateau = 0;
        } else if (plateau_pick.found && plateau < 8) {
            chosen = plateau_pick;
            ++plateau;
        } else {
            break; // exhausted: no useful move
        }

        const int64_t t = chosen.nw - w.w[chosen.S];
        w.w[chosen.S] = chosen.nw;
        for (size_t i = 0; i < size; ++i)
            y[i] += t * index_sign(static_cast<uint32_t>(i),
                                   static_cast<uint32_t>(chosen.S));
    }

    res.has_mask = false;
    res.status = SynthStatus::failed;
    return res;
}

std::vector<int64_t> fourier_rounding_gradient(const TruthTable& f) {
    const size_t size = f.values().size();
    if (f.n() <= 8) {
        std::vector<int64_t> delta(size, 0);
        for (size_t S = 0; S < size; ++S)
            for (size_t i = 0; i < size; ++i)
                delta[S] += int64_t{f.values()[i]} *
                            index_sign(static_cast<uint32_t>(i),
                                       static_cast<uint32_t>(S));
        return delta;
    }
    std::vector<int64_t> delta(f.values().begin(), f.values().end());
    hadamard_inplace(delta);
    return delta;
}

namespace {

char* format_tau(char* buf, size_t len, double tau) {
    std::snprintf(buf, len, "%g", tau);
    return buf;
}

SynthesisResult try_start(const IntegerSpectrum& spectrum, const TruthTable& f,
                          double tau, const char* stage) {
    const TernaryMask h = heuristic_mask(spectrum, tau);
    SynthesisResult res = greedy_repair(h, f, 200);
    if (res.has_mask) {
        char buf[32];
        res.strategy = std::string(stage) + " tau=" + format_tau(buf, sizeof buf, tau);
    }
    return res;
}

} // namespace

SynthesisResult multi_start_repair(const TruthTable& f) {
    if (f.n() > 5)
        throw Error(Status::invalid_argument, "multi-start synthesis supports n <= 5");
    const IntegerSpectrum spectrum = fwht(f);

    SynthesisResult res = try_start(spectrum, f, kDefaultTau, "strategy1");
    if (res.has_mask)
        return res;
    for (double tau : {0.01, 0.1, 0.2, 0.3}) {
        res = try_start(spectrum, f, tau, "strategy2");
        if (res.has_mask)
            return res;
    }

    /* Sorted rounding: add entries in decreasing |coefficient| order (ties by
     * smaller index), signs from the coefficients, stop at the first prefix
     * that verifies. */
    const size_t size = spectrum.coeffs.size();
    std::vector<size_t> order(size);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const int64_t ca = std::llabs(spectrum.coeffs[a]);
        const int64_t cb = std::llabs(spectrum.coeffs[b]);
        return ca != cb ? ca > cb : a < b;
    });
    TernaryMask w(f.n(), std::vector<int8_t>(size, 0));
    for (size_t k = 0; k < size; ++k) {
        const size_t S = order[k];
        if (spectrum.coeffs[S] != 0)
            w.w[S] = spectrum.coeffs[S] > 0 ? int8_t{1} : int8_t{-1};
        if (verify(w, f).ok) {
            SynthesisResult out;
            out.has_mask = true;
            out.mask = w;
            out.status = SynthStatus::rounded;
            out.iterations = static_cast<int>(k + 1);
            out.strategy = "strategy3";
            return out;
        }
    }

    SynthesisResult out;
    out.status = SynthStatus::failed;
    out.strategy = "none";
    return out;
}

} // namespace bbt
