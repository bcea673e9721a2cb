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
#include "bbt/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bbt/error.hpp"

namespace bbt {

ContractionProfile contraction_profile(const InfluenceVector& v) {
    ContractionProfile out;
    out.n = v.n;
    const BigInt four_n = v.four_n();
    out.exponents.reserve(static_cast<size_t>(v.n));
    Rational acc = 0;
    for (int l = 0; l < v.n; ++l) {
        const BigInt a = v.numerators[static_cast<size_t>(l)];
        out.exponents.push_back(1 + make_rational(a, four_n));
        acc += make_rational(a, four_n + a);
    }
    out.log2_mu = -acc;
    out.algebraic_degree = denominator(out.log2_mu);
    out.mu_float = std::exp2(to_double(out.log2_mu));
    return out;
}

double butterfly_opnorm(double p) {
    if (!(p >= 1.0))
        throw Error(Status::invalid_argument, "opnorm needs p >= 1");
    if (std::isinf(p))
        return 2.0;
    return std::max(std::exp2(1.0 / p), std::exp2(1.0 - 1.0 / p));
}

double butterfly_opnorm(const Rational& p) { return butterfly_opnorm(to_double(p)); }

namespace {

double pnorm2(double a, double b, double p) {
    a = std::fabs(a);
    b = std::fabs(b);
    if (std::isinf(p))
        return std::max(a, b);
    return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
}

double pnorm(const std::vector<double>& v, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : v)
            m = std::max(m, std::fabs(x));
        return m;
    }
    double s = 0.0;
    for (double x : v)
        s += std::pow(std::fabs(x), p);
    return std::pow(s, 1.0 / p);
}

} // namespace

OpnormReport verify_opnorm_numeric(double p, int trials, uint64_t seed) {
    if (!(p >= 1.0))
        throw Error(Status::invalid_argument, "opnorm needs p >= 1");
    if (trials < 1)
        throw Error(Status::invalid_argument, "trials must be positive");
    OpnormReport rep;
    rep.p = p;
    rep.bound = butterfly_opnorm(p);

    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);

    rep.max_ratio = 0.0;
    rep.clarkson_ok = true;
    const bool le2 = p <= 2.0;
    const bool ge2 = p >= 2.0;
    for (int t = 0; t < trials; ++t) {
        const double a = dist(gen);
        const double b = dist(gen);
        const double in = pnorm2(a, b, p);
        if (in > 0.0) {
            const double ratio = pnorm2(a + b, a - b, p) / in;
            rep.max_ratio = std::max(rep.max_ratio, ratio);
        }
        if (!std::isinf(p)) {
            const double lhs =
                std::pow(std::fabs(a + b), p) + std::pow(std::fabs(a - b), p);
            const double rhs =
                2.0 * (std::pow(std::fabs(a), p) + std::pow(std::fabs(b), p));
            const double slack = 1e-12 * (lhs + rhs);
            if (le2 && lhs > rhs + slack)
                rep.clarkson_ok = false;
            if (ge2 && lhs < rhs - slack)
                rep.clarkson_ok = false;
        }
    }

    /* Known extremal inputs: (1,0) for p <= 2, (1,1) for p >= 2. */
    const double ma = 1.0;
    const double mb = le2 ? 0.0 : 1.0;
    rep.maximizer_ratio = pnorm2(ma + mb, ma - mb, p) / pnorm2(ma, mb, p);
    rep.max_ratio = std::max(rep.max_ratio, rep.maximizer_ratio);

    rep.bound_respected = rep.max_ratio <= rep.bound * (1.0 + 1e-9);
    rep.maximizer_attains = std::fabs(rep.maximizer_ratio - rep.bound) <= 1e-12 * rep.bound;
    return rep;
}

BoundsReport check_bounds(const ContractionProfile& profile, const InfluenceVector& v) {
    if (profile.n != v.n)
        throw Error(Status::invalid_argument, "profile/influence arity mismatch");
    BoundsReport rep;
    const BigInt four_n = v.four_n();
    const Rational total_i = make_rational(v.total, four_n);
    const Rational& r = profile.log2_mu;

    rep.degenerate = (v.total == 0);
    rep.coarse_low_slack = r + total_i;
    rep.coarse_high_slack = -total_i / 2 - r;
    rep.jensen_slack = r + total_i / (1 + total_i / profile.n);
    rep.pass = rep.coarse_low_slack >= 0 && rep.jensen_slack >= 0 &&
               (rep.degenerate || rep.coarse_high_slack >= 0);
    return rep;
}

SchurVerdict schur_compare(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (x.empty() || x.size() != y.size())
        throw Error(Status::invalid_argument, "vectors must be nonempty and equal length");
    for (const auto& e : x)
        if (e < 0)
            throw Error(Status::invalid_argument, "negative entry");
    for (const auto& e : y)
        if (e < 0)
            throw Error(Status::invalid_argument, "negative entry");

    Rational sx = 0, sy = 0;
    for (const auto& e : x)
        sx += e;
    for (const auto& e : y)
        sy += e;
    if (sx != sy)
        throw Error(Status::unequal_sums, "majorization needs equal sums");

    std::vector<Rational> xs = x, ys = y;
    std::sort(xs.begin(), xs.end(), std::greater<Rational>());
    std::sort(ys.begin(), ys.end(), std::greater<Rational>());

    SchurVerdict verdict;
    verdict.is_permutation = (xs == ys);
    verdict.majorizes = true;
    Rational px = 0, py = 0;
    for (size_t k = 0; k < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        if (px < py) {
            verdict.majorizes = false;
            break;
        }
    }

    auto phi = [](const std::vector<Rational>& v) {
        Rational s = 0;
        for (const auto& e : v)
            s += e / (1 + e);
        return s;
    };
    verdict.phi_x = phi(x);
    verdict.phi_y = phi(y);
    verdict.strict_holds =
        verdict.majorizes && !verdict.is_permutation && verdict.phi_x < verdict.phi_y;
    return verdict;
}

NormPropReport norm_propagation_check(double infl, int len, int trials, uint64_t seed) {
    if (!(infl >= 0.0 && infl <= 1.0))
        throw Error(Status::invalid_argument, "influence must lie in [0,1]");
    if (len < 2 || (len % 2) != 0)
        throw Error(Status::invalid_argument, "length must be even and >= 2");
    if (trials < 1)
        throw Error(Status::invalid_argument, "trials must be positive");

    NormPropReport rep;
    rep.p = 1.0 + infl;
    rep.factor = std::exp2(-infl / (1.0 + infl));

    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> v(static_cast<size_t>(len)), w(static_cast<size_t>(len));

    rep.max_excess = 0.0;
    for (int t = 0; t < trials; ++t) {
        for (auto& e : v)
            e = dist(gen);
        for (size_t i = 0; i + 1 < v.size(); i += 2) {
            w[i] = 0.5 * (v[i] + v[i + 1]);
            w[i + 1] = 0.5 * (v[i] - v[i + 1]);
        }
        const double nin = pnorm(v, rep.p);
        if (nin <= 0.0)
            continue;
        const double excess = pnorm(w, rep.p) / nin - rep.factor;
        rep.max_excess = std::max(rep.max_excess, excess);
    }
    rep.pass = rep.max_excess <= 1e-9;
    return rep;
}

} // namespace bbt
