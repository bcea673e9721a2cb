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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace bbt {

using BigInt = boost::multiprecision::cpp_int;

/* Exact rational arithmetic. boost keeps values reduced with positive
 * denominator, which is exactly the invariant the invariant suite needs. */
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

/* Normalizes the sign into the numerator; the underlying type insists on a
 * positive denominator. */
inline Rational make_rational(long long n, long long d) {
    return d < 0 ? Rational(-n, -d) : Rational(n, d);
}
inline Rational make_rational(const BigInt& n, const BigInt& d) {
    return d < 0 ? Rational(BigInt(-n), BigInt(-d)) : Rational(n, d);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/* "num/den", denominator always printed so exact values are unambiguous. */
inline std::string to_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

inline std::string to_fixed2(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", to_double(q));
    return buf;
}

} // namespace bbt
