/*
   Copyright 2026 The salemgrowth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SALEMGROWTH_INTERVAL_HPP
#define SALEMGROWTH_INTERVAL_HPP

#include <string>
#include <string_view>

#include "salemgrowth/polynomial.hpp"

namespace salem {

/// Interval with rational endpoints, lo <= hi. The closed flags only matter
/// for root-isolation bookkeeping; interval arithmetic treats every interval
/// as closed.
struct RationalInterval {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;

    RationalInterval() = default;
    RationalInterval(Rational lo_, Rational hi_, bool lo_closed_ = false, bool hi_closed_ = false);

    static RationalInterval point(const Rational& x) { return {x, x, true, true}; }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_point() const { return lo == hi; }

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

// Closed-interval arithmetic on exact rational endpoints. Results are exact
// enclosures; round_outward trades exactness for bounded endpoint size.

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
/// Throws InvalidArgument when b contains zero.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
RationalInterval abs(const RationalInterval& a);
RationalInterval pow(const RationalInterval& a, unsigned n);

/// Enclosure of sqrt over a nonnegative interval with dyadic endpoints of
/// the given fractional precision.
RationalInterval sqrt(const RationalInterval& a, unsigned bits);

/// Largest multiple of 2^-bits <= x, and the smallest one >= x.
Rational floor_dyadic(const Rational& x, unsigned bits);
Rational ceil_dyadic(const Rational& x, unsigned bits);
RationalInterval round_outward(const RationalInterval& a, unsigned bits);

/// Interval Horner evaluation of p over every point of x.
RationalInterval eval_interval(const IntPolynomial& p, const RationalInterval& x);

/// Dyadic exponent k with 2^-k <= eps (smallest such k >= 0).
unsigned bits_for(const Rational& eps);

enum class Rounding { Down, Up, Nearest };

/// Decimal rendering with `digits` fractional digits.
std::string to_decimal(const Rational& x, unsigned digits, Rounding mode = Rounding::Nearest);

/// Exact text form: a terminating decimal when the value has one, otherwise "num/den".
std::string to_exact_string(const Rational& x);

/// Parses "p", "p/q", decimal "d.ddd", or scientific "1e-10" forms exactly.
/// Throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace salem

#endif
