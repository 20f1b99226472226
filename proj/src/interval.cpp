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

#include "salemgrowth/interval.hpp"

#include <algorithm>
#include <cctype>

namespace salem {

RationalInterval::RationalInterval(Rational lo_, Rational hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

bool RationalInterval::contains(const Rational& x) const {
    bool above = lo_closed ? x >= lo : x > lo;
    bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi, true, true};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo, true, true};
}

RationalInterval operator-(const RationalInterval& a) {
    return {-a.hi, -a.lo, true, true};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    if (a.lo >= 0 && b.lo >= 0) return {a.lo * b.lo, a.hi * b.hi, true, true};
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx, true, true};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw Error(ErrorCode::InvalidArgument, "interval division by an interval containing 0");
    Rational inv_lo = 1 / b.hi;
    Rational inv_hi = 1 / b.lo;
    return a * RationalInterval(inv_lo, inv_hi, true, true);
}

RationalInterval abs(const RationalInterval& a) {
    if (a.lo >= 0) return {a.lo, a.hi, true, true};
    if (a.hi <= 0) return {-a.hi, -a.lo, true, true};
    return {Rational(0), std::max(Rational(-a.lo), a.hi), true, true};
}

RationalInterval pow(const RationalInterval& a, unsigned n) {
    RationalInterval acc = RationalInterval::point(1);
    RationalInterval base = a;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

Rational floor_dyadic(const Rational& x, unsigned bits) {
    Integer scaled = x.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    Rational r(scaled);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

Rational ceil_dyadic(const Rational& x, unsigned bits) {
    Integer scaled = x.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    Rational r(scaled);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

RationalInterval round_outward(const RationalInterval& a, unsigned bits) {
    return {floor_dyadic(a.lo, bits), ceil_dyadic(a.hi, bits), true, true};
}

RationalInterval sqrt(const RationalInterval& a, unsigned bits) {
    if (a.hi < 0) throw Error(ErrorCode::InvalidArgument, "sqrt of a negative interval");
    const Rational lo = a.lo < 0 ? Rational(0) : a.lo;

    // floor(sqrt(lo) * 2^bits) <= sqrt(floor(lo * 4^bits))
    Integer lo_scaled = lo.get_num();
    mpz_mul_2exp(lo_scaled.get_mpz_t(), lo_scaled.get_mpz_t(), 2 * bits);
    mpz_fdiv_q(lo_scaled.get_mpz_t(), lo_scaled.get_mpz_t(), lo.get_den_mpz_t());
    Integer s;
    mpz_sqrt(s.get_mpz_t(), lo_scaled.get_mpz_t());

    Integer hi_scaled = a.hi.get_num();
    mpz_mul_2exp(hi_scaled.get_mpz_t(), hi_scaled.get_mpz_t(), 2 * bits);
    mpz_cdiv_q(hi_scaled.get_mpz_t(), hi_scaled.get_mpz_t(), a.hi.get_den_mpz_t());
    Integer t;
    mpz_sqrt(t.get_mpz_t(), hi_scaled.get_mpz_t());
    if (t * t < hi_scaled) t += 1;

    Rational rlo(s), rhi(t);
    mpq_div_2exp(rlo.get_mpq_t(), rlo.get_mpq_t(), bits);
    mpq_div_2exp(rhi.get_mpq_t(), rhi.get_mpq_t(), bits);
    return {rlo, rhi, true, true};
}

RationalInterval eval_interval(const IntPolynomial& p, const RationalInterval& x) {
    if (x.is_point()) return RationalInterval::point(eval_rational(p, x.lo));
    RationalInterval acc = RationalInterval::point(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x;
        acc.lo += p.coeffs()[i];
        acc.hi += p.coeffs()[i];
    }
    return acc;
}

unsigned bits_for(const Rational& eps) {
    if (eps <= 0) throw Error(ErrorCode::BadTolerance, "tolerance must be positive");
    unsigned k = 0;
    Rational step = 1;
    while (step > eps) {
        step /= 2;
        ++k;
    }
    return k;
}

std::string to_decimal(const Rational& x, unsigned digits, Rounding mode) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer num = x.get_num() * scale;
    Integer q;
    switch (mode) {
        case Rounding::Down: mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t()); break;
        case Rounding::Up: mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t()); break;
        case Rounding::Nearest: {
            Integer twice = 2 * num + x.get_den();
            Integer den2 = 2 * x.get_den();
            mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
            break;
        }
    }
    const bool negative = q < 0;
    std::string body = Integer(abs(q)).get_str();
    if (digits == 0) return (negative ? "-" : "") + body;
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

std::string to_exact_string(const Rational& x) {
    Integer den = x.get_den();
    unsigned twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(2).get_mpz_t());
    unsigned fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(5).get_mpz_t());
    if (den != 1) return x.get_num().get_str() + "/" + x.get_den().get_str();
    const unsigned digits = std::max(twos, fives);
    std::string s = to_decimal(x, digits, Rounding::Down);
    return s;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
    };
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) return fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) return fail();
        if (den == 0) return fail();
        return make_rational(num, den);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string mantissa;
    long frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_point) return fail();
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            return fail();
        }
    }
    if (mantissa.empty()) return fail();
    long exponent = 0;
    if (pos < s.size()) {
        std::string e = s.substr(pos + 1);
        if (e.empty()) return fail();
        try {
            std::size_t used = 0;
            exponent = std::stol(e, &used);
            if (used != e.size()) return fail();
        } catch (const std::exception&) {
            return fail();
        }
    }
    if (exponent > 100000 || exponent < -100000) return fail();
    Integer num(mantissa, 10);
    if (negative) num = -num;
    const long shift = exponent - frac_digits;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? make_rational(num * p, 1) : make_rational(num, p);
}

} // namespace salem
