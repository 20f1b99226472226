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

#include "salemgrowth/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "salemgrowth/real_roots.hpp"

namespace salem {

std::string_view pole_kind_name(PoleKind k) noexcept {
    switch (k) {
        case PoleKind::Dominant: return "dominant";
        case PoleKind::ReciprocalReal: return "reciprocal-real";
        case PoleKind::UnitCircle: return "unit-circle";
        case PoleKind::MinusOne: return "minus-one";
    }
    return "unknown";
}

namespace {

constexpr unsigned kResidueBits = 64;

// Q = (X + 1)^e * Q2 with Q2 an even-degree reciprocal Salem polynomial.
struct Denominator {
    IntPolynomial P;
    IntPolynomial Q;
    IntPolynomial Q2;
    IntPolynomial dQ;
    bool minus_one = false;
    SalemCertificate cert;
};

Denominator analyse(const GrowthSeries& series) {
    Denominator d;
    d.P = series.numerator();
    d.Q = series.denominator();
    if (!is_squarefree(d.Q))
        throw Error(ErrorCode::NotSimplePoles, "denominator " + to_string(d.Q) + " has a repeated root");
    if (!is_reciprocal(d.Q)) throw Error(ErrorCode::InvalidArgument, "denominator is not reciprocal");
    d.dQ = derivative(d.Q);
    d.Q2 = d.Q;
    if (eval_integer(d.Q, -1) == 0) {
        d.minus_one = true;
        d.Q2 = divrem(d.Q, IntPolynomial{1, 1}).quotient;
    }
    auto cert = is_reciprocal_salem(d.Q2);
    if (!cert || cert->negative_root)
        throw Error(ErrorCode::InvalidArgument, "denominator " + to_string(d.Q) + " is not a Salem polynomial");
    d.cert = std::move(*cert);
    return d;
}

Rational dyadic(unsigned bits) {
    Rational r(1);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

// c = -P(alpha) / (alpha Q'(alpha)) over an enclosure of alpha; nullopt when
// the enclosure is too wide to keep the denominator away from zero.
std::optional<RationalInterval> residue(const Denominator& d, const RationalInterval& alpha) {
    RationalInterval den = alpha * eval_interval(d.dQ, alpha);
    if (den.contains_zero()) return std::nullopt;
    return -(eval_interval(d.P, alpha) / den);
}

DominantEnclosure enclose(const Denominator& d, unsigned bits) {
    for (;;) {
        RationalInterval lambda = refine_root(d.Q2, d.cert.lambda_interval, dyadic(bits));
        RationalInterval alpha(1 / lambda.hi, 1 / lambda.lo, true, true);
        if (auto k = residue(d, alpha)) return {lambda, round_outward(*k, bits + 8)};
        bits += 16;
    }
}

// Upper bound on |c| for the conjugate pole pair e^(+-i theta) with
// x = 2 cos(theta) a root of the trace polynomial g2 of Q2:
//   |P(z)|^2 = h(x),  |Q'(z)| = (2 + x)^(e/2) |g2'(x)| sqrt(4 - x^2).
Rational unit_circle_bound(const Denominator& d, const IntPolynomial& g2, const IntPolynomial& dg2,
                           const IntPolynomial& h, RationalInterval x) {
    Rational eps = dyadic(kResidueBits);
    for (;;) {
        x = refine_root(g2, x, eps);
        RationalInterval den = pow(eval_interval(dg2, x), 2) * (RationalInterval::point(4) - x * x);
        if (d.minus_one) den = den * (RationalInterval::point(2) + x);
        if (den.lo > 0) {
            RationalInterval num = eval_interval(h, x);
            Rational sq = std::max(Rational(0), num.hi) / den.lo;
            return sqrt(RationalInterval(0, sq, true, true), kResidueBits).hi;
        }
        eps /= 1 << 16;
    }
}

} // namespace

DominantEnclosure enclose_dominant(const GrowthSeries& series, unsigned bits) {
    return enclose(analyse(series), bits);
}

AsymptoticProfile asymptotic_profile(const GrowthSeries& series, const Rational& precision) {
    if (precision <= 0) throw Error(ErrorCode::BadTolerance, "precision must be positive");
    const Denominator d = analyse(series);

    AsymptoticProfile out;
    unsigned bits = bits_for(precision) + 4;
    DominantEnclosure dom;
    for (;;) {
        dom = enclose(d, bits);
        if (dom.K.width() < precision && dom.lambda.width() < precision) break;
        bits += 32;
    }
    out.lambda = dom.lambda;
    out.K = dom.K;
    out.bits = bits;

    Rational others = 0;
    RationalInterval alpha(1 / dom.lambda.hi, 1 / dom.lambda.lo, true, true);
    out.poles.push_back({PoleKind::Dominant, alpha, abs(dom.K).hi});

    RationalInterval lambda_pole = dom.lambda;
    std::optional<RationalInterval> c_lambda;
    while (!(c_lambda = residue(d, lambda_pole))) lambda_pole = refine_root(d.Q2, lambda_pole, lambda_pole.width() / 2);
    const Rational b_lambda = ceil_dyadic(abs(*c_lambda).hi, kResidueBits);
    out.poles.push_back({PoleKind::ReciprocalReal, lambda_pole, b_lambda});
    others += b_lambda;

    if (d.minus_one) {
        Rational c = eval_rational(d.P, -1) / eval_rational(d.dQ, -1);
        Rational b = abs(c);
        out.poles.push_back({PoleKind::MinusOne, RationalInterval::point(-1), b});
        others += b;
    }

    const IntPolynomial g2 = trace_polynomial(d.Q2);
    const IntPolynomial dg2 = derivative(g2);
    const IntPolynomial h = trace_polynomial(d.P * reversal(d.P));
    const SturmChain chain = sturm_chain(g2);
    for (const auto& iv : isolate_real_roots(g2)) {
        RationalInterval inner;
        if (iv.is_point()) {
            if (iv.lo <= -2 || iv.lo >= 2) continue;
            inner = iv;
        } else {
            if (iv.hi <= -2 || iv.lo >= 2) continue;
            inner = RationalInterval(std::max(iv.lo, Rational(-2)), std::min(iv.hi, Rational(2)));
            if (inner.lo >= inner.hi || count_real_roots(chain, inner) != 1) continue;
        }
        const Rational b = unit_circle_bound(d, g2, dg2, h, inner);
        out.poles.push_back({PoleKind::UnitCircle, inner, b});
        out.poles.push_back({PoleKind::UnitCircle, inner, b});
        others += 2 * b;
    }

    // Polynomial part of P/Q contributes to the first few coefficients only.
    if (d.P.size() >= d.Q.size()) {
        const IntPolynomial quotient = divrem(d.P, d.Q).quotient;
        Integer mx = 0;
        for (const auto& c : quotient.coeffs()) mx = std::max(mx, Integer(abs(c)));
        others += mx;
    }

    out.R = ceil_dyadic(others, kResidueBits) + dyadic(kResidueBits);
    return out;
}

BoundsReport check_bounds(const GrowthSeries& series, const AsymptoticProfile& profile, std::size_t n_max) {
    const Denominator d = analyse(series);
    const std::vector<Integer> f = coefficients(series, n_max + 1);

    const double log2_lambda = std::log2(profile.lambda.hi.get_d());
    unsigned bits = std::max<unsigned>(profile.bits, static_cast<unsigned>(n_max * log2_lambda) + 96);
    const RationalInterval R = RationalInterval::point(profile.R);

    for (int attempt = 0;; ++attempt) {
        const DominantEnclosure dom = enclose(d, bits);
        BoundsReport report;
        report.lambda = dom.lambda;
        report.K = dom.K;
        report.bits = bits;
        bool conclusive = true;
        RationalInterval power = RationalInterval::point(1);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const RationalInterval main = round_outward(dom.K * power, bits);
            BoundRow row;
            row.n = n;
            row.f = f[n];
            row.lower = main - R;
            row.upper = main + R;
            const Rational fn(f[n]);
            row.inside = row.lower.hi < fn && fn < row.upper.lo;
            const bool outside = row.lower.lo >= fn || row.upper.hi <= fn;
            if (!row.inside && !outside) conclusive = false;
            const Rational margin = std::min(fn - row.lower.hi, row.upper.lo - fn);
            if (n == 0 || margin < report.worst_margin) {
                report.worst_margin = margin;
                report.worst_n = n;
            }
            report.holds = report.holds && row.inside;
            report.rows.push_back(std::move(row));
            power = round_outward(power * dom.lambda, bits);
        }
        if (conclusive || attempt >= 6) return report;
        bits *= 2;
    }
}

bool verify_bounds(const GrowthSeries& series, const AsymptoticProfile& profile, std::size_t n_max) {
    return check_bounds(series, profile, n_max).holds;
}

} // namespace salem
