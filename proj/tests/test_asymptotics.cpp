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

#include <doctest.h>

#include "oracles.hpp"
#include "salemgrowth/asymptotics.hpp"

using namespace salem;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

GrowthSeries series(int ell, int m) { return growth_series(TilingParams::make(ell, m)); }

const Rational kPrecision(1, 1000000);

} // namespace

TEST_CASE("non-simple poles are rejected") {
    CHECK(code_of([] { asymptotic_profile(series(4, 4), kPrecision); }) == ErrorCode::NotSimplePoles);
    CHECK(code_of([] { asymptotic_profile(series(6, 3), kPrecision); }) == ErrorCode::NotSimplePoles);
    CHECK(code_of([] { asymptotic_profile(series(8, 8), 0); }) == ErrorCode::BadTolerance);
}

TEST_CASE("(8,8) lambda against the nested-radical closed form") {
    // lambda + 1/lambda = 3 + sqrt(17), so lambda = (y + sqrt(y^2 - 4)) / 2.
    const AsymptoticProfile prof = asymptotic_profile(series(8, 8), Rational(1, 1000000000));
    CHECK(prof.lambda.width() < Rational(1, 1000000000));
    const auto s17 = oracle::sqrt_enclosure(17, 100);
    const Rational y_lo = 3 + s17.lo, y_hi = 3 + s17.hi;
    // sqrt(y^2 - 4) via a dyadic square-root enclosure of the rational bounds.
    auto sqrt_q = [](const Rational& v, bool up) -> Rational {
        const unsigned bits = 100;
        mpz_class scaled = v.get_num() << (2 * bits);
        scaled /= v.get_den();
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
        if (up) r += 1;
        return Rational(r) / Rational(mpz_class(1) << bits);
    };
    const Rational lam_lo = (y_lo + sqrt_q(y_lo * y_lo - 4, false)) / 2;
    const Rational lam_hi = (y_hi + sqrt_q(y_hi * y_hi - 4, true)) / 2;
    CHECK(prof.lambda.lo <= lam_hi);
    CHECK(prof.lambda.hi >= lam_lo);
    CHECK(lam_hi - lam_lo < Rational(1, Integer("1000000000000")));
    CHECK(prof.lambda.lo > Rational(69798, 10000));
    CHECK(prof.lambda.hi < Rational(69799, 10000));
}

TEST_CASE("profile invariants across hyperbolic parameters") {
    for (int ell = 3; ell <= 10; ++ell)
        for (int m = 3; m <= 10; ++m) {
            const TilingParams p = TilingParams::make(ell, m);
            if (p.curvature() != CurvatureClass::Hyperbolic) continue;
            const GrowthSeries s = growth_series(p);
            const AsymptoticProfile prof = asymptotic_profile(s, kPrecision);
            CHECK(prof.lambda.lo > 1);
            CHECK(prof.K.lo > 0);
            CHECK(prof.R >= 0);
            CHECK(prof.K.width() < kPrecision);
            CHECK(prof.lambda.width() < kPrecision);
            CHECK(prof.poles.size() == *s.denominator().degree());
            std::size_t dominant = 0;
            for (const auto& pole : prof.poles) dominant += pole.kind == PoleKind::Dominant ? 1 : 0;
            CHECK(dominant == 1);
        }
}

TEST_CASE("K agrees with f_n / lambda^n") {
    // |f_n / lambda^n - K| <= R / lambda^n, so late terms pin K down.
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{8, 8}, {3, 7}, {5, 4}, {4, 6}, {7, 3}}) {
        const GrowthSeries s = series(ell, m);
        const AsymptoticProfile prof = asymptotic_profile(s, Rational(1, 1000000000));
        const std::size_t n = 150;
        const Integer fn = coefficients(s, n + 1)[n];
        const DominantEnclosure dom = enclose_dominant(s, 800);
        const RationalInterval pw = pow(dom.lambda, static_cast<unsigned>(n));
        const RationalInterval ratio = RationalInterval::point(Rational(fn)) / pw;
        const RationalInterval slack = RationalInterval::point(prof.R) / pw;
        const Rational band_lo = ratio.lo - slack.hi, band_hi = ratio.hi + slack.hi;
        CHECK(band_lo <= prof.K.hi);
        CHECK(band_hi >= prof.K.lo);
        CHECK(band_hi - band_lo < Rational(1, 1000000));
    }
}

TEST_CASE("bounds hold for the worked examples") {
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{8, 8}, {3, 7}, {5, 4}, {5, 5}, {7, 6}}) {
        const GrowthSeries s = series(ell, m);
        const AsymptoticProfile prof = asymptotic_profile(s, kPrecision);
        const BoundsReport r = check_bounds(s, prof, 200);
        CHECK(r.holds);
        CHECK(r.rows.size() == 201);
        CHECK(r.worst_margin > 0);
        CHECK(verify_bounds(s, prof, 200));
    }
}

TEST_CASE("n_max = 0 only checks f_0") {
    const GrowthSeries s = series(7, 3);
    const AsymptoticProfile prof = asymptotic_profile(s, kPrecision);
    const BoundsReport r = check_bounds(s, prof, 0);
    CHECK(r.holds);
    CHECK(r.rows.size() == 1);
}

TEST_CASE("a deliberately shrunken R is caught") {
    const GrowthSeries s = series(3, 7);
    AsymptoticProfile prof = asymptotic_profile(s, kPrecision);
    prof.R = Rational(1, 100);
    CHECK_FALSE(verify_bounds(s, prof, 50));
}

TEST_CASE("minus-one pole is handled exactly when m = 2 mod 4") {
    const GrowthSeries s = series(7, 6);
    const AsymptoticProfile prof = asymptotic_profile(s, kPrecision);
    bool found = false;
    for (const auto& pole : prof.poles)
        if (pole.kind == PoleKind::MinusOne) {
            found = true;
            CHECK(pole.location == RationalInterval::point(-1));
        }
    CHECK(found);
    CHECK(verify_bounds(s, prof, 200));
}
