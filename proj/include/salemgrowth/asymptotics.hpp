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

#ifndef SALEMGROWTH_ASYMPTOTICS_HPP
#define SALEMGROWTH_ASYMPTOTICS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "salemgrowth/growth.hpp"
#include "salemgrowth/interval.hpp"

namespace salem {

enum class PoleKind {
    Dominant,        // alpha = 1/lambda, the pole governing growth
    ReciprocalReal,  // alpha = lambda
    UnitCircle,      // alpha = e^(+-i theta), located by x = 2 cos(theta)
    MinusOne,        // alpha = -1
};

std::string_view pole_kind_name(PoleKind k) noexcept;

struct PoleRecord {
    PoleKind kind;
    /// The pole itself for real poles; x = 2 cos(theta) for unit-circle pairs.
    RationalInterval location;
    /// Upper bound on the modulus of the partial-fraction coefficient.
    Rational residue_bound;
};

/// With simple poles alpha_i of P/Q,
///   f_n = [n <= deg P - deg Q] q_n + sum_i c_i alpha_i^-n,  c_i = -P(alpha_i) / (alpha_i Q'(alpha_i)),
/// so f_n = K lambda^n + E_n with |E_n| <= R, where K is the coefficient of the
/// dominant pole 1/lambda and R bounds the sum of all other |c_i| plus the
/// polynomial part.
struct AsymptoticProfile {
    RationalInterval lambda;
    RationalInterval K;
    Rational R;
    std::vector<PoleRecord> poles;
    /// Dyadic precision the lambda and K enclosures were computed at.
    unsigned bits = 0;
};

/// Throws BadTolerance for precision <= 0, NotSimplePoles when Q has a repeated
/// root, InvalidArgument when Q is not Salem. lambda and K are enclosed to
/// width below `precision`.
AsymptoticProfile asymptotic_profile(const GrowthSeries& series, const Rational& precision);

/// lambda and K enclosed to width at most 2^-bits (roughly).
struct DominantEnclosure {
    RationalInterval lambda;
    RationalInterval K;
};
DominantEnclosure enclose_dominant(const GrowthSeries& series, unsigned bits);

struct BoundRow {
    std::size_t n = 0;
    Integer f;
    /// Enclosures of K lambda^n - R and K lambda^n + R.
    RationalInterval lower;
    RationalInterval upper;
    bool inside = false;
};

struct BoundsReport {
    bool holds = true;
    std::vector<BoundRow> rows;
    /// Certified lower bound on min_n dist(f_n, boundary of the band).
    Rational worst_margin;
    std::size_t worst_n = 0;
    RationalInterval lambda;
    RationalInterval K;
    unsigned bits = 0;
};

/// Checks K lambda^n - R < f_n < K lambda^n + R for n = 0..n_max with
/// outward-rounded enclosures, refining lambda and K as far as needed.
BoundsReport check_bounds(const GrowthSeries& series, const AsymptoticProfile& profile, std::size_t n_max);

bool verify_bounds(const GrowthSeries& series, const AsymptoticProfile& profile, std::size_t n_max);

} // namespace salem

#endif
