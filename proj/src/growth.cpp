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

#include "salemgrowth/growth.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace salem {

std::string_view curvature_name(CurvatureClass c) noexcept {
    switch (c) {
        case CurvatureClass::Spherical: return "spherical";
        case CurvatureClass::Euclidean: return "euclidean";
        case CurvatureClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

TilingParams TilingParams::make(int ell, int m) {
    if (ell < 3 || m < 3)
        throw Error(ErrorCode::InvalidArgument,
                    "need ell >= 3 and m >= 3, got ell=" + std::to_string(ell) + " m=" + std::to_string(m));
    return TilingParams{ell, m};
}

CurvatureClass TilingParams::curvature() const noexcept {
    const long product = static_cast<long>(ell - 2) * (m - 2);
    if (product < 4) return CurvatureClass::Spherical;
    if (product == 4) return CurvatureClass::Euclidean;
    return CurvatureClass::Hyperbolic;
}

IntPolynomial p_poly(unsigned b) {
    if (b == 0) throw Error(ErrorCode::InvalidArgument, "p_b needs b >= 1");
    std::vector<Integer> c(b + 1, Integer(2));
    c.front() = 1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial q_poly(unsigned b) {
    if (b == 0) throw Error(ErrorCode::InvalidArgument, "q_b needs b >= 1");
    return IntPolynomial{1} + IntPolynomial::monomial(1, b);
}

IntPolynomial r_poly(const Integer& a, unsigned b) {
    if (b == 0) throw Error(ErrorCode::InvalidArgument, "r_{a,b} needs b >= 1");
    std::vector<Integer> c(b + 1, a);
    c.front() = 1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial rk_poly(const Integer& a, unsigned b, const Integer& k) {
    if (b % 2 != 0) throw Error(ErrorCode::OddB, "r_{a,b;k} needs even b, got " + std::to_string(b));
    return r_poly(a, b) + IntPolynomial::monomial(k, b / 2);
}

// ---------------------------------------------------------------------------

GrowthSeries::GrowthSeries(TilingParams params, IntPolynomial numerator, IntPolynomial denominator)
    : params_(params), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.is_zero() || denominator_.coeffs()[0] != 1)
        throw Error(ErrorCode::InvalidArgument, "denominator must have constant term 1");
}

Integer GrowthSeries::next() {
    const std::size_t dq = denominator_.degree_checked();
    Integer f = numerator_.coeff(position_);
    const std::size_t terms = std::min(window_.size(), dq);
    for (std::size_t j = 1; j <= terms; ++j) {
        const Integer& qj = denominator_.coeffs()[j];
        if (qj != 0) mpz_submul(f.get_mpz_t(), qj.get_mpz_t(), window_[window_.size() - j].get_mpz_t());
    }
    window_.push_back(f);
    if (window_.size() > dq) window_.pop_front();
    ++position_;
    return f;
}

void GrowthSeries::rewind() {
    window_.clear();
    position_ = 0;
}

GrowthSeries growth_series(const TilingParams& params) {
    const TilingParams p = TilingParams::make(params.ell, params.m);
    if (p.curvature() == CurvatureClass::Spherical)
        throw Error(ErrorCode::SphericalRegime,
                    "(ell, m) = (" + std::to_string(p.ell) + ", " + std::to_string(p.m) +
                        ") tessellates the sphere; no infinite growth series");
    const Integer a = 2 - p.ell;
    const unsigned w = static_cast<unsigned>(p.w());
    if (p.m % 2 == 0) return GrowthSeries(p, p_poly(w), r_poly(a, w));
    const unsigned b = static_cast<unsigned>(p.m - 1);
    return GrowthSeries(p, p_poly(b) + IntPolynomial::monomial(2, w), rk_poly(a, b, 2));
}

std::vector<Integer> coefficients(const GrowthSeries& series, std::size_t count) {
    GrowthSeries fresh(series.params(), series.numerator(), series.denominator());
    std::vector<Integer> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fresh.next());
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<ExceptionalFactorRule>& exceptional_factor_rules() {
    static const std::vector<ExceptionalFactorRule> rules = {
        {0, 2, 4, 2},    // X + 1
        {3, 4, 12, 6},   // X^2 - X + 1
        {3, 3, 6, 3},    // X^2 + X + 1
        {3, 5, 20, 10},  // X^4 - X^3 + X^2 - X + 1
        {4, 3, 8, 4},    // X^2 + 1
        {5, 3, 12, 6},   // X^2 - X + 1
    };
    return rules;
}

void require_hyperbolic(const TilingParams& p) {
    switch (p.curvature()) {
        case CurvatureClass::Hyperbolic: return;
        case CurvatureClass::Euclidean:
            throw Error(ErrorCode::EuclideanRegime, "(ell, m) = (" + std::to_string(p.ell) + ", " +
                                                        std::to_string(p.m) + ") is euclidean");
        case CurvatureClass::Spherical:
            throw Error(ErrorCode::SphericalRegime, "(ell, m) = (" + std::to_string(p.ell) + ", " +
                                                        std::to_string(p.m) + ") is spherical");
    }
}

namespace {

std::string describe_indices(const std::vector<unsigned>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << "Phi_" << v[i];
    out << ']';
    return out.str();
}

} // namespace

std::vector<unsigned> expected_factor_indices(const TilingParams& params) {
    const TilingParams p = TilingParams::make(params.ell, params.m);
    require_hyperbolic(p);
    std::set<unsigned> found;
    for (const auto& rule : exceptional_factor_rules())
        if (rule.matches(p)) found.insert(rule.cyclotomic_index);
    return {found.begin(), found.end()};
}

std::vector<IntPolynomial> expected_factors(const TilingParams& params) {
    std::vector<IntPolynomial> out;
    for (unsigned n : expected_factor_indices(params)) out.push_back(cyclotomic(n));
    return out;
}

void DenominatorCertification::require_match() const {
    if (match) return;
    std::string msg = "(" + std::to_string(params.ell) + ", " + std::to_string(params.m) + ")";
    for (const auto& v : violations) msg += "; " + v;
    throw Error(ErrorCode::TheoremViolation, msg);
}

DenominatorCertification certify_denominator(const TilingParams& params) {
    const TilingParams p = TilingParams::make(params.ell, params.m);
    require_hyperbolic(p);
    const GrowthSeries series = growth_series(p);

    DenominatorCertification out;
    out.params = p;
    out.expected_indices = expected_factor_indices(p);
    out.factorization = strip_cyclotomic(series.denominator());

    std::vector<unsigned> observed;
    bool multiplicity_one = true;
    for (const auto& cf : out.factorization.cyclotomic_factors) {
        observed.push_back(cf.index);
        multiplicity_one = multiplicity_one && cf.multiplicity == 1;
    }
    if (observed != out.expected_indices || !multiplicity_one)
        out.violations.push_back("cyclotomic factors " + describe_indices(observed) + " differ from predicted " +
                                 describe_indices(out.expected_indices));

    const IntPolynomial& s = out.factorization.salem_factor;
    try {
        out.certificate = is_reciprocal_salem(s);
        if (!out.certificate) {
            out.violations.push_back("remaining factor " + to_string(s) + " is not a reciprocal Salem polynomial");
        } else {
            out.cayley_agrees = is_salem_via_cayley(s);
            if (!out.cayley_agrees) out.violations.push_back("Cayley criterion disagrees on " + to_string(s));
            out.irreducible = verify_irreducible_salem(out.factorization);
            if (!out.irreducible) out.violations.push_back("Salem factor failed the irreducibility re-check");
        }
    } catch (const Error& e) {
        out.violations.push_back(std::string("Salem test rejected the remaining factor: ") + e.what());
    }
    out.match = out.violations.empty();
    return out;
}

} // namespace salem
