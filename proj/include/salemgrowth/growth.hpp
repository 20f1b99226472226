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

#ifndef SALEMGROWTH_GROWTH_HPP
#define SALEMGROWTH_GROWTH_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "salemgrowth/polynomial.hpp"
#include "salemgrowth/salem.hpp"

namespace salem {

enum class CurvatureClass { Spherical, Euclidean, Hyperbolic };

std::string_view curvature_name(CurvatureClass c) noexcept;

/// Vertex degree ell and face size m of the regular tessellation {m, ell}.
struct TilingParams {
    int ell = 3;
    int m = 3;

    /// Throws InvalidArgument unless ell, m >= 3.
    static TilingParams make(int ell, int m);

    int w() const noexcept { return m / 2; }
    /// Sign of (ell - 2)(m - 2) - 4.
    CurvatureClass curvature() const noexcept;

    friend bool operator==(const TilingParams&, const TilingParams&) = default;
};

// Auxiliary polynomials.
//   p_b = 1 + 2X + ... + 2X^(b-1) + X^b
//   q_b = 1 + X^b
//   r_{a,b} = 1 + aX + ... + aX^(b-1) + X^b
//   r_{a,b;k} = r_{a,b} + k X^(b/2), b even
IntPolynomial p_poly(unsigned b);
IntPolynomial q_poly(unsigned b);
IntPolynomial r_poly(const Integer& a, unsigned b);
/// Throws OddB for odd b.
IntPolynomial rk_poly(const Integer& a, unsigned b, const Integer& k);

/// Rational growth series P/Q of the tessellation graph, with a coefficient
/// stream driven by the recurrence f_n = p_n - sum_{j>=1} q_j f_(n-j).
/// Streaming mutates the private window; do not share an instance across
/// threads while streaming.
class GrowthSeries {
public:
    GrowthSeries(TilingParams params, IntPolynomial numerator, IntPolynomial denominator);

    const TilingParams& params() const noexcept { return params_; }
    const IntPolynomial& numerator() const noexcept { return numerator_; }
    const IntPolynomial& denominator() const noexcept { return denominator_; }

    /// Next coefficient of the stream, starting from f_0.
    Integer next();
    std::size_t position() const noexcept { return position_; }
    void rewind();

private:
    TilingParams params_;
    IntPolynomial numerator_;
    IntPolynomial denominator_;
    std::deque<Integer> window_;  // last deg Q coefficients, newest at the back
    std::size_t position_ = 0;
};

/// Throws SphericalRegime when (ell - 2)(m - 2) < 4.
GrowthSeries growth_series(const TilingParams& params);

/// EuclideanRegime or SphericalRegime unless params is hyperbolic.
void require_hyperbolic(const TilingParams& params);

/// f_0 .. f_(count-1), independent of the series' stream position.
std::vector<Integer> coefficients(const GrowthSeries& series, std::size_t count);

/// One row of the exceptional-factor table. ell == 0 matches every ell.
struct ExceptionalFactorRule {
    int ell;
    int m_residue;
    int m_modulus;
    unsigned cyclotomic_index;

    bool matches(const TilingParams& p) const noexcept {
        return (ell == 0 || ell == p.ell) && p.m % m_modulus == m_residue;
    }
    IntPolynomial factor() const { return cyclotomic(cyclotomic_index); }
};

const std::vector<ExceptionalFactorRule>& exceptional_factor_rules();

/// Cyclotomic indices predicted to divide the denominator, union over the
/// matching rules, ascending. Requires hyperbolic parameters.
std::vector<unsigned> expected_factor_indices(const TilingParams& params);
std::vector<IntPolynomial> expected_factors(const TilingParams& params);

struct DenominatorCertification {
    TilingParams params;
    SalemFactorization factorization;
    std::optional<SalemCertificate> certificate;
    std::vector<unsigned> expected_indices;
    bool cayley_agrees = false;
    bool irreducible = false;
    bool match = false;
    /// Human-readable description of every failed assertion; empty iff match.
    std::vector<std::string> violations;

    /// Throws TheoremViolation carrying the violations when !match.
    void require_match() const;
};

/// Strips cyclotomic factors from Q, compares them with the predicted table
/// and certifies the remainder as a reciprocal Salem polynomial (both the
/// trace and the Cayley criteria). Euclidean or spherical parameters raise the
/// corresponding regime error.
DenominatorCertification certify_denominator(const TilingParams& params);

} // namespace salem

#endif
