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

#ifndef SALEMGROWTH_SALEM_HPP
#define SALEMGROWTH_SALEM_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "salemgrowth/interval.hpp"
#include "salemgrowth/polynomial.hpp"

namespace salem {

enum class SalemMethod { TraceTransform, Cayley };

std::string_view method_name(SalemMethod m) noexcept;

/// Exact evidence that a monic reciprocal polynomial is Salem.
///
/// For f of degree 2w with f(z) = z^w g(z + 1/z), the roots of f on the unit
/// circle correspond to the real roots of g in (-2, 2), and the pair
/// lambda, 1/lambda to the single real root of g outside [-2, 2].
/// lambda_interval isolates lambda among the real roots of f.
struct SalemCertificate {
    IntPolynomial input;
    unsigned unit_circle_root_pairs = 0;
    RationalInterval lambda_interval;
    bool reciprocal = true;
    SalemMethod method = SalemMethod::TraceTransform;
    /// lambda < -1; allowed by the definition, never produced by growth denominators.
    bool negative_root = false;
    /// gcd(f, f') when f was not squarefree and its squarefree part was tested.
    std::optional<IntPolynomial> repeated_part;
    /// Isolating interval of the root of the trace polynomial outside [-2, 2].
    RationalInterval trace_root;
};

/// The degree-w polynomial g with f(z) = z^w g(z + 1/z). Checks: NotReciprocal,
/// OddDegree, RootAtPlusMinusOne.
IntPolynomial trace_transform(const IntPolynomial& f);

/// Same rewrite without the f(+-1) != 0 check; f must be reciprocal of even degree.
IntPolynomial trace_polynomial(const IntPolynomial& f);

/// Salem test on the trace polynomial. Returns a certificate, or nullopt for a
/// negative verdict. Throws on precondition failures (ZeroPolynomial, NotMonic,
/// NotReciprocal, OddDegree, DegreeTooLow, RootAtPlusMinusOne).
std::optional<SalemCertificate> is_reciprocal_salem(const IntPolynomial& f);

/// Independent check: the Cayley transform of f has exactly deg f - 2 real
/// roots. Requires squarefree input (NotSquarefree); a non-real transform
/// raises CayleyNotReal.
bool is_salem_via_cayley(const IntPolynomial& f);

/// X^2 - aX + b is Salem iff a > |1 + b| and b != 0.
bool degree2_salem_check(const Integer& a, const Integer& b);

/// Interval of width < eps around lambda, bisected on the certified polynomial.
RationalInterval salem_number(const SalemCertificate& cert, const Rational& eps);

struct CyclotomicFactor {
    unsigned index = 0;
    unsigned multiplicity = 0;
    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// input = salem_factor * prod Phi_index^multiplicity.
struct SalemFactorization {
    IntPolynomial input;
    IntPolynomial salem_factor;
    std::vector<CyclotomicFactor> cyclotomic_factors;

    IntPolynomial cyclotomic_part() const;
};

/// Trial division by every Phi_n with phi(n) <= deg f, n <= 2 deg^2 + 2.
SalemFactorization strip_cyclotomic(const IntPolynomial& f);

/// Re-checks the factorization invariants and that the Salem factor has no
/// cyclotomic divisor, which makes it the minimal polynomial of lambda.
bool verify_irreducible_salem(const SalemFactorization& fact);

} // namespace salem

#endif
