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

#include "salemgrowth/salem.hpp"

#include "salemgrowth/real_roots.hpp"

namespace salem {

std::string_view method_name(SalemMethod m) noexcept {
    return m == SalemMethod::TraceTransform ? "trace-transform" : "cayley";
}

IntPolynomial trace_polynomial(const IntPolynomial& f) {
    const std::size_t n = f.degree_checked();
    const std::size_t w = n / 2;
    // v_k(x) represents z^k + z^-k.
    const IntPolynomial x{0, 1};
    IntPolynomial prev{2};
    IntPolynomial cur = x;
    IntPolynomial g = IntPolynomial::constant(f.coeffs()[w]);
    for (std::size_t k = 1; k <= w; ++k) {
        g += cur * f.coeffs()[w + k];
        IntPolynomial next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return g;
}

namespace {

void check_reciprocal_even(const IntPolynomial& f) {
    if (!is_reciprocal(f)) throw Error(ErrorCode::NotReciprocal, to_string(f) + " is not reciprocal");
    if (f.degree_checked() % 2 != 0) throw Error(ErrorCode::OddDegree, to_string(f) + " has odd degree");
}

void check_no_unit_real_roots(const IntPolynomial& f) {
    if (eval_integer(f, 1) == 0 || eval_integer(f, -1) == 0)
        throw Error(ErrorCode::RootAtPlusMinusOne, to_string(f) + " vanishes at 1 or -1");
}

void check_salem_preconditions(const IntPolynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Salem test of zero");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, to_string(f) + " is not monic");
    check_reciprocal_even(f);
    if (f.degree_checked() < 2) throw Error(ErrorCode::DegreeTooLow, "Salem test needs degree >= 2");
    check_no_unit_real_roots(f);
}

// Shrinks the isolating interval of a root of g until it clears [-2, 2].
RationalInterval clear_of_unit_band(const IntPolynomial& g, RationalInterval iv) {
    Rational eps = iv.width();
    while (!(iv.lo > 2 || iv.hi < -2)) {
        eps /= 2;
        iv = refine_root(g, iv, eps);
    }
    return iv;
}

} // namespace

IntPolynomial trace_transform(const IntPolynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "trace transform of zero");
    check_reciprocal_even(f);
    check_no_unit_real_roots(f);
    return trace_polynomial(f);
}

std::optional<SalemCertificate> is_reciprocal_salem(const IntPolynomial& f) {
    check_salem_preconditions(f);

    SalemCertificate cert;
    cert.input = f;
    IntPolynomial squarefree = f;
    if (!is_squarefree(f)) {
        IntPolynomial d = gcd_primitive(f, derivative(f));
        squarefree = exact_quotient(f, d);
        if (squarefree.leading() < 0) squarefree = -squarefree;
        cert.repeated_part = std::move(d);
    }

    const IntPolynomial g = trace_polynomial(squarefree);
    const std::size_t w = g.degree_checked();
    const SturmChain chain = sturm_chain(g);
    const unsigned inside = count_real_roots(chain, RationalInterval(-2, 2));
    const unsigned total = count_all_real_roots(chain);
    if (total != w || inside + 1 != w) return std::nullopt;

    // Exactly one root lies outside [-2, 2]; g(+-2) != 0 and the Cauchy bound
    // make (2, B) or (-B, -2) an isolating interval for it.
    const Rational bound = cauchy_bound(g);
    RationalInterval outside(Rational(2), bound);
    if (count_real_roots(chain, outside) != 1) outside = RationalInterval(-bound, Rational(-2));
    outside = clear_of_unit_band(g, outside);
    cert.trace_root = outside;

    // lambda + 1/lambda = y with 0 < 1/lambda < 1, so y - 1 < lambda < y for y > 2.
    if (outside.lo > 2) {
        cert.lambda_interval = RationalInterval(outside.lo - 1, outside.hi);
    } else {
        cert.negative_root = true;
        cert.lambda_interval = RationalInterval(outside.lo, outside.hi + 1);
    }

    if (cert.repeated_part && cert.repeated_part->degree_checked() > 0) {
        const SturmChain dchain = sturm_chain(*cert.repeated_part);
        if (count_real_roots(dchain, cert.lambda_interval) != 0) return std::nullopt;
    }

    cert.unit_circle_root_pairs = static_cast<unsigned>((f.degree_checked() - 2) / 2);
    cert.method = SalemMethod::TraceTransform;
    cert.reciprocal = true;
    return cert;
}

bool is_salem_via_cayley(const IntPolynomial& f) {
    check_salem_preconditions(f);
    if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, to_string(f) + " has a repeated factor");
    const GaussianIntPolynomial c = cayley_transform(f);
    if (!c.is_real()) throw Error(ErrorCode::CayleyNotReal, "Cayley transform of " + to_string(f) + " is not real");
    const IntPolynomial real = c.real_part();
    const std::size_t n = f.degree_checked();
    return count_all_real_roots(sturm_chain(real)) == n - 2;
}

bool degree2_salem_check(const Integer& a, const Integer& b) {
    return b != 0 && a > abs(Integer(1 + b));
}

RationalInterval salem_number(const SalemCertificate& cert, const Rational& eps) {
    if (eps <= 0) throw Error(ErrorCode::BadTolerance, "eps must be positive");
    return refine_root(cert.input, cert.lambda_interval, eps);
}

IntPolynomial SalemFactorization::cyclotomic_part() const {
    IntPolynomial acc{1};
    for (const auto& cf : cyclotomic_factors)
        for (unsigned k = 0; k < cf.multiplicity; ++k) acc = acc * cyclotomic(cf.index);
    return acc;
}

SalemFactorization strip_cyclotomic(const IntPolynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "strip_cyclotomic of zero");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, to_string(f) + " is not monic");

    SalemFactorization out;
    out.input = f;
    IntPolynomial rest = f;
    const std::size_t deg = f.degree_checked();
    const unsigned bound = static_cast<unsigned>(2 * deg * deg + 2);
    for (unsigned n = 1; n <= bound && rest.degree_checked() > 0; ++n) {
        if (euler_phi(n) > rest.degree_checked()) continue;
        const IntPolynomial phi = cyclotomic(n);
        unsigned mult = 0;
        for (;;) {
            DivRem dr = divrem(rest, phi);
            if (!dr.remainder.is_zero()) break;
            rest = std::move(dr.quotient);
            ++mult;
        }
        if (mult > 0) out.cyclotomic_factors.push_back({n, mult});
    }
    out.salem_factor = std::move(rest);
    return out;
}

bool verify_irreducible_salem(const SalemFactorization& fact) {
    if (fact.salem_factor * fact.cyclotomic_part() != fact.input) return false;
    const IntPolynomial& s = fact.salem_factor;
    try {
        if (!is_reciprocal_salem(s)) return false;
    } catch (const Error&) {
        return false;
    }
    const std::size_t deg = s.degree_checked();
    const unsigned bound = static_cast<unsigned>(2 * deg * deg + 2);
    for (unsigned n = 1; n <= bound; ++n) {
        if (euler_phi(n) > deg) continue;
        if (divides(cyclotomic(n), s)) return false;
    }
    return true;
}

} // namespace salem
