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

#ifndef SALEMGROWTH_POLYNOMIAL_HPP
#define SALEMGROWTH_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "salemgrowth/error.hpp"

namespace salem {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den. Throws InvalidArgument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity), so it never mixes with real degrees.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of X^i; trailing zeros are never stored.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, std::size_t power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept;
    /// Degree of a polynomial known to be nonzero; throws ZeroPolynomial otherwise.
    std::size_t degree_checked() const;

    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    /// Coefficient of X^i (zero beyond the degree).
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    Integer content() const;
    IntPolynomial primitive_part() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const Integer& scalar);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(IntPolynomial lhs, const Integer& rhs) { return lhs *= rhs; }
    friend IntPolynomial operator*(const Integer& lhs, IntPolynomial rhs) { return rhs *= lhs; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

inline IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
inline IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

struct DivRem {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division by a monic divisor; throws NonMonicDivisor otherwise.
DivRem divrem(const IntPolynomial& a, const IntPolynomial& b);

/// True iff the monic polynomial b divides a exactly.
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b; b need not be monic.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over the integers; throws InvalidArgument when b does
/// not divide a in Z[X].
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& a);

/// Primitive gcd with positive leading coefficient (primitive remainder sequence).
IntPolynomial gcd_primitive(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree(const IntPolynomial& a);

Rational eval_rational(const IntPolynomial& a, const Rational& x);
Integer eval_integer(const IntPolynomial& a, const Integer& x);
/// Sign of a(x) without forming the rational value.
int sign_at(const IntPolynomial& a, const Rational& x);

/// Palindromic coefficient test. Throws ZeroPolynomial for a = 0.
bool is_reciprocal(const IntPolynomial& a);

/// X^deg * a(1/X).
IntPolynomial reversal(const IntPolynomial& a);

/// n-th cyclotomic polynomial, by exact division of X^n - 1 by the Phi_d of
/// the proper divisors d. Results are cached process-wide. n = 0 -> BadIndex.
IntPolynomial cyclotomic(unsigned n);

/// Euler's totient.
unsigned euler_phi(unsigned n);

struct GaussianInteger {
    Integer re;
    Integer im;
    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

/// Polynomial with Gaussian-integer coefficients, no trailing zero pair.
class GaussianIntPolynomial {
public:
    GaussianIntPolynomial() = default;
    explicit GaussianIntPolynomial(std::vector<GaussianInteger> coeffs);

    std::span<const GaussianInteger> coeffs() const noexcept { return coeffs_; }
    Degree degree() const noexcept;
    bool is_real() const;
    IntPolynomial real_part() const;
    IntPolynomial imag_part() const;

    friend GaussianIntPolynomial operator*(const GaussianIntPolynomial& lhs,
                                           const GaussianIntPolynomial& rhs);
    friend bool operator==(const GaussianIntPolynomial&, const GaussianIntPolynomial&) = default;

private:
    void normalize();

    std::vector<GaussianInteger> coeffs_;
};

/// (X+i)^n f((X-i)/(X+i)) = sum_j f_j (X-i)^j (X+i)^(n-j), n = deg f.
GaussianIntPolynomial cayley_transform(const IntPolynomial& f);

/// "1 - 6*X - 6*X^2 - 6*X^3 + X^4": ascending powers, explicit signs.
std::string to_string(const IntPolynomial& a, const std::string& var = "X");

} // namespace salem

#endif
