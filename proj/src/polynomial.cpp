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

#include "salemgrowth/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace salem {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonMonicDivisor: return "NonMonicDivisor";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::DegreeTooLow: return "DegreeTooLow";
        case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::LostRoot: return "LostRoot";
        case ErrorCode::NotReciprocal: return "NotReciprocal";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::RootAtPlusMinusOne: return "RootAtPlusMinusOne";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::CayleyNotReal: return "CayleyNotReal";
        case ErrorCode::BadTolerance: return "BadTolerance";
        case ErrorCode::OddB: return "OddB";
        case ErrorCode::SphericalRegime: return "SphericalRegime";
        case ErrorCode::EuclideanRegime: return "EuclideanRegime";
        case ErrorCode::NotSimplePoles: return "NotSimplePoles";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::IncompleteDisk: return "IncompleteDisk";
        case ErrorCode::DiskTooLarge: return "DiskTooLarge";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
    std::vector<Integer> v(power + 1);
    v[power] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree IntPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t IntPolynomial::degree_checked() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Integer IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
    return coeffs_.back();
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (coeffs_.back() < 0) g = -g;
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Division and gcd

DivRem divrem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero() || !b.is_monic())
        throw Error(ErrorCode::NonMonicDivisor, "divisor " + to_string(b) + " is not monic");
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {IntPolynomial{}, a};

    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> quot(a.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer q = rem[k + db];
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    rem.resize(db);
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
    return divrem(a, b).remainder.is_zero();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t db = b.degree_checked();
    if (a.is_zero() || a.size() <= db) return a;
    const Integer& lc = b.leading();
    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t top = rem.size() - 1; top >= db; --top) {
        // rem <- lc * rem - rem[top] * X^(top-db) * b
        Integer t = rem[top];
        for (auto& c : rem) c *= lc;
        if (t != 0) {
            for (std::size_t j = 0; j <= db; ++j)
                mpz_submul(rem[top - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
        }
        rem.pop_back();
        if (top == db) break;
    }
    return IntPolynomial(std::move(rem));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t db = b.degree_checked();
    if (a.is_zero()) return {};
    if (a.size() <= db) throw Error(ErrorCode::InvalidArgument, "exact_quotient: degree too small");
    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> quot(a.size() - db);
    const Integer& lc = b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
            throw Error(ErrorCode::InvalidArgument, "exact_quotient: not divisible");
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        quot[k] = q;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0) throw Error(ErrorCode::InvalidArgument, "exact_quotient: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

IntPolynomial derivative(const IntPolynomial& a) {
    if (a.size() <= 1) return {};
    std::vector<Integer> out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a.coeffs()[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial gcd_primitive(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0)");
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part();
}

bool is_squarefree(const IntPolynomial& a) {
    if (a.size() <= 2) return !a.is_zero();
    return gcd_primitive(a, derivative(a)).size() == 1;
}

// ---------------------------------------------------------------------------
// Evaluation and structure

Rational eval_rational(const IntPolynomial& a, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc *= x;
        acc += a.coeffs()[i];
    }
    return acc;
}

Integer eval_integer(const IntPolynomial& a, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc *= x;
        acc += a.coeffs()[i];
    }
    return acc;
}

int sign_at(const IntPolynomial& a, const Rational& x) {
    // Homogenised Horner: sum c_i p^i q^(n-i) has the sign of a(p/q) for q > 0.
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    Integer acc = 0;
    Integer qpow = 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc *= p;
        acc += a.coeffs()[i] * qpow;
        qpow *= q;
    }
    return sgn(acc);
}

bool is_reciprocal(const IntPolynomial& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "is_reciprocal of zero");
    auto c = a.coeffs();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

IntPolynomial reversal(const IntPolynomial& a) {
    std::vector<Integer> v(a.coeffs().rbegin(), a.coeffs().rend());
    return IntPolynomial(std::move(v));
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPolynomial cyclotomic(unsigned n) {
    if (n == 0) throw Error(ErrorCode::BadIndex, "cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<unsigned, IntPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPolynomial acc = IntPolynomial::monomial(1, n) - IntPolynomial{1};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) acc = divrem(acc, cyclotomic(d)).quotient;
    std::lock_guard lock(mutex);
    cache.emplace(n, acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Gaussian polynomials and the Cayley transform

GaussianIntPolynomial::GaussianIntPolynomial(std::vector<GaussianInteger> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void GaussianIntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().re == 0 && coeffs_.back().im == 0) coeffs_.pop_back();
}

Degree GaussianIntPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

bool GaussianIntPolynomial::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.im == 0; });
}

IntPolynomial GaussianIntPolynomial::real_part() const {
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.re);
    return IntPolynomial(std::move(v));
}

IntPolynomial GaussianIntPolynomial::imag_part() const {
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.im);
    return IntPolynomial(std::move(v));
}

GaussianIntPolynomial operator*(const GaussianIntPolynomial& lhs, const GaussianIntPolynomial& rhs) {
    if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return {};
    std::vector<GaussianInteger> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        const auto& a = lhs.coeffs_[i];
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            const auto& b = rhs.coeffs_[j];
            out[i + j].re += a.re * b.re - a.im * b.im;
            out[i + j].im += a.re * b.im + a.im * b.re;
        }
    }
    return GaussianIntPolynomial(std::move(out));
}

GaussianIntPolynomial cayley_transform(const IntPolynomial& f) {
    const std::size_t n = f.degree_checked();
    const GaussianIntPolynomial x_minus_i({{0, -1}, {1, 0}});
    const GaussianIntPolynomial x_plus_i({{0, 1}, {1, 0}});

    std::vector<GaussianIntPolynomial> minus_pow{GaussianIntPolynomial({{1, 0}})};
    std::vector<GaussianIntPolynomial> plus_pow{GaussianIntPolynomial({{1, 0}})};
    for (std::size_t k = 1; k <= n; ++k) {
        minus_pow.push_back(minus_pow.back() * x_minus_i);
        plus_pow.push_back(plus_pow.back() * x_plus_i);
    }

    std::vector<GaussianInteger> acc(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const Integer& fj = f.coeffs()[j];
        if (fj == 0) continue;
        GaussianIntPolynomial term = minus_pow[j] * plus_pow[n - j];
        for (std::size_t k = 0; k < term.coeffs().size(); ++k) {
            acc[k].re += fj * term.coeffs()[k].re;
            acc[k].im += fj * term.coeffs()[k].im;
        }
    }
    return GaussianIntPolynomial(std::move(acc));
}

// ---------------------------------------------------------------------------

std::string to_string(const IntPolynomial& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Integer& c = a.coeffs()[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << var;
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

} // namespace salem
