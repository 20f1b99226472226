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

#include "salemgrowth/real_roots.hpp"

#include <algorithm>

namespace salem {

namespace {

unsigned count_variations(const std::vector<int>& signs) {
    unsigned v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// A split point inside (lo, hi) that is not a root of p. Rational roots are
// finitely many, so the search terminates quickly.
Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (sign_at(p, mid) != 0) return mid;
    Rational step = (hi - lo) / 4;
    for (;;) {
        if (sign_at(p, mid - step) != 0) return mid - step;
        if (sign_at(p, mid + step) != 0) return mid + step;
        step /= 2;
    }
}

} // namespace

unsigned SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign_at(q, x));
    return count_variations(signs);
}

unsigned SturmChain::variations_at_pos_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain) signs.push_back(sgn(q.leading()));
    return count_variations(signs);
}

unsigned SturmChain::variations_at_neg_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain) {
        int s = sgn(q.leading());
        if (q.degree_checked() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

SturmChain sturm_chain(const IntPolynomial& p) {
    if (p.is_zero() || p.degree_checked() < 1)
        throw Error(ErrorCode::DegreeTooLow, "Sturm chain needs degree >= 1, got " + to_string(p));

    // Content is divided out with a positive factor so signs are untouched.
    auto strip = [](const IntPolynomial& q) {
        IntPolynomial r = q;
        Integer c = q.content();
        if (c > 1) {
            std::vector<Integer> v(q.coeffs().begin(), q.coeffs().end());
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            r = IntPolynomial(std::move(v));
        }
        return r;
    };

    SturmChain out;
    out.chain.push_back(strip(p));
    out.chain.push_back(strip(derivative(p)));
    for (;;) {
        const IntPolynomial& a = out.chain[out.chain.size() - 2];
        const IntPolynomial& b = out.chain.back();
        if (b.degree_checked() == 0) break;
        IntPolynomial r = pseudo_remainder(a, b);
        // prem = lc(b)^d * rem; undo a negative factor so that r = -rem in sign.
        const std::size_t d = a.degree_checked() - b.degree_checked() + 1;
        if (b.leading() < 0 && d % 2 == 1) r = -r;
        r = -r;
        if (r.is_zero()) break;
        out.chain.push_back(strip(r));
    }
    return out;
}

unsigned count_real_roots(const SturmChain& chain, const RationalInterval& iv) {
    const IntPolynomial& p = chain.poly();
    if (sign_at(p, iv.lo) == 0 || sign_at(p, iv.hi) == 0)
        throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root of " + to_string(p));
    if (iv.lo == iv.hi) return 0;
    const unsigned vlo = chain.variations_at(iv.lo);
    const unsigned vhi = chain.variations_at(iv.hi);
    return vlo - vhi;
}

Rational cauchy_bound(const IntPolynomial& p) {
    const std::size_t n = p.degree_checked();
    Integer mx = 0;
    for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, Integer(abs(p.coeffs()[i])));
    return 1 + make_rational(mx, abs(p.leading()));
}

unsigned count_all_real_roots(const SturmChain& chain) {
    const Rational b = cauchy_bound(chain.poly());
    return count_real_roots(chain, RationalInterval(-b, b));
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p) {
    if (!is_squarefree(p)) throw Error(ErrorCode::NotSquarefree, to_string(p) + " has a repeated factor");
    if (p.degree_checked() == 0) return {};
    const SturmChain chain = sturm_chain(p);
    const Rational b = cauchy_bound(p);

    struct Pending {
        Rational lo, hi;
        unsigned vlo, vhi;
    };
    std::vector<RationalInterval> out;
    std::vector<Pending> stack{{-b, b, chain.variations_at(-b), chain.variations_at(b)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        const unsigned count = cur.vlo - cur.vhi;
        if (count == 0) continue;
        if (count == 1) {
            out.emplace_back(cur.lo, cur.hi);
            continue;
        }
        Rational mid = split_point(p, cur.lo, cur.hi);
        unsigned vmid = chain.variations_at(mid);
        stack.push_back({mid, cur.hi, vmid, cur.vhi});
        stack.push_back({cur.lo, mid, cur.vlo, vmid});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return out;
}

RationalInterval refine_root(const IntPolynomial& p, const RationalInterval& iv, const Rational& eps) {
    if (eps <= 0) throw Error(ErrorCode::BadTolerance, "eps must be positive");
    if (iv.width() <= eps) return iv;

    Rational lo = iv.lo, hi = iv.hi;
    int slo = sign_at(p, lo);
    int shi = sign_at(p, hi);
    if (slo == 0 && iv.lo_closed) return RationalInterval::point(lo);
    if (shi == 0 && iv.hi_closed) return RationalInterval::point(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw Error(ErrorCode::LostRoot, "endpoint signs do not bracket a root of " + to_string(p));
    while (hi - lo >= eps) {
        Rational mid = (lo + hi) / 2;
        int s = sign_at(p, mid);
        if (s == 0) return RationalInterval::point(mid);
        if (s == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return {lo, hi};
}

} // namespace salem
