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

#ifndef SALEMGROWTH_REAL_ROOTS_HPP
#define SALEMGROWTH_REAL_ROOTS_HPP

#include <vector>

#include "salemgrowth/interval.hpp"
#include "salemgrowth/polynomial.hpp"

namespace salem {

/// Signed remainder sequence of (p, p'), each entry reduced to its primitive
/// part with the sign kept. The last entry is gcd(p, p') up to a constant.
struct SturmChain {
    std::vector<IntPolynomial> chain;

    const IntPolynomial& poly() const { return chain.front(); }
    /// Sign changes of the chain at x, zero entries skipped.
    unsigned variations_at(const Rational& x) const;
    unsigned variations_at_pos_infinity() const;
    unsigned variations_at_neg_infinity() const;
};

/// Throws DegreeTooLow for constant or zero p.
SturmChain sturm_chain(const IntPolynomial& p);

/// Distinct real roots in the open interval (lo, hi). Endpoints that are
/// roots are refused with EndpointIsRoot.
unsigned count_real_roots(const SturmChain& chain, const RationalInterval& iv);

/// Distinct real roots overall (count inside the Cauchy bound).
unsigned count_all_real_roots(const SturmChain& chain);

/// 1 + max|c_i| / |lead|; every root has modulus strictly below it.
Rational cauchy_bound(const IntPolynomial& p);

/// Disjoint isolating intervals in increasing order. Requires squarefree p
/// (NotSquarefree otherwise). Intervals are open, or a closed point when a
/// root is rational and was hit exactly.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisects an isolating interval of a simple root down to width < eps.
/// Returns iv unchanged when eps >= width. Throws LostRoot when the endpoint
/// signs do not bracket a root, BadTolerance when eps <= 0.
RationalInterval refine_root(const IntPolynomial& p, const RationalInterval& iv, const Rational& eps);

} // namespace salem

#endif
