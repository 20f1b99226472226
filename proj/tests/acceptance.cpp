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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from the oracles in oracles.hpp or
// from direct exact computation here, never from the library under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "salemgrowth/asymptotics.hpp"
#include "salemgrowth/growth.hpp"
#include "salemgrowth/salem.hpp"
#include "salemgrowth/tiling.hpp"

using namespace salem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (ok) detail << why << "; ";
        ok = false;
    }
};

bool run(int id, const char* name, double budget_ms, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms > budget_ms) {
        std::ostringstream why;
        why << "over time budget " << budget_ms << " ms";
        out.fail(why.str());
    }
    std::printf("criterion %d: %s  %-34s %10.3f ms  %s\n", id, out.ok ? "PASS" : "FAIL", name, ms,
                out.detail.str().c_str());
    std::fflush(stdout);
    return out.ok;
}

std::string pair(int ell, int m) { return "(" + std::to_string(ell) + "," + std::to_string(m) + ")"; }

std::vector<unsigned> flat_indices(const std::vector<CyclotomicFactor>& fs) {
    std::vector<unsigned> out;
    for (const auto& f : fs)
        for (unsigned k = 0; k < f.multiplicity; ++k) out.push_back(f.index);
    std::sort(out.begin(), out.end());
    return out;
}

// Sign of (a + e sqrt(D)) / 2 - t, D > 0, exactly.
int sign_root_minus(long a, long D, int e, long t) {
    // e sqrt(D) vs 2t - a
    const long rhs = 2 * t - a;
    if (e > 0) {
        if (rhs < 0) return 1;
        const long lhs2 = D, rhs2 = rhs * rhs;
        return lhs2 > rhs2 ? 1 : (lhs2 < rhs2 ? -1 : 0);
    }
    if (rhs > 0) return -1;
    const long lhs2 = D, rhs2 = rhs * rhs;
    return lhs2 > rhs2 ? -1 : (lhs2 < rhs2 ? 1 : 0);
}

struct QuadraticRoots {
    bool real_simple = false;  // D > 0
    int above = 0;             // roots > 1
    int below = 0;             // roots < -1
    int on_unit = 0;           // roots equal to +-1
};

QuadraticRoots classify_quadratic(long a, long b) {
    QuadraticRoots q;
    const long D = a * a - 4 * b;
    if (D <= 0) return q;  // double root, or a conjugate pair of modulus sqrt(b)
    q.real_simple = true;
    for (int e : {1, -1}) {
        const int s1 = sign_root_minus(a, D, e, 1), s2 = sign_root_minus(a, D, e, -1);
        if (s1 > 0) ++q.above;
        if (s2 < 0) ++q.below;
        if (s1 == 0 || s2 == 0) ++q.on_unit;
    }
    return q;
}

// Real Salem number lambda > 1 whose conjugate lies strictly inside the unit
// disk and is nonzero.
bool quadratic_root_oracle(long a, long b) {
    const QuadraticRoots q = classify_quadratic(a, b);
    return b != 0 && q.real_simple && q.above == 1 && q.below == 0 && q.on_unit == 0;
}

// Literal reading: exactly one root of modulus above 1, and it is simple.
bool quadratic_literal_definition(long a, long b) {
    const QuadraticRoots q = classify_quadratic(a, b);
    return q.real_simple && q.above + q.below == 1;
}

} // namespace

int main() {
    bool all = true;
    std::printf("salemgrowth acceptance run\n");

    // 1. Genus-2 surface group series.
    all &= run(1, "surface group (8,8) series", 1.0, [](Outcome& o) {
        const GrowthSeries s = growth_series(TilingParams::make(8, 8));
        const std::vector<Integer> num{1, 2, 2, 2, 1}, den{1, -6, -6, -6, 1};
        if (!std::ranges::equal(s.numerator().coeffs(), num)) o.fail("numerator " + to_string(s.numerator()));
        if (!std::ranges::equal(s.denominator().coeffs(), den)) o.fail("denominator " + to_string(s.denominator()));
        if (o.ok) o.detail << "P = " << to_string(s.numerator()) << ", Q = " << to_string(s.denominator());
    });

    std::vector<TilingParams> sweep;
    for (int ell = 3; ell <= 30; ++ell)
        for (int m = 3; m <= 30; ++m) {
            const TilingParams p = TilingParams::make(ell, m);
            if (p.curvature() == CurvatureClass::Hyperbolic) sweep.push_back(p);
        }

    // 2. Denominator sweep.
    std::vector<DenominatorCertification> certs;
    all &= run(2, "denominator sweep 3..30", 60'000.0, [&](Outcome& o) {
        std::set<unsigned> rules_hit;
        for (const auto& p : sweep) {
            certs.push_back(certify_denominator(p));
            const auto& c = certs.back();
            const auto observed = flat_indices(c.factorization.cyclotomic_factors);
            const auto expected = expected_factor_indices(p);
            if (!c.certificate) o.fail(pair(p.ell, p.m) + " remainder not Salem");
            if (observed != expected) o.fail(pair(p.ell, p.m) + " cyclotomic multiset differs");
            if (!c.match) o.fail(pair(p.ell, p.m) + " certification mismatch");
            // Reassemble Q from the factorization.
            if (c.factorization.salem_factor * c.factorization.cyclotomic_part() != growth_series(p).denominator())
                o.fail(pair(p.ell, p.m) + " factorization does not multiply back");
            const auto& rules = exceptional_factor_rules();
            for (std::size_t i = 0; i < rules.size(); ++i)
                if (rules[i].matches(p)) rules_hit.insert(static_cast<unsigned>(i));
        }
        if (rules_hit.size() != exceptional_factor_rules().size()) o.fail("some exceptional rule never fired");
        const std::vector<std::pair<TilingParams, unsigned>> anchors = {
            {TilingParams::make(3, 16), 6}, {TilingParams::make(3, 9), 3},  {TilingParams::make(3, 25), 10},
            {TilingParams::make(4, 11), 4}, {TilingParams::make(5, 15), 6}, {TilingParams::make(7, 6), 2}};
        for (const auto& [p, idx] : anchors) {
            const auto c = certify_denominator(p);
            if (flat_indices(c.factorization.cyclotomic_factors) != std::vector<unsigned>{idx})
                o.fail(pair(p.ell, p.m) + " anchor factor missing");
        }
        o.detail << sweep.size() << " hyperbolic pairs, " << rules_hit.size() << " exceptional rules hit";
    });

    // 3. Trace transform versus Cayley criterion.
    all &= run(3, "trace vs Cayley agreement", 60'000.0, [&](Outcome& o) {
        std::size_t compared = 0, salem_count = 0;
        for (const auto& p : sweep) {
            const IntPolynomial f = certify_denominator(p).factorization.salem_factor;
            const bool trace = is_reciprocal_salem(f).has_value();
            if (trace != is_salem_via_cayley(f)) o.fail(pair(p.ell, p.m) + " verdicts differ");
            ++compared;
        }
        std::mt19937 rng(20261015);
        std::uniform_int_distribution<unsigned> half(1, 5);
        std::size_t random = 0;
        while (random < 500) {
            const IntPolynomial f(oracle::random_reciprocal(rng, half(rng), 8));
            if (eval_integer(f, 1) == 0 || eval_integer(f, -1) == 0 || !is_squarefree(f)) continue;
            ++random;
            const bool trace = is_reciprocal_salem(f).has_value();
            salem_count += trace ? 1 : 0;
            if (trace != is_salem_via_cayley(f)) o.fail(to_string(f) + " verdicts differ");
        }
        o.detail << compared << " sweep + " << random << " random, " << salem_count << " random Salem";
    });

    // 4. Brute-force tiling oracle.
    all &= run(4, "BFS oracle sphere sizes", 300'000.0, [](Outcome& o) {
        const std::vector<std::pair<int, int>> pairs = {{3, 7}, {7, 3}, {4, 5}, {5, 4}, {4, 6},
                                                        {6, 4}, {3, 8}, {8, 8}, {3, 9}};
        std::size_t biggest = 0;
        for (auto [ell, m] : pairs) {
            const TilingParams p = TilingParams::make(ell, m);
            int radius = 5;
            TilingDisk disk = [&] {
                try {
                    return build_disk(p, radius);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::DiskTooLarge) throw;
                    radius = 4;
                    return build_disk(p, radius);
                }
            }();
            biggest = std::max(biggest, disk.vertex_count());
            if (!validate_disk(disk).ok()) o.fail(pair(ell, m) + " invalid disk");
            const auto got = sphere_sizes(disk, radius).sizes;
            const auto want = coefficients(growth_series(p), static_cast<std::size_t>(radius) + 1);
            for (std::size_t n = 0; n < want.size(); ++n)
                if (n >= got.size() || Integer(static_cast<unsigned long>(got[n])) != want[n])
                    o.fail(pair(ell, m) + " differs at n = " + std::to_string(n));
            if (radius != 5) o.detail << pair(ell, m) << " to n <= 4; ";
        }
        o.detail << "9 pairs, largest disk " << biggest << " vertices";
    });

    // 5. Two-sided bounds.
    all &= run(5, "bounds n <= 200, l,m <= 15", 120'000.0, [](Outcome& o) {
        const Integer e30("1000000000000000000000000000000");
        const Rational width(1, 10 * e30);
        std::size_t pairs = 0;
        for (int ell = 3; ell <= 15; ++ell)
            for (int m = 3; m <= 15; ++m) {
                const TilingParams p = TilingParams::make(ell, m);
                if (p.curvature() != CurvatureClass::Hyperbolic) continue;
                ++pairs;
                const GrowthSeries s = growth_series(p);
                const AsymptoticProfile prof = asymptotic_profile(s, width);
                if (!(prof.lambda.width() < Rational(1, e30)))
                    o.fail(pair(ell, m) + " lambda enclosure too wide");
                const BoundsReport rep = check_bounds(s, prof, 200);
                if (!rep.holds) o.fail(pair(ell, m) + " library bound check failed");
                if (!(rep.lambda.width() < Rational(1, e30))) o.fail(pair(ell, m) + " bound enclosure too wide");
                // Independent recheck from the closed hulls of the enclosures
                // the check used; only K > 0 and lambda > 1 are assumed.
                if (!(rep.K.lo > 0 && rep.lambda.lo > 1)) o.fail(pair(ell, m) + " K or lambda out of range");
                const auto f = coefficients(s, 201);
                Rational pw_lo = 1, pw_hi = 1;
                for (std::size_t n = 0; n <= 200; ++n) {
                    const Rational lower = rep.K.hi * pw_hi - prof.R;
                    const Rational upper = rep.K.lo * pw_lo + prof.R;
                    if (!(lower < f[n] && Rational(f[n]) < upper)) {
                        o.fail(pair(ell, m) + " f_" + std::to_string(n) + " outside the band");
                        break;
                    }
                    pw_lo *= rep.lambda.lo;
                    pw_hi *= rep.lambda.hi;
                }
            }
        o.detail << pairs << " hyperbolic pairs";
    });

    // 6. Degree-2 Salem polynomials.
    all &= run(6, "degree-2 closed forms", 10'000.0, [](Outcome& o) {
        for (long a = 3; a <= 50; ++a) {
            const IntPolynomial f{1, -a, 1};
            const auto cert = is_reciprocal_salem(f);
            if (!cert) {
                o.fail("X^2 - " + std::to_string(a) + "X + 1 rejected");
                continue;
            }
            const RationalInterval lam = salem_number(*cert, Rational(1, Integer("1000000000000000000000000")));
            const auto want = oracle::quadratic_salem(a, 120);
            if (lam.hi < want.lo || lam.lo > want.hi) o.fail("lambda enclosure misses a = " + std::to_string(a));
            if (!degree2_salem_check(a, 1)) o.fail("degree2_salem_check(a, 1) false at a = " + std::to_string(a));
        }
        std::size_t positives = 0, literal_only = 0;
        for (long a = -49; a <= 50; ++a)
            for (long b = -49; b <= 50; ++b) {
                const bool got = degree2_salem_check(a, b);
                positives += got ? 1 : 0;
                if (got != (a > std::abs(1 + b) && b != 0)) o.fail("inequality mismatch");
                if (got != quadratic_root_oracle(a, b))
                    o.fail("root oracle mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
                if (quadratic_literal_definition(a, b) && !got) ++literal_only;
                if (got && !quadratic_literal_definition(a, b)) o.fail("rule admits a non-Salem quadratic");
            }
        o.detail << "48 quadratics, 100x100 grid with " << positives << " Salem, " << literal_only
                 << " more under the bare one-root definition";
    });

    // 7. Cyclotomic divisors of r_{a,b}.
    all &= run(7, "cyclotomic divisors of r_{a,b}", 30'000.0, [](Outcome& o) {
        std::size_t cases = 0, phi6 = 0;
        const auto phi = oracle::totients(2 * 40 * 40 + 2);
        for (long a = -10; a <= -1; ++a) {
            if (std::abs(a - 1) < 2) continue;
            for (unsigned b = 2; b <= 40; b += 2) {
                ++cases;
                const IntPolynomial r = r_poly(a, b);
                std::set<unsigned> found;
                for (unsigned n = 1; n <= 2 * b * b + 2; ++n)
                    if (phi[n] <= b && divides(cyclotomic(n), r)) found.insert(n);
                std::set<unsigned> expect;
                if (a == -1 && b % 6 == 2) expect.insert(6);
                if (a == -2 && b == 2) expect.insert(1);
                if (found != expect) o.fail("unexpected divisors at (" + std::to_string(a) + "," + std::to_string(b) + ")");
                phi6 += found.count(6);
            }
        }
        const IntPolynomial ex = r_poly(-2, 2);
        if (ex != IntPolynomial{1, -2, 1}) o.fail("r_{-2,2} is not (X-1)^2");
        bool salem = true;
        try {
            salem = is_reciprocal_salem(ex).has_value();
        } catch (const Error&) {
            salem = false;
        }
        if (salem) o.fail("r_{-2,2} accepted as Salem");
        o.detail << cases << " (a,b), Phi_6 in " << phi6 << ", r_{-2,2} = (X-1)^2 rejected";
    });

    // 8. Euclidean lattices.
    all &= run(8, "Euclidean anchors", 1'000.0, [](Outcome& o) {
        const auto sq = coefficients(growth_series(TilingParams::make(4, 4)), 51);
        const auto tri = coefficients(growth_series(TilingParams::make(6, 3)), 51);
        if (sq[0] != 1 || tri[0] != 1) o.fail("f_0 != 1");
        for (unsigned long n = 1; n <= 50; ++n) {
            if (sq[n] != 4 * n) o.fail("(4,4) differs at n = " + std::to_string(n));
            if (tri[n] != 6 * n) o.fail("(6,3) differs at n = " + std::to_string(n));
        }
        o.detail << "4n and 6n for n <= 50";
    });

    std::printf("overall: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
