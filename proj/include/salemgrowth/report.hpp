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

#ifndef SALEMGROWTH_REPORT_HPP
#define SALEMGROWTH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "salemgrowth/asymptotics.hpp"
#include "salemgrowth/growth.hpp"
#include "salemgrowth/salem.hpp"

namespace salem {

inline constexpr std::string_view kSchema = "salem-growth/1";

/// Everything the certify pipeline learns about one (ell, m).
struct AnalysisBundle {
    TilingParams params;
    std::string regime;
    IntPolynomial P;
    IntPolynomial Q;
    std::vector<CyclotomicFactor> cyclotomic_factors;
    std::vector<unsigned> expected_indices;
    IntPolynomial salem_factor;
    bool is_salem = false;
    std::string method;
    unsigned unit_circle_root_pairs = 0;
    bool cayley_agrees = false;
    bool irreducible = false;
    Rational eps;
    // Absent when the Salem test failed.
    std::optional<RationalInterval> lambda;
    std::string lambda_decimal;
    std::optional<RationalInterval> K;
    std::optional<Rational> R;
    std::vector<Integer> coefficients;
    bool match = false;
    std::vector<std::string> violations;
    std::int64_t elapsed_us = 0;

    friend bool operator==(const AnalysisBundle&, const AnalysisBundle&) = default;
};

/// certify_denominator + asymptotic_profile. Non-hyperbolic parameters raise
/// the matching regime error.
AnalysisBundle analyze(const TilingParams& params, const Rational& eps, std::size_t terms = 0);

/// Decimal digits needed to show a width-eps enclosure.
unsigned digits_for(const Rational& eps);

std::string to_json(const AnalysisBundle& bundle, int indent = 2);
/// ParseError on malformed input or a schema mismatch.
AnalysisBundle bundle_from_json(std::string_view text);

/// Comment line carrying the schema tag; written above every CSV header.
std::string csv_preamble();
std::string sweep_csv_header();
std::string sweep_csv_row(const AnalysisBundle& bundle);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundRow& row, unsigned digits);

/// "Phi_2,Phi_6" style list; "X+1" is shown as Phi_2.
std::string describe_factors(const std::vector<CyclotomicFactor>& factors);

} // namespace salem

#endif
