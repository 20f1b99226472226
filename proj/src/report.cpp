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

#include "salemgrowth/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace salem {

using nlohmann::json;

AnalysisBundle analyze(const TilingParams& params, const Rational& eps, std::size_t terms) {
    if (eps <= 0) throw Error(ErrorCode::BadTolerance, "eps must be positive");
    const auto start = std::chrono::steady_clock::now();
    const DenominatorCertification cert = certify_denominator(params);
    const GrowthSeries series = growth_series(cert.params);

    AnalysisBundle b;
    b.params = cert.params;
    b.regime = std::string(curvature_name(cert.params.curvature()));
    b.P = series.numerator();
    b.Q = series.denominator();
    b.cyclotomic_factors = cert.factorization.cyclotomic_factors;
    b.expected_indices = cert.expected_indices;
    b.salem_factor = cert.factorization.salem_factor;
    b.is_salem = cert.certificate.has_value();
    b.cayley_agrees = cert.cayley_agrees;
    b.irreducible = cert.irreducible;
    b.eps = eps;
    b.match = cert.match;
    b.violations = cert.violations;
    if (cert.certificate) {
        b.method = std::string(method_name(cert.certificate->method));
        b.unit_circle_root_pairs = cert.certificate->unit_circle_root_pairs;
        const AsymptoticProfile prof = asymptotic_profile(series, eps);
        b.lambda = prof.lambda;
        b.lambda_decimal = to_decimal(prof.lambda.midpoint(), digits_for(eps));
        b.K = prof.K;
        b.R = prof.R;
    }
    b.coefficients = coefficients(series, terms);
    b.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return b;
}

unsigned digits_for(const Rational& eps) {
    if (eps <= 0) throw Error(ErrorCode::BadTolerance, "eps must be positive");
    unsigned d = 0;
    Rational step(1);
    while (step > eps) {
        step /= 10;
        ++d;
    }
    return d + 1;
}

// ---------------------------------------------------------------------------

namespace {

json poly_json(const IntPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

json interval_json(const RationalInterval& iv) {
    return {{"lo", to_exact_string(iv.lo)},
            {"hi", to_exact_string(iv.hi)},
            {"lo_closed", iv.lo_closed},
            {"hi_closed", iv.hi_closed},
            {"width", to_exact_string(iv.width())}};
}

Integer parse_integer(const json& j) {
    const std::string s = j.get<std::string>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
    return out;
}

IntPolynomial parse_poly(const json& j) {
    std::vector<Integer> c;
    for (const auto& x : j) c.push_back(parse_integer(x));
    return IntPolynomial(std::move(c));
}

RationalInterval parse_interval(const json& j) {
    return RationalInterval(parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>()),
                            j.at("lo_closed").get<bool>(), j.at("hi_closed").get<bool>());
}

} // namespace

std::string to_json(const AnalysisBundle& b, int indent) {
    json j;
    j["schema"] = kSchema;
    j["params"] = {{"ell", b.params.ell}, {"m", b.params.m}};
    j["regime"] = b.regime;
    j["P"] = poly_json(b.P);
    j["Q"] = poly_json(b.Q);
    j["P_text"] = to_string(b.P);
    j["Q_text"] = to_string(b.Q);
    json factors = json::array();
    for (const auto& f : b.cyclotomic_factors) factors.push_back({{"index", f.index}, {"multiplicity", f.multiplicity}});
    j["cyclotomic_factors"] = factors;
    j["expected_factors"] = b.expected_indices;
    j["salem"] = {{"is_salem", b.is_salem},
                  {"factor", poly_json(b.salem_factor)},
                  {"method", b.method},
                  {"unit_circle_root_pairs", b.unit_circle_root_pairs},
                  {"cayley_agrees", b.cayley_agrees},
                  {"irreducible", b.irreducible}};
    j["eps"] = to_exact_string(b.eps);
    if (b.lambda) {
        j["lambda"] = interval_json(*b.lambda);
        j["lambda"]["decimal"] = b.lambda_decimal;
    } else {
        j["lambda"] = nullptr;
    }
    j["K"] = b.K ? interval_json(*b.K) : json(nullptr);
    j["R"] = b.R ? json(to_exact_string(*b.R)) : json(nullptr);
    json coeffs = json::array();
    for (const auto& c : b.coefficients) coeffs.push_back(c.get_str());
    j["coefficients"] = coeffs;
    j["match"] = b.match;
    j["violations"] = b.violations;
    j["timing"] = {{"elapsed_us", b.elapsed_us}};
    return j.dump(indent);
}

AnalysisBundle bundle_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        if (j.at("schema").get<std::string>() != kSchema)
            throw Error(ErrorCode::ParseError, "unsupported schema '" + j.at("schema").get<std::string>() + "'");
        AnalysisBundle b;
        b.params = TilingParams::make(j.at("params").at("ell").get<int>(), j.at("params").at("m").get<int>());
        b.regime = j.at("regime").get<std::string>();
        b.P = parse_poly(j.at("P"));
        b.Q = parse_poly(j.at("Q"));
        for (const auto& f : j.at("cyclotomic_factors"))
            b.cyclotomic_factors.push_back({f.at("index").get<unsigned>(), f.at("multiplicity").get<unsigned>()});
        b.expected_indices = j.at("expected_factors").get<std::vector<unsigned>>();
        const json& s = j.at("salem");
        b.is_salem = s.at("is_salem").get<bool>();
        b.salem_factor = parse_poly(s.at("factor"));
        b.method = s.at("method").get<std::string>();
        b.unit_circle_root_pairs = s.at("unit_circle_root_pairs").get<unsigned>();
        b.cayley_agrees = s.at("cayley_agrees").get<bool>();
        b.irreducible = s.at("irreducible").get<bool>();
        b.eps = parse_rational(j.at("eps").get<std::string>());
        if (!j.at("lambda").is_null()) {
            b.lambda = parse_interval(j.at("lambda"));
            b.lambda_decimal = j.at("lambda").at("decimal").get<std::string>();
        }
        if (!j.at("K").is_null()) b.K = parse_interval(j.at("K"));
        if (!j.at("R").is_null()) b.R = parse_rational(j.at("R").get<std::string>());
        for (const auto& c : j.at("coefficients")) b.coefficients.push_back(parse_integer(c));
        b.match = j.at("match").get<bool>();
        b.violations = j.at("violations").get<std::vector<std::string>>();
        b.elapsed_us = j.at("timing").at("elapsed_us").get<std::int64_t>();
        return b;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

// ---------------------------------------------------------------------------

std::string describe_factors(const std::vector<CyclotomicFactor>& factors) {
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += ',';
        out += "Phi_" + std::to_string(f.index);
        if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
    }
    return out;
}

std::string csv_preamble() { return "# schema: " + std::string(kSchema); }

std::string sweep_csv_header() {
    return "ell,m,regime,deg_Q,cyclo_indices,salem_deg,lambda_lo,lambda_hi,match";
}

std::string sweep_csv_row(const AnalysisBundle& b) {
    std::ostringstream out;
    std::string indices;
    for (const auto& f : b.cyclotomic_factors)
        for (unsigned k = 0; k < f.multiplicity; ++k) indices += (indices.empty() ? "" : ";") + std::to_string(f.index);
    const unsigned digits = digits_for(b.eps);
    out << b.params.ell << ',' << b.params.m << ',' << b.regime << ',' << b.Q.degree().value_or(0) << ',' << indices
        << ',' << b.salem_factor.degree().value_or(0) << ','
        << (b.lambda ? to_decimal(b.lambda->lo, digits, Rounding::Down) : "") << ','
        << (b.lambda ? to_decimal(b.lambda->hi, digits, Rounding::Up) : "") << ',' << (b.match ? "true" : "false");
    return out.str();
}

std::string bounds_csv_header() { return "n,f_n,lower_bound,upper_bound,inside"; }

std::string bounds_csv_row(const BoundRow& row, unsigned digits) {
    std::ostringstream out;
    out << row.n << ',' << row.f.get_str() << ',' << to_decimal(row.lower.hi, digits, Rounding::Up) << ','
        << to_decimal(row.upper.lo, digits, Rounding::Down) << ',' << (row.inside ? 1 : 0);
    return out.str();
}

} // namespace salem
