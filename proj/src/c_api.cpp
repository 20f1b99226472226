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

#include "salemgrowth/salemgrowth.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "salemgrowth/asymptotics.hpp"
#include "salemgrowth/report.hpp"
#include "salemgrowth/tiling.hpp"

struct sg_series {
    salem::GrowthSeries series;
};

struct sg_analysis {
    salem::AnalysisBundle bundle;
};

struct sg_bounds {
    salem::BoundsReport report;
    salem::AsymptoticProfile profile;
};

struct sg_disk {
    salem::TilingDisk disk;
};

namespace {

thread_local std::string last_error;

sg_status status_of(salem::ErrorCode code) { return static_cast<sg_status>(static_cast<int>(code) + 1); }

sg_status fail(sg_status status, std::string msg) {
    last_error = std::move(msg);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
sg_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return SG_OK;
    } catch (const salem::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(SG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SG_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) throw salem::Error(salem::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string lo_text(const salem::RationalInterval& iv, unsigned digits) {
    return salem::to_decimal(iv.lo, digits, salem::Rounding::Down);
}
std::string hi_text(const salem::RationalInterval& iv, unsigned digits) {
    return salem::to_decimal(iv.hi, digits, salem::Rounding::Up);
}
// Width as 1.23e-31 style text, rounded up.
std::string sci_upper(const salem::Rational& x) {
    if (x == 0) return "0";
    int exp10 = 0;
    salem::Rational y = x;
    while (y >= 10) {
        y /= 10;
        ++exp10;
    }
    while (y < 1) {
        y *= 10;
        --exp10;
    }
    return salem::to_decimal(y, 2, salem::Rounding::Up) + "e" + std::to_string(exp10);
}

} // namespace

extern "C" {

const char* sg_version(void) { return "1.0.0"; }

const char* sg_status_name(sg_status status) {
    if (status == SG_OK) return "OK";
    if (status == SG_ERR_IO) return "IoError";
    if (status == SG_ERR_INTERNAL) return "InternalError";
    const int idx = static_cast<int>(status) - 1;
    if (idx < 0 || idx > static_cast<int>(salem::ErrorCode::ParseError)) return "Unknown";
    return salem::error_name(static_cast<salem::ErrorCode>(idx)).data();
}

const char* sg_last_error(void) { return last_error.c_str(); }

void sg_string_free(char* s) { std::free(s); }

void sg_strings_free(char** v, size_t count) {
    if (!v) return;
    for (size_t i = 0; i < count; ++i) std::free(v[i]);
    std::free(v);
}

sg_status sg_regime(int ell, int m, const char** out) {
    return guarded([&] {
        require(out, "out");
        *out = salem::curvature_name(salem::TilingParams::make(ell, m).curvature()).data();
    });
}

// ---------------------------------------------------------------------------

sg_status sg_series_create(int ell, int m, sg_series** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sg_series{salem::growth_series(salem::TilingParams::make(ell, m))};
    });
}

void sg_series_free(sg_series* s) { delete s; }

sg_status sg_series_numerator(const sg_series* s, char** out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = dup(salem::to_string(s->series.numerator()));
    });
}

sg_status sg_series_denominator(const sg_series* s, char** out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        *out = dup(salem::to_string(s->series.denominator()));
    });
}

sg_status sg_series_coefficients(const sg_series* s, size_t count, char*** out) {
    return guarded([&] {
        require(s, "series");
        require(out, "out");
        const auto coeffs = salem::coefficients(s->series, count);
        char** v = static_cast<char**>(std::calloc(count ? count : 1, sizeof(char*)));
        if (!v) throw std::bad_alloc();
        try {
            for (size_t i = 0; i < count; ++i) v[i] = dup(coeffs[i].get_str());
        } catch (...) {
            sg_strings_free(v, count);
            throw;
        }
        *out = v;
    });
}

// ---------------------------------------------------------------------------

sg_status sg_analyze(int ell, int m, const char* eps, size_t terms, sg_analysis** out) {
    return guarded([&] {
        require(eps, "eps");
        require(out, "out");
        const salem::Rational e = salem::parse_rational(eps);
        *out = new sg_analysis{salem::analyze(salem::TilingParams::make(ell, m), e, terms)};
    });
}

void sg_analysis_free(sg_analysis* a) { delete a; }

int sg_analysis_match(const sg_analysis* a) { return a && a->bundle.match ? 1 : 0; }

sg_status sg_analysis_field(const sg_analysis* a, const char* key, char** out) {
    return guarded([&] {
        require(a, "analysis");
        require(key, "key");
        require(out, "out");
        const salem::AnalysisBundle& b = a->bundle;
        const std::string k = key;
        const unsigned digits = salem::digits_for(b.eps);
        auto need = [&](const auto& opt) -> const auto& {
            if (!opt) throw salem::Error(salem::ErrorCode::InvalidArgument, k + " is unavailable: no Salem certificate");
            return *opt;
        };
        std::string v;
        if (k == "P") v = salem::to_string(b.P);
        else if (k == "Q") v = salem::to_string(b.Q);
        else if (k == "regime") v = b.regime;
        else if (k == "cyclotomic") v = "[" + salem::describe_factors(b.cyclotomic_factors) + "]";
        else if (k == "expected") {
            std::vector<salem::CyclotomicFactor> exp;
            for (unsigned i : b.expected_indices) exp.push_back({i, 1});
            v = "[" + salem::describe_factors(exp) + "]";
        } else if (k == "salem") v = b.is_salem ? "yes" : "no";
        else if (k == "salem_factor") v = salem::to_string(b.salem_factor);
        else if (k == "method") v = b.method;
        else if (k == "cayley_agrees") v = b.cayley_agrees ? "yes" : "no";
        else if (k == "irreducible") v = b.irreducible ? "yes" : "no";
        else if (k == "lambda_decimal") v = (need(b.lambda), b.lambda_decimal);
        else if (k == "lambda_lo") v = lo_text(need(b.lambda), digits);
        else if (k == "lambda_hi") v = hi_text(need(b.lambda), digits);
        else if (k == "lambda_width") v = sci_upper(need(b.lambda).width());
        else if (k == "K_lo") v = lo_text(need(b.K), digits);
        else if (k == "K_hi") v = hi_text(need(b.K), digits);
        else if (k == "R") v = salem::to_decimal(need(b.R), digits, salem::Rounding::Up);
        else if (k == "violations") v = join(b.violations, "; ");
        else if (k == "elapsed_us") v = std::to_string(b.elapsed_us);
        else throw salem::Error(salem::ErrorCode::InvalidArgument, "unknown analysis field '" + k + "'");
        *out = dup(v);
    });
}

sg_status sg_analysis_to_json(const sg_analysis* a, char** out) {
    return guarded([&] {
        require(a, "analysis");
        require(out, "out");
        *out = dup(salem::to_json(a->bundle));
    });
}

sg_status sg_analysis_from_json(const char* json, sg_analysis** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new sg_analysis{salem::bundle_from_json(json)};
    });
}

int sg_analysis_equal(const sg_analysis* a, const sg_analysis* b) {
    return a && b && a->bundle == b->bundle ? 1 : 0;
}

const char* sg_csv_preamble(void) {
    static const std::string line = salem::csv_preamble();
    return line.c_str();
}

const char* sg_sweep_csv_header(void) {
    static const std::string header = salem::sweep_csv_header();
    return header.c_str();
}

sg_status sg_analysis_csv_row(const sg_analysis* a, char** out) {
    return guarded([&] {
        require(a, "analysis");
        require(out, "out");
        *out = dup(salem::sweep_csv_row(a->bundle));
    });
}

// ---------------------------------------------------------------------------

sg_status sg_bounds_check(int ell, int m, size_t n_max, sg_bounds** out) {
    return guarded([&] {
        require(out, "out");
        const salem::TilingParams params = salem::TilingParams::make(ell, m);
        salem::require_hyperbolic(params);
        const salem::GrowthSeries series = salem::growth_series(params);
        salem::AsymptoticProfile profile = salem::asymptotic_profile(series, salem::Rational(1, 1000000));
        salem::BoundsReport report = salem::check_bounds(series, profile, n_max);
        *out = new sg_bounds{std::move(report), std::move(profile)};
    });
}

void sg_bounds_free(sg_bounds* b) { delete b; }

int sg_bounds_holds(const sg_bounds* b) { return b && b->report.holds ? 1 : 0; }

size_t sg_bounds_row_count(const sg_bounds* b) { return b ? b->report.rows.size() : 0; }

sg_status sg_bounds_field(const sg_bounds* b, const char* key, char** out) {
    return guarded([&] {
        require(b, "bounds");
        require(key, "key");
        require(out, "out");
        const salem::BoundsReport& r = b->report;
        const std::string k = key;
        constexpr unsigned digits = 40;
        std::string v;
        if (k == "lambda_lo") v = lo_text(r.lambda, digits);
        else if (k == "lambda_hi") v = hi_text(r.lambda, digits);
        else if (k == "lambda_width") v = sci_upper(r.lambda.width());
        else if (k == "K_lo") v = lo_text(r.K, digits);
        else if (k == "K_hi") v = hi_text(r.K, digits);
        else if (k == "K_width") v = sci_upper(r.K.width());
        else if (k == "R") v = salem::to_decimal(b->profile.R, 20, salem::Rounding::Up);
        else if (k == "worst_margin") v = salem::to_decimal(r.worst_margin, 20, salem::Rounding::Down);
        else if (k == "worst_n") v = std::to_string(r.worst_n);
        else if (k == "bits") v = std::to_string(r.bits);
        else throw salem::Error(salem::ErrorCode::InvalidArgument, "unknown bounds field '" + k + "'");
        *out = dup(v);
    });
}

sg_status sg_bounds_csv(const sg_bounds* b, char** out) {
    return guarded([&] {
        require(b, "bounds");
        require(out, "out");
        std::string text = salem::csv_preamble() + "\n" + salem::bounds_csv_header() + "\n";
        for (const auto& row : b->report.rows) text += salem::bounds_csv_row(row, 6) + "\n";
        *out = dup(text);
    });
}

// ---------------------------------------------------------------------------

sg_status sg_disk_build(int ell, int m, int radius, size_t max_vertices, sg_disk** out) {
    return guarded([&] {
        require(out, "out");
        salem::DiskOptions options;
        if (max_vertices) options.max_vertices = max_vertices;
        *out = new sg_disk{salem::build_disk(salem::TilingParams::make(ell, m), radius, options)};
    });
}

void sg_disk_free(sg_disk* d) { delete d; }

int sg_disk_is_closed(const sg_disk* d) { return d && d->disk.is_closed() ? 1 : 0; }
int sg_disk_completed_radius(const sg_disk* d) { return d ? d->disk.completed_radius() : -1; }
size_t sg_disk_vertex_count(const sg_disk* d) { return d ? d->disk.vertex_count() : 0; }
size_t sg_disk_edge_count(const sg_disk* d) { return d ? d->disk.edge_count() : 0; }
size_t sg_disk_face_count(const sg_disk* d) { return d ? d->disk.face_count() : 0; }

sg_status sg_disk_sphere_sizes(const sg_disk* d, int radius, uint64_t* out, size_t cap, size_t* len) {
    return guarded([&] {
        require(d, "disk");
        require(len, "len");
        const auto sizes = salem::sphere_sizes(d->disk, radius).sizes;
        *len = sizes.size();
        if (sizes.size() > cap)
            throw salem::Error(salem::ErrorCode::InvalidArgument,
                               "buffer holds " + std::to_string(cap) + " layers, need " + std::to_string(sizes.size()));
        require(out, "out");
        std::copy(sizes.begin(), sizes.end(), out);
    });
}

sg_status sg_disk_validate(const sg_disk* d, int* ok, char** failures) {
    return guarded([&] {
        require(d, "disk");
        require(ok, "ok");
        const salem::DiskValidation v = salem::validate_disk(d->disk);
        *ok = v.ok() ? 1 : 0;
        if (failures) *failures = dup(join(v.failures, "\n"));
    });
}

sg_status sg_disk_write_edge_list(const sg_disk* d, const char* path) {
    last_error.clear();
    if (!d || !path) return fail(SG_ERR_INVALID_ARGUMENT, "disk and path must be non-NULL");
    std::ofstream file(path);
    if (!file) return fail(SG_ERR_IO, std::string("cannot open ") + path);
    const sg_status st = guarded([&] { salem::write_edge_list(d->disk, file); });
    if (st != SG_OK) return st;
    file.close();
    if (!file) return fail(SG_ERR_IO, std::string("write failed for ") + path);
    return SG_OK;
}

} // extern "C"
