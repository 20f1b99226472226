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

// Command-line front end. Talks to the library only through salemgrowth.h.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "salemgrowth/salemgrowth.h"

namespace {

enum Exit : int {
    kOk = 0,
    kFailure = 1,  // resource or I/O problem outside the verification contract
    kRegime = 2,
    kMismatch = 3,
    kUsage = 64,
};

int exit_for(sg_status st) {
    switch (st) {
        case SG_OK: return kOk;
        case SG_ERR_SPHERICAL_REGIME:
        case SG_ERR_EUCLIDEAN_REGIME: return kRegime;
        case SG_ERR_THEOREM_VIOLATION: return kMismatch;
        case SG_ERR_INVALID_ARGUMENT:
        case SG_ERR_BAD_TOLERANCE:
        case SG_ERR_PARSE: return kUsage;
        default: return kFailure;
    }
}

int report(sg_status st) {
    std::cerr << "salemgrowth: " << sg_last_error() << '\n';
    return exit_for(st);
}

struct StrDeleter {
    void operator()(char* s) const { sg_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};
using Series = std::unique_ptr<sg_series, HandleDeleter<sg_series, sg_series_free>>;
using Analysis = std::unique_ptr<sg_analysis, HandleDeleter<sg_analysis, sg_analysis_free>>;
using Bounds = std::unique_ptr<sg_bounds, HandleDeleter<sg_bounds, sg_bounds_free>>;
using Disk = std::unique_ptr<sg_disk, HandleDeleter<sg_disk, sg_disk_free>>;

// Non-hyperbolic parameters are a regime rejection for the analytic commands.
int require_hyperbolic(int ell, int m) {
    const char* regime = nullptr;
    if (sg_status st = sg_regime(ell, m, &regime); st != SG_OK) return report(st);
    if (std::string(regime) == "hyperbolic") return kOk;
    std::cerr << "salemgrowth: (" << ell << ", " << m << ") is " << regime
              << "; only hyperbolic parameters are analysed\n";
    return kRegime;
}

std::string field(const sg_analysis* a, const char* key) {
    char* out = nullptr;
    if (sg_analysis_field(a, key, &out) != SG_OK) return "";
    return Str(out).get();
}

std::string bounds_field(const sg_bounds* b, const char* key) {
    char* out = nullptr;
    if (sg_bounds_field(b, key, &out) != SG_OK) return "";
    return Str(out).get();
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    out.close();
    if (!out) std::cerr << "salemgrowth: cannot write " << path << '\n';
    return static_cast<bool>(out);
}

// ---------------------------------------------------------------------------

int cmd_series(int ell, int m, std::size_t terms) {
    sg_series* raw = nullptr;
    if (sg_status st = sg_series_create(ell, m, &raw); st != SG_OK) return report(st);
    Series s(raw);
    char* num = nullptr;
    char* den = nullptr;
    char** coeffs = nullptr;
    if (sg_status st = sg_series_numerator(s.get(), &num); st != SG_OK) return report(st);
    Str num_owner(num);
    if (sg_status st = sg_series_denominator(s.get(), &den); st != SG_OK) return report(st);
    Str den_owner(den);
    if (sg_status st = sg_series_coefficients(s.get(), terms, &coeffs); st != SG_OK) return report(st);
    std::cout << "P\t" << num << "\nQ\t" << den << "\nn\tf_n\n";
    for (std::size_t i = 0; i < terms; ++i) std::cout << i << '\t' << coeffs[i] << '\n';
    sg_strings_free(coeffs, terms);
    return kOk;
}

int cmd_certify(int ell, int m, const std::string& eps, const std::string& json_path, std::size_t terms) {
    if (int rc = require_hyperbolic(ell, m); rc != kOk) return rc;
    sg_analysis* raw = nullptr;
    if (sg_status st = sg_analyze(ell, m, eps.c_str(), terms, &raw); st != SG_OK) return report(st);
    Analysis a(raw);

    std::cout << "ell\t" << ell << "\nm\t" << m << '\n';
    for (const char* key : {"regime", "P", "Q", "cyclotomic", "expected", "salem", "salem_factor", "method",
                            "cayley_agrees", "irreducible"})
        std::cout << key << '\t' << field(a.get(), key) << '\n';
    if (field(a.get(), "salem") == "yes") {
        std::cout << "lambda\t" << field(a.get(), "lambda_decimal") << '\n'
                  << "lambda_enclosure\t[" << field(a.get(), "lambda_lo") << ", " << field(a.get(), "lambda_hi")
                  << "]\n"
                  << "lambda_width\t" << field(a.get(), "lambda_width") << '\n'
                  << "K_enclosure\t[" << field(a.get(), "K_lo") << ", " << field(a.get(), "K_hi") << "]\n"
                  << "R\t" << field(a.get(), "R") << '\n';
    }
    const bool match = sg_analysis_match(a.get()) != 0;
    std::cout << "match\t" << (match ? "yes" : "no") << '\n';
    if (!match) std::cout << "violations\t" << field(a.get(), "violations") << '\n';

    if (!json_path.empty()) {
        char* json = nullptr;
        if (sg_status st = sg_analysis_to_json(a.get(), &json); st != SG_OK) return report(st);
        Str owner(json);
        if (!write_file(json_path, std::string(json) + "\n")) return kFailure;
    }
    return match ? kOk : kMismatch;
}

int cmd_sweep(int ell_max, int m_max, const std::string& csv_path, const std::string& eps, unsigned jobs) {
    std::vector<std::pair<int, int>> work;
    for (int ell = 3; ell <= ell_max; ++ell)
        for (int m = 3; m <= m_max; ++m) {
            const char* regime = nullptr;
            if (sg_regime(ell, m, &regime) == SG_OK && std::string(regime) == "hyperbolic") work.emplace_back(ell, m);
        }

    struct Row {
        std::string csv;
        bool match = false;
        std::string error;
    };
    std::vector<Row> rows(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
            sg_analysis* raw = nullptr;
            const sg_status st = sg_analyze(work[i].first, work[i].second, eps.c_str(), 0, &raw);
            if (st != SG_OK) {
                rows[i].error = sg_last_error();
                continue;
            }
            Analysis a(raw);
            char* csv = nullptr;
            if (sg_analysis_csv_row(a.get(), &csv) == SG_OK) rows[i].csv = Str(csv).get();
            rows[i].match = sg_analysis_match(a.get()) != 0;
        }
    };
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, std::max<std::size_t>(work.size(), 1)); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::string csv = std::string(sg_csv_preamble()) + "\n" + sg_sweep_csv_header() + "\n";
    std::size_t matched = 0;
    std::cout << "ell\tm\tmatch\tdetail\n";
    for (std::size_t i = 0; i < work.size(); ++i) {
        const Row& r = rows[i];
        matched += r.match ? 1 : 0;
        if (!r.csv.empty()) csv += r.csv + "\n";
        std::cout << work[i].first << '\t' << work[i].second << '\t' << (r.match ? "yes" : "no") << '\t'
                  << (r.error.empty() ? r.csv : r.error) << '\n';
    }
    std::cout << "rows\t" << work.size() << "\nmatched\t" << matched << '\n';
    if (!csv_path.empty() && !write_file(csv_path, csv)) return kFailure;
    return matched == work.size() ? kOk : kMismatch;
}

int cmd_oracle(int ell, int m, int radius, std::size_t max_vertices, const std::string& edges_path) {
    const char* regime = nullptr;
    if (sg_status st = sg_regime(ell, m, &regime); st != SG_OK) return report(st);
    if (radius < 0) {
        std::cerr << "salemgrowth: radius must be nonnegative\n";
        return kUsage;
    }
    sg_disk* raw = nullptr;
    if (sg_status st = sg_disk_build(ell, m, radius, max_vertices, &raw); st != SG_OK) return report(st);
    Disk d(raw);

    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(radius) + 1);
    std::size_t len = 0;
    if (sg_status st = sg_disk_sphere_sizes(d.get(), radius, sizes.data(), sizes.size(), &len); st != SG_OK)
        return report(st);
    sizes.resize(len);
    int ok = 0;
    char* failures = nullptr;
    if (sg_status st = sg_disk_validate(d.get(), &ok, &failures); st != SG_OK) return report(st);
    Str failures_owner(failures);
    if (!edges_path.empty())
        if (sg_status st = sg_disk_write_edge_list(d.get(), edges_path.c_str()); st != SG_OK) return report(st);

    std::cout << "regime\t" << regime << "\nvertices\t" << sg_disk_vertex_count(d.get()) << "\nedges\t"
              << sg_disk_edge_count(d.get()) << "\nfaces\t" << sg_disk_face_count(d.get()) << "\ncompleted_radius\t"
              << sg_disk_completed_radius(d.get()) << "\nvalid\t" << (ok ? "yes" : "no") << '\n';
    if (!ok) std::cout << "validation_failures\t" << failures << '\n';

    if (std::string(regime) == "spherical") {
        std::cout << "note\tspherical: no series comparison\nn\ts_n\n";
        for (std::size_t n = 0; n < sizes.size(); ++n) std::cout << n << '\t' << sizes[n] << '\n';
        return ok ? kOk : kMismatch;
    }

    sg_series* sraw = nullptr;
    if (sg_status st = sg_series_create(ell, m, &sraw); st != SG_OK) return report(st);
    Series s(sraw);
    char** coeffs = nullptr;
    if (sg_status st = sg_series_coefficients(s.get(), sizes.size(), &coeffs); st != SG_OK) return report(st);
    bool all_equal = ok != 0;
    std::cout << "n\ts_n\tf_n\tequal\n";
    for (std::size_t n = 0; n < sizes.size(); ++n) {
        const bool eq = std::to_string(sizes[n]) == coeffs[n];
        all_equal = all_equal && eq;
        std::cout << n << '\t' << sizes[n] << '\t' << coeffs[n] << '\t' << (eq ? "yes" : "no") << '\n';
    }
    sg_strings_free(coeffs, sizes.size());
    return all_equal ? kOk : kMismatch;
}

int cmd_bounds(int ell, int m, std::size_t n_max, const std::string& csv_path) {
    if (int rc = require_hyperbolic(ell, m); rc != kOk) return rc;
    sg_bounds* raw = nullptr;
    if (sg_status st = sg_bounds_check(ell, m, n_max, &raw); st != SG_OK) return report(st);
    Bounds b(raw);
    std::cout << "ell\t" << ell << "\nm\t" << m << "\nn_max\t" << n_max << '\n'
              << "lambda_enclosure\t[" << bounds_field(b.get(), "lambda_lo") << ", "
              << bounds_field(b.get(), "lambda_hi") << "]\n"
              << "lambda_width\t" << bounds_field(b.get(), "lambda_width") << '\n'
              << "K_enclosure\t[" << bounds_field(b.get(), "K_lo") << ", " << bounds_field(b.get(), "K_hi") << "]\n"
              << "K_width\t" << bounds_field(b.get(), "K_width") << '\n'
              << "R\t" << bounds_field(b.get(), "R") << '\n'
              << "worst_margin\t" << bounds_field(b.get(), "worst_margin") << '\n'
              << "worst_n\t" << bounds_field(b.get(), "worst_n") << '\n';
    const bool holds = sg_bounds_holds(b.get()) != 0;
    std::cout << "holds\t" << (holds ? "yes" : "no") << '\n';
    if (!csv_path.empty()) {
        char* csv = nullptr;
        if (sg_status st = sg_bounds_csv(b.get(), &csv); st != SG_OK) return report(st);
        Str owner(csv);
        if (!write_file(csv_path, csv)) return kFailure;
    }
    return holds ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact growth series of {m, ell} tessellation graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sg_version());

    int ell = 0, m = 0;
    auto add_lm = [&](CLI::App* sub) {
        sub->add_option("--ell", ell, "vertex degree ell >= 3")->required();
        sub->add_option("--m", m, "face size m >= 3")->required();
    };

    std::size_t terms = 10;
    auto* series = app.add_subcommand("series", "print P, Q and the first coefficients");
    add_lm(series);
    series->add_option("--terms", terms, "number of coefficients")->capture_default_str();

    std::string eps = "1e-10";
    std::string json_path;
    std::size_t json_terms = 16;
    auto* certify = app.add_subcommand("certify", "certify the denominator and enclose lambda, K, R");
    add_lm(certify);
    certify->add_option("--eps", eps, "enclosure width for lambda and K")->capture_default_str();
    certify->add_option("--json", json_path, "write the analysis bundle as JSON");
    certify->add_option("--terms", json_terms, "coefficients recorded in the bundle")->capture_default_str();

    int ell_max = 10, m_max = 10;
    std::string csv_path;
    unsigned jobs = 0;
    std::string sweep_eps = "1e-20";
    auto* sweep = app.add_subcommand("sweep", "certify every hyperbolic (ell, m) in range");
    sweep->add_option("--ell-max", ell_max)->required();
    sweep->add_option("--m-max", m_max)->required();
    sweep->add_option("--csv", csv_path, "write the summary CSV");
    sweep->add_option("--eps", sweep_eps, "lambda enclosure width")->capture_default_str();
    sweep->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");

    int radius = 3;
    std::size_t max_vertices = 0;
    std::string edges_path;
    auto* oracle = app.add_subcommand(
        "oracle", "compare BFS sphere sizes of a built disk with the series (desk scale: radius <= ~6)");
    add_lm(oracle);
    oracle->add_option("--radius", radius)->required();
    oracle->add_option("--max-vertices", max_vertices, "abort above this many vertices (default 5000000)");
    oracle->add_option("--edges", edges_path, "write the disk as an edge list");

    std::size_t n_max = 200;
    std::string bounds_csv;
    auto* bounds = app.add_subcommand("bounds", "check K lambda^n - R < f_n < K lambda^n + R");
    add_lm(bounds);
    bounds->add_option("--n-max", n_max)->capture_default_str();
    bounds->add_option("--csv", bounds_csv, "write per-n rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (series->parsed()) return cmd_series(ell, m, terms);
    if (certify->parsed()) return cmd_certify(ell, m, eps, json_path, json_terms);
    if (sweep->parsed()) return cmd_sweep(ell_max, m_max, csv_path, sweep_eps, jobs);
    if (oracle->parsed()) return cmd_oracle(ell, m, radius, max_vertices, edges_path);
    if (bounds->parsed()) return cmd_bounds(ell, m, n_max, bounds_csv);
    return kUsage;
}
