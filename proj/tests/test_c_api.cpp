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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "salemgrowth/salemgrowth.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    sg_string_free(s);
    return out;
}

std::string field(const sg_analysis* a, const char* key) {
    char* s = nullptr;
    REQUIRE(sg_analysis_field(a, key, &s) == SG_OK);
    return take(s);
}

struct AnalysisFree {
    void operator()(sg_analysis* a) const { sg_analysis_free(a); }
};
using Analysis = std::unique_ptr<sg_analysis, AnalysisFree>;

} // namespace

TEST_CASE("status plumbing") {
    CHECK(std::string(sg_status_name(SG_OK)) == "OK");
    CHECK(std::string(sg_status_name(SG_ERR_SPHERICAL_REGIME)) == "SphericalRegime");
    CHECK(std::string(sg_version()).size() > 0);
    const char* regime = nullptr;
    CHECK(sg_regime(8, 8, &regime) == SG_OK);
    CHECK(std::string(regime) == "hyperbolic");
    CHECK(sg_regime(2, 8, &regime) == SG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(sg_last_error()).size() > 0);
    CHECK(sg_regime(4, 4, nullptr) == SG_ERR_INVALID_ARGUMENT);
    sg_string_free(nullptr);
    sg_strings_free(nullptr, 0);
    sg_analysis_free(nullptr);
    sg_series_free(nullptr);
    sg_bounds_free(nullptr);
    sg_disk_free(nullptr);
}

TEST_CASE("series through C") {
    sg_series* s = nullptr;
    REQUIRE(sg_series_create(8, 8, &s) == SG_OK);
    char* p = nullptr;
    REQUIRE(sg_series_numerator(s, &p) == SG_OK);
    CHECK(take(p).size() > 0);
    char** coeffs = nullptr;
    REQUIRE(sg_series_coefficients(s, 4, &coeffs) == SG_OK);
    CHECK(std::string(coeffs[0]) == "1");
    CHECK(std::string(coeffs[1]) == "8");
    CHECK(std::string(coeffs[2]) == "56");
    CHECK(std::string(coeffs[3]) == "392");
    sg_strings_free(coeffs, 4);
    sg_series_free(s);

    sg_series* t = nullptr;
    CHECK(sg_series_create(3, 4, &t) == SG_ERR_SPHERICAL_REGIME);
    CHECK(t == nullptr);
    CHECK(sg_series_coefficients(nullptr, 3, &coeffs) == SG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("analysis through C") {
    sg_analysis* raw = nullptr;
    REQUIRE(sg_analyze(8, 8, "1e-20", 6, &raw) == SG_OK);
    Analysis a(raw);
    CHECK(sg_analysis_match(a.get()) == 1);
    CHECK(field(a.get(), "regime") == "hyperbolic");
    CHECK(field(a.get(), "lambda_decimal").rfind("6.9798357792155", 0) == 0);
    CHECK(field(a.get(), "cyclotomic") == "[]");
    CHECK(field(a.get(), "cayley_agrees") == "yes");
    char* s = nullptr;
    CHECK(sg_analysis_field(a.get(), "nonsense", &s) == SG_ERR_INVALID_ARGUMENT);

    char* json = nullptr;
    REQUIRE(sg_analysis_to_json(a.get(), &json) == SG_OK);
    sg_analysis* back_raw = nullptr;
    REQUIRE(sg_analysis_from_json(json, &back_raw) == SG_OK);
    Analysis back(back_raw);
    CHECK(sg_analysis_equal(a.get(), back.get()) == 1);
    sg_string_free(json);

    sg_analysis* bad = nullptr;
    CHECK(sg_analysis_from_json("{\"schema\":\"other\"}", &bad) == SG_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(sg_analyze(8, 8, "zero", 0, &bad) == SG_ERR_PARSE);
    CHECK(sg_analyze(8, 8, "0", 0, &bad) == SG_ERR_BAD_TOLERANCE);
    CHECK(sg_analyze(4, 4, "1e-6", 0, &bad) == SG_ERR_EUCLIDEAN_REGIME);
    CHECK(sg_analyze(3, 3, "1e-6", 0, &bad) == SG_ERR_SPHERICAL_REGIME);
    CHECK(sg_analyze(8, 8, nullptr, 0, &bad) == SG_ERR_INVALID_ARGUMENT);

    char* row = nullptr;
    REQUIRE(sg_analysis_csv_row(a.get(), &row) == SG_OK);
    CHECK(take(row).rfind("8,8,hyperbolic,4,,4,", 0) == 0);
    CHECK(std::string(sg_sweep_csv_header()).rfind("ell,m,", 0) == 0);
    CHECK(std::string(sg_csv_preamble()) == "# schema: salem-growth/1");
}

TEST_CASE("cyclotomic factor through C") {
    sg_analysis* raw = nullptr;
    REQUIRE(sg_analyze(3, 16, "1e-10", 0, &raw) == SG_OK);
    Analysis a(raw);
    CHECK(field(a.get(), "cyclotomic") == "[Phi_6]");
    CHECK(field(a.get(), "expected") == "[Phi_6]");
}

TEST_CASE("bounds through C") {
    sg_bounds* b = nullptr;
    REQUIRE(sg_bounds_check(5, 4, 100, &b) == SG_OK);
    CHECK(sg_bounds_holds(b) == 1);
    CHECK(sg_bounds_row_count(b) == 101);
    char* csv = nullptr;
    REQUIRE(sg_bounds_csv(b, &csv) == SG_OK);
    std::istringstream lines(take(csv));
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# schema: salem-growth/1");
    std::getline(lines, line);
    CHECK(line == "n,f_n,lower_bound,upper_bound,inside");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.back() == '1');
    }
    CHECK(rows == 101);
    char* w = nullptr;
    REQUIRE(sg_bounds_field(b, "lambda_width", &w) == SG_OK);
    CHECK(take(w).size() > 0);
    CHECK(sg_bounds_field(b, "bogus", &w) == SG_ERR_INVALID_ARGUMENT);
    sg_bounds_free(b);
    CHECK(sg_bounds_check(6, 3, 10, &b) == SG_ERR_EUCLIDEAN_REGIME);
}

TEST_CASE("disk through C") {
    sg_disk* d = nullptr;
    REQUIRE(sg_disk_build(4, 5, 3, 0, &d) == SG_OK);
    CHECK(sg_disk_is_closed(d) == 0);
    CHECK(sg_disk_completed_radius(d) >= 4);
    uint64_t sizes[8] = {};
    size_t len = 0;
    REQUIRE(sg_disk_sphere_sizes(d, 3, sizes, 8, &len) == SG_OK);
    CHECK(len == 4);
    CHECK(sizes[0] == 1);
    CHECK(sizes[1] == 4);
    CHECK(sg_disk_sphere_sizes(d, 3, sizes, 2, &len) == SG_ERR_INVALID_ARGUMENT);
    CHECK(len == 4);
    CHECK(sg_disk_sphere_sizes(d, 40, sizes, 8, &len) == SG_ERR_INCOMPLETE_DISK);
    int ok = 0;
    char* failures = nullptr;
    REQUIRE(sg_disk_validate(d, &ok, &failures) == SG_OK);
    CHECK(ok == 1);
    CHECK(take(failures) == "");

    const auto path = std::filesystem::temp_directory_path() / "sg_c_api_edges.txt";
    REQUIRE(sg_disk_write_edge_list(d, path.string().c_str()) == SG_OK);
    std::ifstream in(path);
    std::size_t edges = 0;
    unsigned u, v;
    while (in >> u >> v) ++edges;
    CHECK(edges == sg_disk_edge_count(d));
    std::filesystem::remove(path);
    CHECK(sg_disk_write_edge_list(d, "/nonexistent-dir/x/edges.txt") == SG_ERR_IO);
    sg_disk_free(d);

    sg_disk* big = nullptr;
    CHECK(sg_disk_build(8, 8, 5, 1000, &big) == SG_ERR_DISK_TOO_LARGE);
    CHECK(big == nullptr);
    CHECK(sg_disk_build(8, 8, -1, 0, &big) == SG_ERR_INVALID_ARGUMENT);

    REQUIRE(sg_disk_build(3, 4, 9, 0, &d) == SG_OK);
    CHECK(sg_disk_is_closed(d) == 1);
    CHECK(sg_disk_vertex_count(d) == 8);
    CHECK(sg_disk_face_count(d) == 6);
    sg_disk_free(d);
}
