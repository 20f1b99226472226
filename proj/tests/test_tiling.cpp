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

#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "salemgrowth/tiling.hpp"

using namespace salem;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

std::vector<std::uint64_t> sizes(int ell, int m, int r) {
    return sphere_sizes(build_disk(TilingParams::make(ell, m), r), r).sizes;
}

std::vector<std::uint64_t> series_sizes(int ell, int m, int r) {
    std::vector<std::uint64_t> out;
    for (const auto& c : coefficients(growth_series(TilingParams::make(ell, m)), static_cast<std::size_t>(r) + 1))
        out.push_back(c.get_ui());
    return out;
}

} // namespace

TEST_CASE("square grid ball") {
    const TilingDisk d = build_disk(TilingParams::make(4, 4), 3);
    CHECK(validate_disk(d).ok());
    CHECK(sphere_sizes(d, 3).sizes == std::vector<std::uint64_t>{1, 4, 8, 12});
    // The l1 ball of radius 3 inside the 7x7 box has 25 vertices, each interior.
    const auto dist = d.distances();
    std::size_t ball = 0;
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (d.vertex_alive(static_cast<int>(v)) && dist[v] >= 0 && dist[v] <= 3) {
            ++ball;
            CHECK(d.is_interior(static_cast<int>(v)));
        }
    CHECK(ball == 25);
}

TEST_CASE("tetrahedron closes up") {
    const TilingDisk d = build_disk(TilingParams::make(3, 3), 2);
    CHECK(d.is_closed());
    CHECK(d.vertex_count() == 4);
    CHECK(d.edge_count() == 6);
    CHECK(d.face_count() == 4);
    const DiskValidation v = validate_disk(d);
    CHECK(v.ok());
    for (std::size_t x = 0; x < d.vertex_slots(); ++x)
        if (d.vertex_alive(static_cast<int>(x))) CHECK(d.is_interior(static_cast<int>(x)));
    CHECK(sphere_sizes(d).sizes == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("spherical maps are the Platonic solids") {
    struct Solid {
        int ell, m;
        std::size_t v, e, f;
        std::vector<std::uint64_t> spheres;
    };
    const std::vector<Solid> solids = {
        {3, 3, 4, 6, 4, {1, 3}},
        {3, 4, 8, 12, 6, {1, 3, 3, 1}},
        {4, 3, 6, 12, 8, {1, 4, 1}},
        {3, 5, 20, 30, 12, {1, 3, 6, 6, 3, 1}},
        {5, 3, 12, 30, 20, {1, 5, 5, 1}},
    };
    for (const auto& s : solids) {
        const TilingDisk d = build_disk(TilingParams::make(s.ell, s.m), 10);
        CHECK(d.is_closed());
        CHECK(d.vertex_count() == s.v);
        CHECK(d.edge_count() == s.e);
        CHECK(d.face_count() == s.f);
        CHECK(d.vertex_count() + d.face_count() == d.edge_count() + 2);
        CHECK(validate_disk(d).ok());
        CHECK(sphere_sizes(d).sizes == s.spheres);
    }
}

TEST_CASE("(3,7) disk is cubic with heptagonal faces") {
    const TilingDisk d = build_disk(TilingParams::make(3, 7), 3);
    const DiskValidation v = validate_disk(d);
    CHECK(v.ok());
    CHECK(v.face_lengths);
    CHECK(v.interior_degrees);
    CHECK(d.completed_radius() >= 4);
}

TEST_CASE("sphere sizes match the series on small parameters") {
    for (auto [ell, m, r] : std::vector<std::tuple<int, int, int>>{
             {3, 7, 5}, {7, 3, 4}, {4, 5, 4}, {5, 4, 4}, {4, 6, 4}, {6, 4, 4}, {3, 8, 5}, {3, 9, 5}, {4, 4, 6},
             {6, 3, 6}, {3, 6, 6}, {5, 5, 3}}) {
        CAPTURE(ell);
        CAPTURE(m);
        CHECK(sizes(ell, m, r) == series_sizes(ell, m, r));
    }
    CHECK(sizes(8, 8, 2) == std::vector<std::uint64_t>{1, 8, 56});
    CHECK(sizes(6, 3, 3) == std::vector<std::uint64_t>{1, 6, 12, 18});
}

TEST_CASE("base point does not matter") {
    DiskOptions flipped;
    flipped.reverse_seed = true;
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{3, 7}, {4, 5}, {5, 4}}) {
        const TilingDisk a = build_disk(TilingParams::make(ell, m), 4);
        const TilingDisk b = build_disk(TilingParams::make(ell, m), 4, flipped);
        CHECK(validate_disk(b).ok());
        CHECK(sphere_sizes(a, 4).sizes == sphere_sizes(b, 4).sizes);
    }
}

TEST_CASE("exponential growth witness") {
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{3, 7}, {4, 5}, {7, 3}, {5, 5}}) {
        const auto s = sizes(ell, m, 4);
        for (std::size_t n = 1; n + 1 < s.size(); ++n) CHECK(s[n + 1] > s[n]);
    }
}

TEST_CASE("distances beyond the completed radius are refused") {
    const TilingDisk d = build_disk(TilingParams::make(3, 7), 2);
    CHECK(code_of([&] { sphere_sizes(d, d.completed_radius() + 1); }) == ErrorCode::IncompleteDisk);
    CHECK(sphere_sizes(d, d.completed_radius()).sizes.size() == static_cast<std::size_t>(d.completed_radius()) + 1);
}

TEST_CASE("vertex cap") {
    DiskOptions small;
    small.max_vertices = 500;
    CHECK(code_of([&] { build_disk(TilingParams::make(8, 8), 4, small); }) == ErrorCode::DiskTooLarge);
    CHECK(code_of([] { build_disk(TilingParams::make(8, 8), -1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fault injection is detected") {
    TilingDisk d = build_disk(TilingParams::make(4, 5), 2);
    REQUIRE(validate_disk(d).ok());
    auto& hs = d.mutable_half_edges();
    std::size_t victim = 0;
    while (hs[victim].origin < 0) ++victim;
    hs[victim].twin = static_cast<int>(victim);
    const DiskValidation v = validate_disk(d);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.twin_involution);
    CHECK_FALSE(v.failures.empty());

    TilingDisk e = build_disk(TilingParams::make(4, 5), 2);
    auto& he = e.mutable_half_edges();
    std::size_t a = 0;
    while (he[a].origin < 0 || he[a].face < 0) ++a;
    const int nxt = he[a].next;
    he[a].next = he[static_cast<std::size_t>(nxt)].next;
    CHECK_FALSE(validate_disk(e).next_prev_inverse);
}

TEST_CASE("edge list export") {
    const TilingDisk d = build_disk(TilingParams::make(3, 3), 1);
    std::ostringstream out;
    write_edge_list(d, out);
    std::istringstream in(out.str());
    std::set<std::pair<int, int>> edges;
    std::map<int, int> degree;
    int u, v;
    while (in >> u >> v) {
        CHECK(u < v);
        edges.insert({u, v});
        ++degree[u];
        ++degree[v];
    }
    CHECK(edges.size() == 6);
    CHECK(degree.size() == 4);
    for (const auto& [x, deg] : degree) CHECK(deg == 3);
    CHECK(degree.count(0) == 1);

    // Distances recomputed from the exported edge list agree with the map.
    const TilingDisk g = build_disk(TilingParams::make(3, 7), 3);
    const auto list = g.edge_list();
    std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
    for (auto [a, b] : list) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<std::uint32_t, int> dist{{0, 0}};
    std::queue<std::uint32_t> q;
    q.push(0);
    while (!q.empty()) {
        const auto x = q.front();
        q.pop();
        for (auto y : adj[x])
            if (!dist.count(y)) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    std::vector<std::uint64_t> layers(4, 0);
    for (auto [x, k] : dist)
        if (k <= 3) ++layers[static_cast<std::size_t>(k)];
    CHECK(layers == sphere_sizes(g, 3).sizes);
}
