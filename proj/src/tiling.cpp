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

#include "salemgrowth/tiling.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <unordered_set>

namespace salem {

std::size_t TilingDisk::vertex_count() const noexcept {
    return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
}

std::size_t TilingDisk::edge_count() const noexcept {
    std::size_t live = 0;
    for (const auto& h : half_edges_)
        if (h.origin >= 0) ++live;
    return live / 2;
}

std::vector<int> TilingDisk::distances() const {
    // Adjacency from half-edges: origin -> origin of twin.
    std::vector<std::vector<int>> adj(alive_.size());
    for (const auto& h : half_edges_) {
        if (h.origin < 0 || h.twin < 0) continue;
        adj[static_cast<std::size_t>(h.origin)].push_back(half_edges_[static_cast<std::size_t>(h.twin)].origin);
    }
    std::vector<int> dist(alive_.size(), -1);
    if (alive_.empty()) return dist;
    std::queue<int> q;
    dist[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (u < 0 || dist[static_cast<std::size_t>(u)] >= 0) continue;
            dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
            q.push(u);
        }
    }
    return dist;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> TilingDisk::edge_list() const {
    std::vector<std::uint32_t> dense(alive_.size(), 0);
    std::uint32_t next_id = 0;
    for (std::size_t v = 0; v < alive_.size(); ++v)
        if (alive_[v]) dense[v] = next_id++;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& h : half_edges_) {
        if (h.origin < 0 || h.twin < 0) continue;
        const int target = half_edges_[static_cast<std::size_t>(h.twin)].origin;
        const std::uint32_t u = dense[static_cast<std::size_t>(h.origin)];
        const std::uint32_t v = dense[static_cast<std::size_t>(target)];
        if (u < v) out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

class DiskBuilder {
public:
    DiskBuilder(const TilingParams& params, const DiskOptions& options) : options_(options) {
        d_.params_ = params;
        seed();
    }

    TilingDisk build(int radius) {
        d_.requested_radius_ = radius;
        for (;;) {
            const std::vector<int> dist = d_.distances();
            std::vector<int> targets;
            for (std::size_t v = 0; v < d_.alive_.size(); ++v) {
                if (!d_.alive_[v] || d_.out_boundary_[v] < 0) continue;
                if (dist[v] >= 0 && dist[v] <= radius) targets.push_back(static_cast<int>(v));
            }
            if (targets.empty()) break;
            std::sort(targets.begin(), targets.end(), [&](int a, int b) {
                return std::pair(dist[static_cast<std::size_t>(a)], a) < std::pair(dist[static_cast<std::size_t>(b)], b);
            });
            for (int v : targets) complete(v);
        }
        finish();
        return std::move(d_);
    }

private:
    using HalfEdge = TilingDisk::HalfEdge;

    HalfEdge& he(int i) { return d_.half_edges_[static_cast<std::size_t>(i)]; }
    int target(int h) { return he(he(h).twin).origin; }

    int new_vertex(int faces) {
        d_.alive_.push_back(true);
        d_.faces_.push_back(faces);
        d_.out_boundary_.push_back(-1);
        merged_into_.push_back(-1);
        ++live_vertices_;
        if (live_vertices_ > options_.max_vertices)
            throw Error(ErrorCode::DiskTooLarge, "disk exceeds " + std::to_string(options_.max_vertices) + " vertices");
        return static_cast<int>(d_.alive_.size() - 1);
    }

    // Inner half-edge and its outside twin.
    std::pair<int, int> new_edge(int from, int to) {
        const int a = static_cast<int>(d_.half_edges_.size());
        d_.half_edges_.push_back({from, a + 1, -1, -1, -1});
        d_.half_edges_.push_back({to, a, -1, -1, -1});
        return {a, a + 1};
    }

    int find(int v) {
        while (merged_into_[static_cast<std::size_t>(v)] >= 0) v = merged_into_[static_cast<std::size_t>(v)];
        return v;
    }

    void seed() {
        const int m = d_.params_.m;
        std::vector<int> verts;
        for (int i = 0; i < m; ++i) verts.push_back(new_vertex(1));
        if (options_.reverse_seed) std::reverse(verts.begin() + 1, verts.end());

        const int face = 0;
        d_.face_start_.push_back(-1);
        std::vector<int> inner, outer;
        for (int i = 0; i < m; ++i) {
            auto [a, b] = new_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>((i + 1) % m)]);
            inner.push_back(a);
            outer.push_back(b);
        }
        for (int i = 0; i < m; ++i) {
            const int nxt = (i + 1) % m;
            const int prv = (i + m - 1) % m;
            he(inner[static_cast<std::size_t>(i)]).face = face;
            he(inner[static_cast<std::size_t>(i)]).next = inner[static_cast<std::size_t>(nxt)];
            he(inner[static_cast<std::size_t>(i)]).prev = inner[static_cast<std::size_t>(prv)];
            // outer[i] runs verts[i+1] -> verts[i]; the boundary walks backwards.
            he(outer[static_cast<std::size_t>(i)]).next = outer[static_cast<std::size_t>(prv)];
            he(outer[static_cast<std::size_t>(i)]).prev = outer[static_cast<std::size_t>(nxt)];
            d_.out_boundary_[static_cast<std::size_t>(verts[static_cast<std::size_t>(nxt)])] = outer[static_cast<std::size_t>(i)];
        }
        d_.face_start_[0] = inner[0];
    }

    // Glue a new m-gon onto the outside of boundary half-edge h (a -> b).
    void attach(int h) {
        const int m = d_.params_.m;
        const int a = he(h).origin;
        const int b = target(h);
        const int p = he(h).prev;
        const int q = he(h).next;
        const int face = static_cast<int>(d_.face_start_.size());
        d_.face_start_.push_back(h);

        // Face cycle a -> b -> n1 -> ... -> n_(m-2) -> a.
        std::vector<int> cycle{b};
        for (int k = 0; k < m - 2; ++k) cycle.push_back(new_vertex(1));
        cycle.push_back(a);
        std::vector<int> inner, outer;
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
            auto [e, t] = new_edge(cycle[k], cycle[k + 1]);
            inner.push_back(e);
            outer.push_back(t);
        }
        he(h).face = face;
        int last = h;
        for (int e : inner) {
            he(e).face = face;
            he(last).next = e;
            he(e).prev = last;
            last = e;
        }
        he(last).next = h;
        he(h).prev = last;

        // New boundary: p -> (a -> n_(m-2)) -> ... -> (n1 -> b) -> q.
        int before = p;
        for (std::size_t k = outer.size(); k-- > 0;) {
            he(before).next = outer[k];
            he(outer[k]).prev = before;
            before = outer[k];
        }
        he(before).next = q;
        he(q).prev = before;

        d_.out_boundary_[static_cast<std::size_t>(a)] = outer.back();
        for (std::size_t k = 1; k + 1 < cycle.size(); ++k)
            d_.out_boundary_[static_cast<std::size_t>(cycle[k])] = outer[k - 1];
        ++d_.faces_[static_cast<std::size_t>(a)];
        ++d_.faces_[static_cast<std::size_t>(b)];
        pending_.push_back(a);
        pending_.push_back(b);
        close_saturated();
    }

    // v has all ell faces but still sits on the boundary: its two boundary
    // edges u -> v -> x are the same edge of the tiling, so identify them and
    // merge u with x.
    void zip(int v) {
        const int h2 = d_.out_boundary_[static_cast<std::size_t>(v)];
        const int h1 = he(h2).prev;
        const int u = he(h1).origin;
        const int x = target(h2);
        const int p = he(h1).prev;
        const int q = he(h2).next;
        const bool closing = p == h2;

        std::vector<int> x_out;
        if (u != x) {
            // Rotation around x: e -> twin(prev(e)), starting from the boundary edge q.
            int e = q;
            do {
                x_out.push_back(e);
                e = he(he(e).prev).twin;
            } while (e != q);
        }

        const int t1 = he(h1).twin;
        const int t2 = he(h2).twin;
        he(t1).twin = t2;
        he(t2).twin = t1;
        he(h1) = HalfEdge{};
        he(h2) = HalfEdge{};
        d_.out_boundary_[static_cast<std::size_t>(v)] = -1;

        if (!closing) {
            if (q == p) throw Error(ErrorCode::InvalidArgument, "boundary collapsed to a loop");
            he(p).next = q;
            he(q).prev = p;
        }

        int keep = u;
        if (u != x) {
            keep = std::min(u, x);
            const int drop = std::max(u, x);
            for (int e : x_out)
                if (he(e).origin == x) he(e).origin = keep;
            if (keep == x) {
                // u's outgoing half-edges move to x.
                for (auto& h : d_.half_edges_)
                    if (h.origin == u) h.origin = keep;
            }
            d_.faces_[static_cast<std::size_t>(keep)] += d_.faces_[static_cast<std::size_t>(drop)];
            d_.faces_[static_cast<std::size_t>(drop)] = 0;
            d_.alive_[static_cast<std::size_t>(drop)] = false;
            d_.out_boundary_[static_cast<std::size_t>(drop)] = -1;
            merged_into_[static_cast<std::size_t>(drop)] = keep;
            --live_vertices_;
        }
        d_.out_boundary_[static_cast<std::size_t>(keep)] = closing ? -1 : q;
        if (closing) d_.closed_ = true;
        if (d_.faces_[static_cast<std::size_t>(keep)] > d_.params_.ell)
            throw Error(ErrorCode::InvalidArgument, "vertex received more than ell faces");
        pending_.push_back(keep);
    }

    void close_saturated() {
        while (!pending_.empty()) {
            int v = find(pending_.back());
            pending_.pop_back();
            if (!d_.alive_[static_cast<std::size_t>(v)] || d_.out_boundary_[static_cast<std::size_t>(v)] < 0) continue;
            if (d_.faces_[static_cast<std::size_t>(v)] == d_.params_.ell) zip(v);
        }
    }

    void complete(int v) {
        for (;;) {
            v = find(v);
            if (!d_.alive_[static_cast<std::size_t>(v)] || d_.out_boundary_[static_cast<std::size_t>(v)] < 0) return;
            attach(d_.out_boundary_[static_cast<std::size_t>(v)]);
        }
    }

    void finish() {
        const std::vector<int> dist = d_.distances();
        int min_boundary = -1;
        int max_dist = 0;
        for (std::size_t v = 0; v < d_.alive_.size(); ++v) {
            if (!d_.alive_[v]) continue;
            max_dist = std::max(max_dist, dist[v]);
            if (d_.out_boundary_[v] >= 0 && (min_boundary < 0 || dist[v] < min_boundary)) min_boundary = dist[v];
        }
        d_.completed_radius_ = min_boundary < 0 ? max_dist : min_boundary;
    }

    TilingDisk d_;
    DiskOptions options_;
    std::vector<int> merged_into_;
    std::vector<int> pending_;
    std::size_t live_vertices_ = 0;
};

TilingDisk build_disk(const TilingParams& params, int radius, const DiskOptions& options) {
    if (radius < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
    return DiskBuilder(TilingParams::make(params.ell, params.m), options).build(radius);
}

// ---------------------------------------------------------------------------

SphereSizes sphere_sizes(const TilingDisk& disk, int radius) {
    if (radius < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
    if (radius > disk.completed_radius() && !disk.is_closed())
        throw Error(ErrorCode::IncompleteDisk, "distances are final only up to " +
                                                   std::to_string(disk.completed_radius()));
    const std::vector<int> dist = disk.distances();
    SphereSizes out;
    out.sizes.assign(static_cast<std::size_t>(radius) + 1, 0);
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (disk.vertex_alive(static_cast<int>(v)) && dist[v] >= 0 && dist[v] <= radius)
            ++out.sizes[static_cast<std::size_t>(dist[v])];
    while (disk.is_closed() && out.sizes.size() > 1 && out.sizes.back() == 0) out.sizes.pop_back();
    return out;
}

SphereSizes sphere_sizes(const TilingDisk& disk) {
    return sphere_sizes(disk, disk.requested_radius());
}

DiskValidation validate_disk(const TilingDisk& disk) {
    DiskValidation r;
    const auto hs = disk.half_edges();
    const int ell = disk.params().ell;
    const int m = disk.params().m;
    auto fail = [&](bool& flag, const std::string& msg) {
        if (flag) r.failures.push_back(msg);
        flag = false;
    };
    auto valid_index = [&](int i) { return i >= 0 && static_cast<std::size_t>(i) < hs.size() && hs[static_cast<std::size_t>(i)].origin >= 0; };

    for (std::size_t i = 0; i < hs.size(); ++i) {
        const auto& h = hs[i];
        if (h.origin < 0) continue;
        if (!valid_index(h.twin) || h.twin == static_cast<int>(i) ||
            hs[static_cast<std::size_t>(h.twin)].twin != static_cast<int>(i)) {
            fail(r.twin_involution, "twin is not an involution at half-edge " + std::to_string(i));
            continue;
        }
        if (!valid_index(h.next) || !valid_index(h.prev) || hs[static_cast<std::size_t>(h.next)].prev != static_cast<int>(i) ||
            hs[static_cast<std::size_t>(h.prev)].next != static_cast<int>(i)) {
            fail(r.next_prev_inverse, "next/prev are not inverse at half-edge " + std::to_string(i));
            continue;
        }
        if (hs[static_cast<std::size_t>(h.next)].origin != hs[static_cast<std::size_t>(h.twin)].origin)
            fail(r.next_prev_inverse, "next does not start where half-edge " + std::to_string(i) + " ends");
    }

    if (r.next_prev_inverse) {
        for (std::size_t f = 0; f < disk.face_starts().size(); ++f) {
            const int start = disk.face_starts()[f];
            int e = start;
            int len = 0;
            do {
                if (hs[static_cast<std::size_t>(e)].face != static_cast<int>(f)) {
                    len = -1;
                    break;
                }
                e = hs[static_cast<std::size_t>(e)].next;
                ++len;
            } while (e != start && len <= m);
            if (len != m) fail(r.face_lengths, "face " + std::to_string(f) + " is not an m-gon");
        }
    }

    std::vector<std::unordered_set<int>> nbrs(disk.vertex_slots());
    std::vector<int> degree(disk.vertex_slots(), 0);
    for (const auto& h : hs) {
        if (h.origin < 0 || !valid_index(h.twin)) continue;
        const int t = hs[static_cast<std::size_t>(h.twin)].origin;
        ++degree[static_cast<std::size_t>(h.origin)];
        if (t == h.origin) fail(r.simple, "loop at vertex " + std::to_string(t));
        else if (!nbrs[static_cast<std::size_t>(h.origin)].insert(t).second)
            fail(r.simple, "multiple edges between " + std::to_string(h.origin) + " and " + std::to_string(t));
    }
    for (std::size_t v = 0; v < disk.vertex_slots(); ++v) {
        if (!disk.vertex_alive(static_cast<int>(v))) continue;
        const int vv = static_cast<int>(v);
        if (disk.is_interior(vv) && (degree[v] != ell || disk.faces_at(vv) != ell))
            fail(r.interior_degrees, "interior vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
        if (!disk.is_interior(vv) && degree[v] > ell)
            fail(r.interior_degrees, "boundary vertex " + std::to_string(v) + " exceeds degree ell");
    }

    const std::vector<int> dist = disk.distances();
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (disk.vertex_alive(static_cast<int>(v)) && dist[v] < 0)
            fail(r.connected, "vertex " + std::to_string(v) + " is unreachable");
    return r;
}

void write_edge_list(const TilingDisk& disk, std::ostream& out) {
    for (const auto& [u, v] : disk.edge_list()) out << u << ' ' << v << '\n';
}

} // namespace salem
