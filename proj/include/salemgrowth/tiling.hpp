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

#ifndef SALEMGROWTH_TILING_HPP
#define SALEMGROWTH_TILING_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "salemgrowth/growth.hpp"

namespace salem {

struct DiskOptions {
    /// DiskTooLarge is raised once the map holds more live vertices than this.
    std::size_t max_vertices = 5'000'000;
    /// Traverse the seed face the other way round.
    bool reverse_seed = false;
};

/// Finite piece of the {m, ell} tessellation stored as a half-edge map.
///
/// Inner faces are traversed by `next`; the unbounded outside region is
/// face -1 and its half-edges form the boundary cycle. Vertices merged away
/// while closing up the map stay in the arrays as dead slots.
class TilingDisk {
public:
    struct HalfEdge {
        int origin = -1;  // -1 marks a removed half-edge
        int twin = -1;
        int next = -1;
        int prev = -1;
        int face = -1;    // -1 = outside
    };

    const TilingParams& params() const noexcept { return params_; }
    int base_vertex() const noexcept { return 0; }
    int requested_radius() const noexcept { return requested_radius_; }
    /// Sphere sizes are exact for every distance up to this value.
    int completed_radius() const noexcept { return completed_radius_; }
    /// True when the map closed up (spherical parameters).
    bool is_closed() const noexcept { return closed_; }

    std::size_t vertex_count() const noexcept;
    std::size_t edge_count() const noexcept;
    std::size_t face_count() const noexcept { return face_start_.size(); }

    std::span<const HalfEdge> half_edges() const noexcept { return half_edges_; }
    /// Direct link access, for fault-injection in tests.
    std::vector<HalfEdge>& mutable_half_edges() noexcept { return half_edges_; }

    bool vertex_alive(int v) const { return alive_[static_cast<std::size_t>(v)]; }
    std::size_t vertex_slots() const noexcept { return alive_.size(); }
    /// Number of faces incident to v.
    int faces_at(int v) const { return faces_[static_cast<std::size_t>(v)]; }
    bool is_interior(int v) const { return out_boundary_[static_cast<std::size_t>(v)] < 0; }
    std::span<const int> face_starts() const noexcept { return face_start_; }

    /// Graph distance from the base vertex; -1 for dead or unreachable slots.
    std::vector<int> distances() const;

    /// Undirected edges with dense vertex ids (base vertex = 0), u < v.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list() const;

private:
    friend class DiskBuilder;

    TilingParams params_;
    int requested_radius_ = 0;
    int completed_radius_ = 0;
    bool closed_ = false;
    std::vector<HalfEdge> half_edges_;
    std::vector<int> faces_;
    std::vector<int> out_boundary_;  // outgoing boundary half-edge, -1 for interior
    std::vector<bool> alive_;
    std::vector<int> face_start_;
};

/// Grows the map face by face from one seed m-gon until every vertex within
/// `radius` of the base vertex is interior (ell incident faces, all closed).
TilingDisk build_disk(const TilingParams& params, int radius, const DiskOptions& options = {});

struct SphereSizes {
    std::vector<std::uint64_t> sizes;
};

/// Layers 0..requested radius (fewer for a closed map whose layers run out).
SphereSizes sphere_sizes(const TilingDisk& disk);
/// Layers 0..radius; IncompleteDisk when radius exceeds completed_radius().
SphereSizes sphere_sizes(const TilingDisk& disk, int radius);

struct DiskValidation {
    bool twin_involution = true;
    bool next_prev_inverse = true;
    bool face_lengths = true;
    bool interior_degrees = true;
    bool simple = true;
    bool connected = true;
    std::vector<std::string> failures;

    bool ok() const noexcept {
        return twin_involution && next_prev_inverse && face_lengths && interior_degrees && simple && connected;
    }
};

DiskValidation validate_disk(const TilingDisk& disk);

/// "u v" per line, dense ids from 0, base vertex 0.
void write_edge_list(const TilingDisk& disk, std::ostream& out);

} // namespace salem

#endif
