#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <optional>

#include "reachmap/errors.hpp"

namespace reachmap {

// Axis-aligned cubic voxelization of the workspace. Voxel (i, j, k) covers
// the half-open box origin + edge*[i, i+1) x [j, j+1) x [k, k+1); linear
// index = i + nx*j + nx*ny*k. Indices are u32 in the serialized map format,
// so the total cell count is capped accordingly.
struct VoxelGrid {
    Eigen::Vector3d origin = Eigen::Vector3d::Zero();  // min corner [m]
    double voxel_edge = 0.05;                          // [m]
    std::array<int, 3> dims = {1, 1, 1};               // nx, ny, nz

    std::int64_t voxel_count() const {
        return static_cast<std::int64_t>(dims[0]) * dims[1] * dims[2];
    }

    void validate() const {
        if (!(voxel_edge > 0.0) || !std::isfinite(voxel_edge))
            throw InvalidArgumentError("voxel_edge must be positive and finite");
        if (!origin.allFinite()) throw InvalidArgumentError("grid origin must be finite");
        for (int d : dims)
            if (d < 1) throw InvalidArgumentError("grid dims must all be >= 1");
        // Far below the u32 index range on purpose: the dense query table is
        // O(count) memory, and a desk-scale workspace never needs more.
        if (voxel_count() > (1LL << 24))
            throw InvalidArgumentError("grid has " + std::to_string(voxel_count()) +
                                       " voxels (max 2^24); increase voxel_edge");
    }

    // Linear index of the voxel containing p, or nullopt outside the grid.
    // Half-open per axis: a point on a shared face belongs to the higher cell.
    std::optional<std::uint32_t> index_of(const Eigen::Vector3d& p) const {
        std::array<int, 3> c;
        for (int a = 0; a < 3; ++a) {
            const double f = std::floor((p[a] - origin[a]) / voxel_edge);
            if (f < 0.0 || f >= static_cast<double>(dims[a])) return std::nullopt;
            c[a] = static_cast<int>(f);
        }
        return static_cast<std::uint32_t>(c[0] +
                                          static_cast<std::int64_t>(dims[0]) * (c[1] + static_cast<std::int64_t>(dims[1]) * c[2]));
    }

    std::array<int, 3> coords_of(std::uint32_t index) const {
        const int i = static_cast<int>(index % dims[0]);
        const int j = static_cast<int>((index / dims[0]) % dims[1]);
        const int k = static_cast<int>(index / (static_cast<std::int64_t>(dims[0]) * dims[1]));
        return {i, j, k};
    }

    Eigen::Vector3d min_corner_of(std::uint32_t index) const {
        const auto c = coords_of(index);
        return origin + voxel_edge * Eigen::Vector3d(c[0], c[1], c[2]);
    }

    Eigen::Vector3d center_of(std::uint32_t index) const {
        return min_corner_of(index) + Eigen::Vector3d::Constant(voxel_edge / 2.0);
    }

    bool operator==(const VoxelGrid& other) const {
        return origin == other.origin && voxel_edge == other.voxel_edge && dims == other.dims;
    }
};

// Cube grid centered on `center` extending at least `half_extent` per axis
// (cell count rounded up so the cube is fully covered).
VoxelGrid make_centered_grid(const Eigen::Vector3d& center, double half_extent, double voxel_edge);

}  // namespace reachmap
