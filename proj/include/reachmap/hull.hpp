#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "reachmap/capability_map.hpp"

namespace reachmap {

// Triangle mesh in the torso frame. Hull meshes are watertight (every edge
// shared by exactly two triangles) with outward-oriented normals.
struct Mesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> triangles;  // CCW seen from outside
    bool convex = false;
};

// Convex hull of a set of integer lattice points, computed in exact integer
// arithmetic (gift wrapping), then mapped to world coordinates as
// origin + edge * p. Vertices are exactly the extreme points; coplanar facet
// points are dropped. Throws DegenerateHullError (carrying the affine rank)
// when the points span fewer than 3 dimensions.
Mesh hull_of_lattice_points(std::vector<std::array<std::int64_t, 3>> points,
                            const Eigen::Vector3d& origin, double edge);

// Convex hull over the 8 corners of every voxel whose score lies in the
// closed band [band_lo, band_hi]. Throws InvalidArgumentError on a malformed
// band and EmptySelectionError when no voxel qualifies.
Mesh extract_hull(const CapabilityMap& map, double band_lo, double band_hi);

// Wavefront OBJ with a comment header documenting the torso frame.
void write_obj(const Mesh& mesh, const std::string& path);

}  // namespace reachmap
