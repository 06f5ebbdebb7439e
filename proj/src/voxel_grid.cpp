#include "reachmap/voxel_grid.hpp"

#include <cmath>

namespace reachmap {

VoxelGrid make_centered_grid(const Eigen::Vector3d& center, double half_extent,
                             double voxel_edge) {
    if (!(half_extent > 0.0) || !std::isfinite(half_extent))
        throw InvalidArgumentError("grid half_extent must be positive and finite");
    if (!(voxel_edge > 0.0) || !std::isfinite(voxel_edge))
        throw InvalidArgumentError("voxel_edge must be positive and finite");
    const int n = static_cast<int>(std::ceil(2.0 * half_extent / voxel_edge));
    VoxelGrid grid;
    grid.voxel_edge = voxel_edge;
    grid.dims = {n, n, n};
    grid.origin = center - Eigen::Vector3d::Constant(n * voxel_edge / 2.0);
    grid.validate();
    return grid;
}

}  // namespace reachmap
