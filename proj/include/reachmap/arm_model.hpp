#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "reachmap/collision.hpp"
#include "reachmap/rng.hpp"
#include "reachmap/types.hpp"

namespace reachmap {

// Joint centers of the posed arm in the torso frame.
struct ArmPoints {
    Eigen::Vector3d shoulder = Eigen::Vector3d::Zero();
    Eigen::Vector3d elbow = Eigen::Vector3d::Zero();
    Eigen::Vector3d wrist = Eigen::Vector3d::Zero();
    Eigen::Vector3d tip = Eigen::Vector3d::Zero();
    Eigen::Vector3d tip_axis = -Eigen::Vector3d::UnitZ();  // hand long axis (unit)
};

// Fingertip pose for joint vector q. Throws InvalidArgumentError on
// non-finite/out-of-range input (see JointAngles::validate).
Pose forward_kinematics(const JointAngles& q, const ArmGeometry& geom);

// Shoulder/elbow/wrist/fingertip positions for q (used by the collision model
// and for debugging); same validation as forward_kinematics.
ArmPoints joint_positions(const JointAngles& q, const ArmGeometry& geom);

inline bool within_limits(const JointAngles& q, const RomLimits& rom) {
    for (int i = 0; i < kNumJoints; ++i)
        if (q[i] < rom.lo[i] || q[i] > rom.hi[i]) return false;
    return true;
}

struct IkParams {
    double damping = 0.1;            // damped-least-squares lambda
    int max_iterations = 100;
    double fd_step = 1e-6;           // central-difference step [rad]
    double direction_weight = 0.1;   // weight of the pointing-axis residual
};

// Damped-least-squares IK on the 6-dim residual [position error; weighted
// pointing-axis error]. Every iterate is clamped to `rom`; a solution must be
// within `pos_tol` meters of `target.position`, within `ang_tol` radians of
// `target.pointing_axis`, inside the limits, and (when `cm` is non-null)
// collision-free. Returns nullopt when no such configuration is found from
// `seed` within the iteration budget.
std::optional<JointAngles> solve_ik(const Pose& target, const JointAngles& seed,
                                    const RomLimits& rom, const ArmGeometry& geom,
                                    const CollisionModel* cm, double pos_tol, double ang_tol,
                                    const IkParams& params = {});

// Multi-start wrapper: tries `seeds` in order, then `random_restarts` seeds
// drawn uniformly inside `rom` from `rng`. First hit wins.
std::optional<JointAngles> solve_ik_multistart(const Pose& target,
                                               const std::vector<JointAngles>& seeds,
                                               int random_restarts, Rng& rng,
                                               const RomLimits& rom, const ArmGeometry& geom,
                                               const CollisionModel* cm, double pos_tol,
                                               double ang_tol, const IkParams& params = {});

}  // namespace reachmap
