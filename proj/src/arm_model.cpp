#include "reachmap/arm_model.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cmath>

namespace reachmap {

namespace {

// Running frame of the chain: orientation R and origin p of the current link
// frame expressed in the torso frame.
struct Frame {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    Eigen::Vector3d p = Eigen::Vector3d::Zero();

    void rotate(const Eigen::Vector3d& axis, double angle) {
        R = R * Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    }
    void translate(const Eigen::Vector3d& v) { p += R * v; }
};

// Walks the 7-joint chain. In the zero pose every link frame coincides with
// the torso frame and the arm extends along -Z (hanging straight down); the
// hand long axis is local -Z throughout.
//
// Axes (local, right arm):
//   q1 about -Y: abduction raises the arm toward +X (lateral).
//   q2 about +X: flexion raises the arm toward +Y (anterior).
//   q3 about +Z: internal rotation swings the flexed forearm medially.
//   q4 about +X: elbow flexion folds the forearm anteriorly.
//   q5 about +Z: pronation-supination spins the forearm long axis.
//   q6 about -X: ulnar deviation tilts the hand medially (little-finger side).
//   q7 about +Y: wrist flexion folds the palm medially from the palm-medial
//                zero pose.
ArmPoints walk_chain(const JointAngles& q, const ArmGeometry& geom) {
    Frame f;
    ArmPoints pts;
    pts.shoulder = f.p;

    f.rotate(-Eigen::Vector3d::UnitY(), q[0]);
    f.rotate(Eigen::Vector3d::UnitX(), q[1]);
    f.rotate(Eigen::Vector3d::UnitZ(), q[2]);
    f.translate(Eigen::Vector3d(0, 0, -geom.upper_arm_length));
    pts.elbow = f.p;

    f.rotate(Eigen::Vector3d::UnitX(), q[3]);
    f.rotate(Eigen::Vector3d::UnitZ(), q[4]);
    f.translate(Eigen::Vector3d(0, 0, -geom.forearm_length));
    pts.wrist = f.p;

    f.rotate(-Eigen::Vector3d::UnitX(), q[5]);
    f.rotate(Eigen::Vector3d::UnitY(), q[6]);
    f.translate(Eigen::Vector3d(0, 0, -geom.hand_length));
    pts.tip = f.p;

    // Stash the final orientation for forward_kinematics via the tip frame.
    pts.tip_axis = f.R * Eigen::Vector3d(0, 0, -1);
    return pts;
}

}  // namespace

Pose forward_kinematics(const JointAngles& q, const ArmGeometry& geom) {
    q.validate();
    geom.validate();
    const ArmPoints pts = walk_chain(q, geom);
    Pose pose;
    pose.position = pts.tip;
    pose.pointing_axis = pts.tip_axis;
    return pose;
}

ArmPoints joint_positions(const JointAngles& q, const ArmGeometry& geom) {
    q.validate();
    geom.validate();
    return walk_chain(q, geom);
}

namespace {

JointAngles clamp_to_rom(const JointAngles& q, const RomLimits& rom) {
    JointAngles out = q;
    for (int i = 0; i < kNumJoints; ++i)
        out[i] = std::clamp(out[i], rom.lo[i], rom.hi[i]);
    return out;
}

// 6-dim residual [position error; weighted pointing-axis error].
Eigen::Matrix<double, 6, 1> ik_residual(const JointAngles& q, const Pose& target,
                                        const ArmGeometry& geom, double w_dir) {
    const Pose pose = forward_kinematics(q, geom);
    Eigen::Matrix<double, 6, 1> r;
    r.head<3>() = pose.position - target.position;
    r.tail<3>() = w_dir * (pose.pointing_axis - target.pointing_axis);
    return r;
}

bool ik_accepts(const JointAngles& q, const Pose& target, const RomLimits& rom,
                const ArmGeometry& geom, const CollisionModel* cm, double pos_tol,
                double ang_tol) {
    if (!within_limits(q, rom)) return false;
    const Pose pose = forward_kinematics(q, geom);
    if ((pose.position - target.position).norm() > pos_tol) return false;
    if (angle_between(pose.pointing_axis, target.pointing_axis) > ang_tol) return false;
    if (cm != nullptr && self_collides(q, geom, *cm)) return false;
    return true;
}

}  // namespace

std::optional<JointAngles> solve_ik(const Pose& target, const JointAngles& seed,
                                    const RomLimits& rom, const ArmGeometry& geom,
                                    const CollisionModel* cm, double pos_tol, double ang_tol,
                                    const IkParams& params) {
    target.validate();
    rom.validate();
    geom.validate();
    if (!(pos_tol > 0.0)) throw InvalidArgumentError("ik pos_tol must be positive");
    if (!(ang_tol > 0.0)) throw InvalidArgumentError("ik ang_tol must be positive");
    if (!seed.all_finite()) throw InvalidArgumentError("ik seed is not finite");

    // A target beyond the stretched arm can never satisfy the position bound.
    if (target.position.norm() > geom.total_reach() + pos_tol) return std::nullopt;

    JointAngles q = clamp_to_rom(seed, rom);
    if (ik_accepts(q, target, rom, geom, cm, pos_tol, ang_tol)) return q;

    const double lambda_sq = params.damping * params.damping;
    for (int iter = 0; iter < params.max_iterations; ++iter) {
        // Numerical Jacobian, central differences clamped to the +-pi domain
        // (one-sided at the boundary, scaled by the actual sample spread).
        Eigen::Matrix<double, 6, 7> J;
        for (int j = 0; j < kNumJoints; ++j) {
            JointAngles qp = q;
            JointAngles qm = q;
            qp[j] = std::min(q[j] + params.fd_step, kPi);
            qm[j] = std::max(q[j] - params.fd_step, -kPi);
            const double spread = qp[j] - qm[j];
            if (spread < 1e-12) {
                J.col(j).setZero();
                continue;
            }
            J.col(j) = (ik_residual(qp, target, geom, params.direction_weight) -
                        ik_residual(qm, target, geom, params.direction_weight)) /
                       spread;
        }

        const Eigen::Matrix<double, 6, 1> r = ik_residual(q, target, geom, params.direction_weight);
        const Eigen::Matrix<double, 6, 6> A =
            J * J.transpose() + lambda_sq * Eigen::Matrix<double, 6, 6>::Identity();
        const Eigen::Matrix<double, 7, 1> dq = -J.transpose() * A.ldlt().solve(r);

        double step_norm_sq = 0.0;
        for (int j = 0; j < kNumJoints; ++j) {
            const double next = std::clamp(q[j] + dq[j], rom.lo[j], rom.hi[j]);
            step_norm_sq += (next - q[j]) * (next - q[j]);
            q[j] = next;
        }

        if (ik_accepts(q, target, rom, geom, cm, pos_tol, ang_tol)) return q;
        if (step_norm_sq < 1e-24) break;  // clamped to a standstill
    }
    return std::nullopt;
}

std::optional<JointAngles> solve_ik_multistart(const Pose& target,
                                               const std::vector<JointAngles>& seeds,
                                               int random_restarts, Rng& rng,
                                               const RomLimits& rom, const ArmGeometry& geom,
                                               const CollisionModel* cm, double pos_tol,
                                               double ang_tol, const IkParams& params) {
    for (const JointAngles& seed : seeds) {
        if (auto q = solve_ik(target, seed, rom, geom, cm, pos_tol, ang_tol, params)) return q;
    }
    for (int i = 0; i < random_restarts; ++i) {
        JointAngles seed;
        for (int j = 0; j < kNumJoints; ++j) seed[j] = rng.uniform(rom.lo[j], rom.hi[j]);
        if (auto q = solve_ik(target, seed, rom, geom, cm, pos_tol, ang_tol, params)) return q;
    }
    return std::nullopt;
}

}  // namespace reachmap
