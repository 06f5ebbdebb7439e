#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>

#include "reachmap/errors.hpp"

namespace reachmap {

inline constexpr int kNumJoints = 7;
inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// One right-arm configuration, radians. Joint order:
//   q1 shoulder abduction-adduction   (+ = lateral raise, toward +X)
//   q2 shoulder flexion-extension     (+ = forward raise, toward +Y)
//   q3 shoulder internal-external rot (+ = internal, forearm swings medial)
//   q4 elbow flexion-extension        (+ = flexion)
//   q5 forearm pronation-supination
//   q6 wrist ulnar-radial deviation   (+ = ulnar)
//   q7 wrist flexion-extension        (+ = flexion, toward palm)
// Torso frame: origin at the right glenohumeral joint, X to the user's
// right, Y anterior, Z superior. Zero pose: arm hanging straight down,
// palm medial.
struct JointAngles {
    std::array<double, kNumJoints> q{};

    JointAngles() = default;
    explicit JointAngles(const std::array<double, kNumJoints>& values) : q(values) {}

    double& operator[](int i) { return q[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return q[static_cast<std::size_t>(i)]; }

    bool all_finite() const {
        for (double v : q) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    // Invariants: finite, each value in [-pi, pi]. A 1e-9 slack absorbs
    // rounding from values constructed as step multiples (k * step can
    // overshoot an interval end by an ulp).
    void validate() const {
        constexpr double kSlack = 1e-9;
        for (int i = 0; i < kNumJoints; ++i) {
            if (!std::isfinite(q[static_cast<std::size_t>(i)]))
                throw InvalidArgumentError("joint q" + std::to_string(i + 1) + " is not finite");
            if (q[static_cast<std::size_t>(i)] < -kPi - kSlack ||
                q[static_cast<std::size_t>(i)] > kPi + kSlack)
                throw InvalidArgumentError("joint q" + std::to_string(i + 1) +
                                           " outside [-pi, pi]");
        }
    }

    bool operator==(const JointAngles& other) const = default;
};

// Link lengths of the modeled chain, meters.
struct ArmGeometry {
    double upper_arm_length = 0.0;  // shoulder -> elbow [m]
    double forearm_length = 0.0;    // elbow -> wrist [m]
    double hand_length = 0.0;       // wrist -> index fingertip [m]

    double total_reach() const { return upper_arm_length + forearm_length + hand_length; }

    void validate() const {
        if (!(upper_arm_length > 0.0) || !std::isfinite(upper_arm_length))
            throw InvalidArgumentError("upper_arm_length must be positive");
        if (!(forearm_length > 0.0) || !std::isfinite(forearm_length))
            throw InvalidArgumentError("forearm_length must be positive");
        if (!(hand_length > 0.0) || !std::isfinite(hand_length))
            throw InvalidArgumentError("hand_length must be positive");
    }

    bool operator==(const ArmGeometry& other) const = default;
};

// Per-joint closed angle intervals [lo_i, hi_i], radians.
struct RomLimits {
    std::array<double, kNumJoints> lo{};
    std::array<double, kNumJoints> hi{};

    void validate() const {
        for (int i = 0; i < kNumJoints; ++i) {
            const auto j = static_cast<std::size_t>(i);
            if (!std::isfinite(lo[j]) || !std::isfinite(hi[j]))
                throw InvalidArgumentError("rom interval q" + std::to_string(i + 1) +
                                           " is not finite");
            if (lo[j] > hi[j])
                throw InvalidArgumentError("rom interval q" + std::to_string(i + 1) +
                                           " has lo > hi");
            if (lo[j] < -kPi || hi[j] > kPi)
                throw InvalidArgumentError("rom interval q" + std::to_string(i + 1) +
                                           " outside [-pi, pi]");
        }
    }

    // True iff every interval of `inner` lies inside the matching interval here.
    bool contains_intervals(const RomLimits& inner) const {
        for (std::size_t i = 0; i < kNumJoints; ++i) {
            if (inner.lo[i] < lo[i] || inner.hi[i] > hi[i]) return false;
        }
        return true;
    }

    JointAngles midpoint() const {
        JointAngles q;
        for (std::size_t i = 0; i < kNumJoints; ++i) q.q[i] = 0.5 * (lo[i] + hi[i]);
        return q;
    }

    bool operator==(const RomLimits& other) const = default;
};

// TCP pose: fingertip position plus the hand long-axis direction.
// Roll about the pointing axis is intentionally not represented.
struct Pose {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();       // [m], torso frame
    Eigen::Vector3d pointing_axis = -Eigen::Vector3d::UnitZ();  // unit vector

    void validate() const {
        if (!position.allFinite() || !pointing_axis.allFinite())
            throw InvalidArgumentError("pose has non-finite fields");
        if (std::abs(pointing_axis.norm() - 1.0) > 1e-9)
            throw InvalidArgumentError("pointing_axis is not unit length");
    }
};

// Angle between two directions, radians, in [0, pi].
inline double angle_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace reachmap
