#pragma once

#include <Eigen/Core>
#include <vector>

#include "reachmap/types.hpp"

namespace reachmap {

struct Capsule {
    Eigen::Vector3d a = Eigen::Vector3d::Zero();  // segment start [m]
    Eigen::Vector3d b = Eigen::Vector3d::Zero();  // segment end [m]
    double radius = 0.0;                          // [m]
};

struct Sphere {
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    double radius = 0.0;
};

// Closest distance between two segments [a0,a1], [b0,b1].
double segment_segment_distance(const Eigen::Vector3d& a0, const Eigen::Vector3d& a1,
                                const Eigen::Vector3d& b0, const Eigen::Vector3d& b1);

double point_segment_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b);

inline bool capsules_collide(const Capsule& x, const Capsule& y) {
    return segment_segment_distance(x.a, x.b, y.a, y.b) < x.radius + y.radius;
}

inline bool capsule_sphere_collide(const Capsule& c, const Sphere& s) {
    return point_segment_distance(s.center, c.a, c.b) < c.radius + s.radius;
}

enum class CollisionPair {
    kForearmHandVsTorso,
    kForearmHandVsHead,
    kUpperArmVsTorso,
};

// Coarse volumetric body model for self-collision filtering. The forearm+hand
// volume is the chain of two capsules (elbow->wrist, wrist->fingertip) sharing
// one radius, so a flexed wrist is represented faithfully.
struct CollisionModel {
    Capsule torso;                   // vertical capsule, medially offset from the shoulder
    Sphere head;
    double upper_arm_radius = 0.0;   // [m]
    double forearm_hand_radius = 0.0;  // [m]
    // Fraction of the upper-arm capsule trimmed at the shoulder end when
    // checking against the torso (adjacent-link allowance).
    double shoulder_trim_fraction = 0.2;
    std::vector<CollisionPair> checked_pairs;

    static CollisionModel default_model();

    void validate() const {
        if (!(torso.radius > 0.0)) throw InvalidArgumentError("torso radius must be positive");
        if (!(head.radius > 0.0)) throw InvalidArgumentError("head radius must be positive");
        if (!(upper_arm_radius > 0.0))
            throw InvalidArgumentError("upper_arm_radius must be positive");
        if (!(forearm_hand_radius > 0.0))
            throw InvalidArgumentError("forearm_hand_radius must be positive");
        if (shoulder_trim_fraction < 0.0 || shoulder_trim_fraction >= 1.0)
            throw InvalidArgumentError("shoulder_trim_fraction must be in [0, 1)");
    }

    bool operator==(const CollisionModel& other) const {
        return torso.a == other.torso.a && torso.b == other.torso.b &&
               torso.radius == other.torso.radius && head.center == other.head.center &&
               head.radius == other.head.radius && upper_arm_radius == other.upper_arm_radius &&
               forearm_hand_radius == other.forearm_hand_radius &&
               shoulder_trim_fraction == other.shoulder_trim_fraction &&
               checked_pairs == other.checked_pairs;
    }
};

// True iff any checked capsule/sphere pair of the posed arm interpenetrates.
bool self_collides(const JointAngles& q, const ArmGeometry& geom, const CollisionModel& cm);

// Same test on already-computed joint positions (spares the FK when the
// caller has them anyway).
struct ArmPoints;
bool self_collides(const ArmPoints& pts, const CollisionModel& cm);

}  // namespace reachmap
