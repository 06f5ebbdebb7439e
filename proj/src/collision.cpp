#include "reachmap/collision.hpp"

#include <algorithm>
#include <cmath>

#include "reachmap/arm_model.hpp"

namespace reachmap {

double point_segment_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b) {
    const Eigen::Vector3d ab = b - a;
    const double len_sq = ab.squaredNorm();
    if (len_sq < 1e-24) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len_sq, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

// Closest distance between segments [a0,a1] and [b0,b1]; clamped
// closest-point-of-approach handling all degenerate (point/parallel) cases.
double segment_segment_distance(const Eigen::Vector3d& a0, const Eigen::Vector3d& a1,
                                const Eigen::Vector3d& b0, const Eigen::Vector3d& b1) {
    const Eigen::Vector3d d1 = a1 - a0;
    const Eigen::Vector3d d2 = b1 - b0;
    const Eigen::Vector3d r = a0 - b0;
    const double a = d1.squaredNorm();
    const double e = d2.squaredNorm();
    const double f = d2.dot(r);
    constexpr double kEps = 1e-24;

    double s = 0.0;
    double t = 0.0;
    if (a <= kEps && e <= kEps) {
        // both segments are points
    } else if (a <= kEps) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = d1.dot(r);
        if (e <= kEps) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = d1.dot(d2);
            const double denom = a * e - b * b;
            s = denom > kEps ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return ((a0 + s * d1) - (b0 + t * d2)).norm();
}

CollisionModel CollisionModel::default_model() {
    CollisionModel cm;
    cm.torso.a = Eigen::Vector3d(-0.18, 0.0, -0.55);
    cm.torso.b = Eigen::Vector3d(-0.18, 0.0, -0.05);
    cm.torso.radius = 0.13;
    cm.head.center = Eigen::Vector3d(-0.18, 0.0, 0.18);
    cm.head.radius = 0.10;
    cm.upper_arm_radius = 0.045;
    cm.forearm_hand_radius = 0.04;
    cm.shoulder_trim_fraction = 0.2;
    cm.checked_pairs = {CollisionPair::kForearmHandVsTorso, CollisionPair::kForearmHandVsHead,
                        CollisionPair::kUpperArmVsTorso};
    return cm;
}

namespace {

// The forearm+hand volume is two chained capsules sharing one radius.
bool forearm_hand_hits_capsule(const ArmPoints& pts, double radius, const Capsule& other) {
    return capsules_collide(Capsule{pts.elbow, pts.wrist, radius}, other) ||
           capsules_collide(Capsule{pts.wrist, pts.tip, radius}, other);
}

bool forearm_hand_hits_sphere(const ArmPoints& pts, double radius, const Sphere& other) {
    return capsule_sphere_collide(Capsule{pts.elbow, pts.wrist, radius}, other) ||
           capsule_sphere_collide(Capsule{pts.wrist, pts.tip, radius}, other);
}

}  // namespace

bool self_collides(const ArmPoints& pts, const CollisionModel& cm) {
    for (const CollisionPair pair : cm.checked_pairs) {
        switch (pair) {
            case CollisionPair::kForearmHandVsTorso:
                if (forearm_hand_hits_capsule(pts, cm.forearm_hand_radius, cm.torso)) return true;
                break;
            case CollisionPair::kForearmHandVsHead:
                if (forearm_hand_hits_sphere(pts, cm.forearm_hand_radius, cm.head)) return true;
                break;
            case CollisionPair::kUpperArmVsTorso: {
                // Adjacent-link allowance: ignore the capsule portion nearest
                // the shoulder joint.
                const Eigen::Vector3d trimmed =
                    pts.shoulder + cm.shoulder_trim_fraction * (pts.elbow - pts.shoulder);
                if (capsules_collide(Capsule{trimmed, pts.elbow, cm.upper_arm_radius}, cm.torso))
                    return true;
                break;
            }
        }
    }
    return false;
}

bool self_collides(const JointAngles& q, const ArmGeometry& geom, const CollisionModel& cm) {
    return self_collides(joint_positions(q, geom), cm);
}

}  // namespace reachmap
