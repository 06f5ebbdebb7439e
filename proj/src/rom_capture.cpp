#include "reachmap/rom_capture.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>

#include "reachmap/log.hpp"

namespace reachmap {

namespace {

constexpr double kDegenerateNormSq = 1e-18;

Eigen::Vector3d vector_between(const SkeletonFrame& frame, const char* from, const char* to,
                               int idx) {
    const Eigen::Vector3d v = frame.at(to, idx) - frame.at(from, idx);
    if (v.squaredNorm() < kDegenerateNormSq)
        throw NumericDegeneracyError("joints '" + std::string(from) + "' and '" + to +
                                     "' coincide in frame " + std::to_string(idx));
    return v;
}

// Signed angle from u to v within the plane spanned by unit axes (e1, e2):
// positive when v is rotated from u toward the e1 x e2 sense.
double planar_signed_angle(const Eigen::Vector3d& u3, const Eigen::Vector3d& v3, int axis_a,
                           int axis_b) {
    const Eigen::Vector2d u(u3[axis_a], u3[axis_b]);
    const Eigen::Vector2d v(v3[axis_a], v3[axis_b]);
    if (u.squaredNorm() < kDegenerateNormSq || v.squaredNorm() < kDegenerateNormSq)
        throw NumericDegeneracyError("plane-projected joint vector vanishes");
    return std::atan2(u.x() * v.y() - u.y() * v.x(), u.dot(v));
}

double elbow_flexion(const SkeletonFrame& frame, int idx) {
    const Eigen::Vector3d to_shoulder = vector_between(frame, kJointRightElbow, kJointRightShoulder, idx);
    const Eigen::Vector3d to_wrist = vector_between(frame, kJointRightElbow, kJointRightWrist, idx);
    return kPi - angle_between(to_shoulder, to_wrist);
}

}  // namespace

ArmGeometry estimate_limb_lengths(const SkeletonRecording& rec) {
    const SegmentLabel& seg = rec.segment(Exercise::kNeutral);
    double upper = 0.0;
    double fore = 0.0;
    double hand = 0.0;
    int n = 0;
    for (int i = seg.from; i < seg.to; ++i) {
        const SkeletonFrame& f = rec.frames[static_cast<std::size_t>(i)];
        const Eigen::Vector3d shoulder = f.at(kJointRightShoulder, i);
        const Eigen::Vector3d elbow = f.at(kJointRightElbow, i);
        const Eigen::Vector3d wrist = f.at(kJointRightWrist, i);
        const Eigen::Vector3d tip = f.at(kJointRightHandTip, i);
        upper += (elbow - shoulder).norm();
        fore += (wrist - elbow).norm();
        hand += (tip - wrist).norm();
        ++n;
    }
    if (n == 0) throw InsufficientDataError("neutral segment contains no frames");
    ArmGeometry geom{upper / n, fore / n, hand / n};
    geom.validate();
    return geom;
}

std::optional<double> exercise_angle(const SkeletonFrame& frame, Exercise exercise,
                                     int frame_index) {
    switch (exercise) {
        case Exercise::kNeutral:
            throw InvalidArgumentError("the neutral segment has no exercise angle");
        case Exercise::kShoulderAbductionAdduction: {
            // Frontal (XZ) plane: torso-down to upper-arm, + toward +X.
            const Eigen::Vector3d down = vector_between(frame, kJointNeck, kJointHipCenter, frame_index);
            const Eigen::Vector3d arm =
                vector_between(frame, kJointRightShoulder, kJointRightElbow, frame_index);
            return planar_signed_angle(down, arm, 0, 2);  // (x, z) coords: + = down toward +X
        }
        case Exercise::kShoulderFlexionExtension: {
            // Sagittal (YZ) plane: + toward +Y (anterior).
            const Eigen::Vector3d down = vector_between(frame, kJointNeck, kJointHipCenter, frame_index);
            const Eigen::Vector3d arm =
                vector_between(frame, kJointRightShoulder, kJointRightElbow, frame_index);
            return planar_signed_angle(down, arm, 1, 2);  // (y, z) coords: + = down toward +Y
        }
        case Exercise::kShoulderRotation: {
            if (elbow_flexion(frame, frame_index) < kRotationMinElbowFlexion) {
                LOG_DEBUG("frame %d skipped for shoulder rotation: elbow flexion below threshold",
                          frame_index);
                return std::nullopt;
            }
            // Forearm direction projected off the humeral axis, measured from
            // the anterior (+Y) reference about the elbow->shoulder axis;
            // positive = internal rotation.
            const Eigen::Vector3d humerus =
                vector_between(frame, kJointRightShoulder, kJointRightElbow, frame_index);
            const Eigen::Vector3d forearm =
                vector_between(frame, kJointRightElbow, kJointRightWrist, frame_index);
            const Eigen::Vector3d h = humerus.normalized();
            const Eigen::Vector3d f_perp = forearm - forearm.dot(h) * h;
            Eigen::Vector3d ref = Eigen::Vector3d::UnitY();
            ref -= ref.dot(h) * h;
            if (f_perp.squaredNorm() < kDegenerateNormSq)
                throw NumericDegeneracyError("forearm is parallel to the humerus");
            if (ref.squaredNorm() < kDegenerateNormSq)
                throw NumericDegeneracyError("humerus is parallel to the anterior axis");
            const Eigen::Vector3d axis = -h;  // elbow -> shoulder direction
            return std::atan2(ref.cross(f_perp).dot(axis), ref.dot(f_perp));
        }
        case Exercise::kElbowFlexionExtension:
            return elbow_flexion(frame, frame_index);
    }
    throw InvalidArgumentError("unknown exercise");
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw InvalidArgumentError("percentile of an empty sample");
    if (p < 0.0 || p > 100.0) throw InvalidArgumentError("percentile rank outside [0, 100]");
    std::sort(values.begin(), values.end());
    const double rank = p / 100.0 * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const auto hi = static_cast<std::size_t>(std::ceil(rank));
    const double frac = rank - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

RomLimits extract_rom(const SkeletonRecording& rec, const RomLimits& nominal,
                      RomExtractionStats* stats) {
    nominal.validate();
    constexpr Exercise kPerJoint[4] = {
        Exercise::kShoulderAbductionAdduction,
        Exercise::kShoulderFlexionExtension,
        Exercise::kShoulderRotation,
        Exercise::kElbowFlexionExtension,
    };
    constexpr int kMinValidFrames = 10;

    RomLimits rom = nominal;  // q5..q7 stay nominal (tracker can't resolve the wrist)
    for (int joint = 0; joint < 4; ++joint) {
        const SegmentLabel& seg = rec.segment(kPerJoint[joint]);
        std::vector<double> angles;
        int skipped = 0;
        for (int i = seg.from; i < seg.to; ++i) {
            const auto angle =
                exercise_angle(rec.frames[static_cast<std::size_t>(i)], kPerJoint[joint], i);
            if (angle)
                angles.push_back(*angle);
            else
                ++skipped;
        }
        if (stats != nullptr) {
            stats->valid_frames[joint] = static_cast<int>(angles.size());
            stats->skipped_frames[joint] = skipped;
        }
        if (static_cast<int>(angles.size()) < kMinValidFrames)
            throw InsufficientDataError(std::string("segment '") +
                                        exercise_name(kPerJoint[joint]) + "' has only " +
                                        std::to_string(angles.size()) +
                                        " valid frames (need >= 10)");
        rom.lo[joint] = percentile(angles, 2.0);
        rom.hi[joint] = percentile(angles, 98.0);
    }
    rom.validate();
    return rom;
}

}  // namespace reachmap
