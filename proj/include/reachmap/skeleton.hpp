#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "reachmap/errors.hpp"

namespace reachmap {

// Exercises a recording may label. kNeutral provides the static pose used for
// limb-length estimation; the four ROM exercises map onto q1..q4.
enum class Exercise {
    kNeutral,
    kShoulderAbductionAdduction,
    kShoulderFlexionExtension,
    kShoulderRotation,
    kElbowFlexionExtension,
};

const char* exercise_name(Exercise e);
Exercise exercise_from_name(const std::string& name);  // throws IngestionError on unknown id

// One skeleton-tracker frame: a timestamp plus named 3D joint positions in the
// torso frame (meters). Only the joints a caller asks for must be present.
struct SkeletonFrame {
    double timestamp = 0.0;  // seconds
    std::map<std::string, Eigen::Vector3d> joints;

    bool has(const std::string& joint) const { return joints.count(joint) != 0; }
    // Position of `joint`; throws IngestionError naming the joint and frame
    // index (pass -1 when unknown) if absent or non-finite.
    const Eigen::Vector3d& at(const std::string& joint, int frame_index = -1) const;
};

// Half-open frame range [from, to) labeled with an exercise.
struct SegmentLabel {
    Exercise exercise = Exercise::kNeutral;
    int from = 0;
    int to = 0;
};

struct SkeletonRecording {
    std::vector<SkeletonFrame> frames;
    std::vector<SegmentLabel> segments;

    // Checks strictly increasing timestamps, in-bounds disjoint segments, and
    // finite joint positions; throws IngestionError on violation.
    void validate() const;

    // Frame index range of the first segment labeled `e`; throws
    // MissingSegmentError if no such segment exists.
    const SegmentLabel& segment(Exercise e) const;
    bool has_segment(Exercise e) const;
};

// Parses the JSON Lines recording format: a header line
//   {"segments": [{"exercise": "neutral", "from": 0, "to": 50}, ...]}
// followed by one frame per line
//   {"t": 0.033, "joints": {"right_shoulder": [x, y, z], ...}}.
// Validates the result before returning.
SkeletonRecording load_recording(const std::string& path);
SkeletonRecording parse_recording(std::istream& in, const std::string& origin);

}  // namespace reachmap
