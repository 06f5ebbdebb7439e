#pragma once

#include <optional>
#include <vector>

#include "reachmap/skeleton.hpp"
#include "reachmap/types.hpp"

namespace reachmap {

// Joint names required of neutral frames for limb-length estimation.
inline constexpr const char* kJointNeck = "neck";
inline constexpr const char* kJointHipCenter = "hip_center";
inline constexpr const char* kJointRightShoulder = "right_shoulder";
inline constexpr const char* kJointRightElbow = "right_elbow";
inline constexpr const char* kJointRightWrist = "right_wrist";
inline constexpr const char* kJointRightHandTip = "right_hand_tip";

// Elbow must be flexed at least this much for the internal-external rotation
// angle to be well conditioned; frames below the threshold are skipped.
inline constexpr double kRotationMinElbowFlexion = kPi / 4.0;

// Mean inter-joint distances (shoulder-elbow, elbow-wrist, wrist-hand_tip)
// over the neutral segment. Throws MissingSegmentError when no neutral
// segment is labeled and IngestionError when a neutral frame lacks a joint.
ArmGeometry estimate_limb_lengths(const SkeletonRecording& rec);

// Joint angle exhibited by one frame for one exercise:
//   abduction-adduction  signed angle in the frontal (XZ) plane between the
//                        torso-down vector (neck -> hip_center) and the
//                        shoulder -> elbow vector; positive = arm raised
//                        laterally (+X),
//   flexion-extension    the same construction in the sagittal (YZ) plane;
//                        positive = arm raised forward (+Y),
//   rotation             signed angle of the elbow -> wrist vector about the
//                        humeral (shoulder -> elbow) axis measured from the
//                        sagittal (anterior) reference; positive = internal,
//   elbow                pi - angle(elbow -> shoulder, elbow -> wrist).
// Returns nullopt when the rotation exercise finds elbow flexion below
// kRotationMinElbowFlexion (the frame is skipped, not an error). Throws
// NumericDegeneracyError on coincident joints and IngestionError on missing
// ones.
std::optional<double> exercise_angle(const SkeletonFrame& frame, Exercise exercise,
                                     int frame_index = -1);

// Diagnostics from extract_rom: how many frames each segment contributed and
// how many were skipped (rotation with an under-flexed elbow).
struct RomExtractionStats {
    int valid_frames[4] = {0, 0, 0, 0};    // per exercise q1..q4
    int skipped_frames[4] = {0, 0, 0, 0};
};

// Measured ROM: for q1..q4 the [2nd, 98th] percentile interval of per-frame
// exercise angles over the labeled segment; q5..q7 copied from `nominal`.
// Throws MissingSegmentError when a q1..q4 segment is absent and
// InsufficientDataError when a segment yields fewer than 10 valid frames.
RomLimits extract_rom(const SkeletonRecording& rec, const RomLimits& nominal,
                      RomExtractionStats* stats = nullptr);

// Linear-interpolation percentile (rank = p/100 * (n-1)) of an unsorted
// sample; exposed for tests. Throws InvalidArgumentError on empty input.
double percentile(std::vector<double> values, double p);

}  // namespace reachmap
