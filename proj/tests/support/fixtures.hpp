#pragma once

// Synthetic test data: skeleton recordings with known programmed angle
// sequences (so expected ROM comes from the sequence itself, not from the
// code under test), nested ROM fixtures, and hand-built capability maps.

#include <array>
#include <cmath>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "reachmap/capability_map.hpp"
#include "reachmap/config.hpp"
#include "reachmap/rng.hpp"
#include "reachmap/rom_capture.hpp"
#include "reachmap/skeleton.hpp"

namespace fixtures {

struct Sweep {
    double lo_deg = 0.0;
    double hi_deg = 0.0;
    int frames = 120;
    int spikes = 0;           // frames replaced by spike_deg, evenly spread
    double spike_deg = 170.0;
};

struct RecordingSpec {
    reachmap::ArmGeometry geom{0.30, 0.25, 0.18};
    int neutral_frames = 30;
    Sweep abduction{-30.0, 150.0, 120};
    Sweep flexion{-40.0, 155.0, 120};
    Sweep rotation{-55.0, 60.0, 120};
    Sweep elbow{5.0, 140.0, 120};
    double rotation_elbow_deg = 90.0;  // elbow flexion held during rotation
    double noise_sd = 0.0;             // per-coordinate position jitter [m]
    std::uint64_t noise_seed = 1;
};

struct BuiltRecording {
    reachmap::SkeletonRecording rec;
    // Programmed per-frame angles [rad] for q1..q4 (spikes included).
    std::array<std::vector<double>, 4> angles;
};

// Cosine sweep covering [lo, hi] once; the endpoints are sampled exactly.
inline std::vector<double> sweep_angles(const Sweep& s) {
    std::vector<double> out(std::size_t(s.frames));
    for (int k = 0; k < s.frames; ++k) {
        const double u = 2.0 * reachmap::kPi * k / s.frames;
        out[std::size_t(k)] =
            reachmap::deg_to_rad(s.lo_deg + (s.hi_deg - s.lo_deg) * (1.0 - std::cos(u)) / 2.0);
    }
    for (int j = 0; j < s.spikes; ++j) {
        const int at = (j + 1) * s.frames / (s.spikes + 1);
        out[std::size_t(at)] = reachmap::deg_to_rad(s.spike_deg);
    }
    return out;
}

inline BuiltRecording build_recording(const RecordingSpec& spec) {
    using reachmap::Exercise;
    BuiltRecording built;
    reachmap::Rng noise(spec.noise_seed);
    double t = 0.0;

    auto jitter = [&](Eigen::Vector3d p) {
        if (spec.noise_sd > 0.0)
            p += spec.noise_sd * Eigen::Vector3d(noise.gaussian(), noise.gaussian(),
                                                 noise.gaussian());
        return p;
    };
    auto push_frame = [&](const Eigen::Vector3d& elbow, const Eigen::Vector3d& wrist,
                          const Eigen::Vector3d& tip) {
        reachmap::SkeletonFrame f;
        f.timestamp = t;
        t += 1.0 / 30.0;
        f.joints[reachmap::kJointNeck] = jitter({-0.15, 0.0, 0.10});
        f.joints[reachmap::kJointHipCenter] = jitter({-0.15, 0.0, -0.50});
        f.joints[reachmap::kJointRightShoulder] = jitter(Eigen::Vector3d::Zero());
        f.joints[reachmap::kJointRightElbow] = jitter(elbow);
        f.joints[reachmap::kJointRightWrist] = jitter(wrist);
        f.joints[reachmap::kJointRightHandTip] = jitter(tip);
        built.rec.frames.push_back(std::move(f));
    };
    auto straight_arm = [&](const Eigen::Vector3d& dir) {
        push_frame(spec.geom.upper_arm_length * dir,
                   (spec.geom.upper_arm_length + spec.geom.forearm_length) * dir,
                   (spec.geom.upper_arm_length + spec.geom.forearm_length +
                    spec.geom.hand_length) *
                       dir);
    };
    auto bent_arm = [&](const Eigen::Vector3d& forearm_dir) {
        const Eigen::Vector3d elbow(0.0, 0.0, -spec.geom.upper_arm_length);
        push_frame(elbow, elbow + spec.geom.forearm_length * forearm_dir,
                   elbow + (spec.geom.forearm_length + spec.geom.hand_length) * forearm_dir);
    };
    auto add_segment = [&](Exercise e, int frames, auto&& emit) {
        const int from = int(built.rec.frames.size());
        for (int k = 0; k < frames; ++k) emit(k);
        built.rec.segments.push_back({e, from, int(built.rec.frames.size())});
    };

    add_segment(Exercise::kNeutral, spec.neutral_frames,
                [&](int) { straight_arm({0.0, 0.0, -1.0}); });

    const auto abd = sweep_angles(spec.abduction);
    built.angles[0] = abd;
    add_segment(Exercise::kShoulderAbductionAdduction, spec.abduction.frames, [&](int k) {
        straight_arm({std::sin(abd[std::size_t(k)]), 0.0, -std::cos(abd[std::size_t(k)])});
    });

    const auto flex = sweep_angles(spec.flexion);
    built.angles[1] = flex;
    add_segment(Exercise::kShoulderFlexionExtension, spec.flexion.frames, [&](int k) {
        straight_arm({0.0, std::sin(flex[std::size_t(k)]), -std::cos(flex[std::size_t(k)])});
    });

    // Humerus down, elbow bent by rotation_elbow_deg; the forearm swings in a
    // cone around the humeral axis. With a 90 deg elbow the forearm is
    // horizontal: rotation angle r gives direction (-sin r, cos r, 0).
    const auto rot = sweep_angles(spec.rotation);
    built.angles[2] = rot;
    const double bend = reachmap::deg_to_rad(spec.rotation_elbow_deg);
    add_segment(Exercise::kShoulderRotation, spec.rotation.frames, [&](int k) {
        const double r = rot[std::size_t(k)];
        const Eigen::Vector3d dir(-std::sin(r) * std::sin(bend), std::cos(r) * std::sin(bend),
                                  -std::cos(bend));
        bent_arm(dir);
    });

    const auto elb = sweep_angles(spec.elbow);
    built.angles[3] = elb;
    add_segment(Exercise::kElbowFlexionExtension, spec.elbow.frames, [&](int k) {
        bent_arm({0.0, std::sin(elb[std::size_t(k)]), -std::cos(elb[std::size_t(k)])});
    });

    built.rec.validate();
    return built;
}

// Serializes a recording in the JSON Lines ingestion format: the header line
// with the segment labels, then one frame per line.
inline std::string recording_jsonl(const reachmap::SkeletonRecording& rec) {
    nlohmann::json header;
    header["segments"] = nlohmann::json::array();
    for (const auto& s : rec.segments)
        header["segments"].push_back({{"exercise", reachmap::exercise_name(s.exercise)},
                                      {"from", s.from},
                                      {"to", s.to}});
    std::string out = header.dump();
    out += '\n';
    for (const auto& f : rec.frames) {
        nlohmann::json j;
        j["t"] = f.timestamp;
        j["joints"] = nlohmann::json::object();
        for (const auto& [name, p] : f.joints) j["joints"][name] = {p.x(), p.y(), p.z()};
        out += j.dump();
        out += '\n';
    }
    return out;
}

// --- nested ROM fixtures ---------------------------------------------------

inline reachmap::RomLimits rom_from_deg(const double (&lo)[reachmap::kNumJoints],
                                        const double (&hi)[reachmap::kNumJoints]) {
    reachmap::RomLimits rom;
    for (int i = 0; i < reachmap::kNumJoints; ++i) {
        rom.lo[i] = reachmap::deg_to_rad(lo[i]);
        rom.hi[i] = reachmap::deg_to_rad(hi[i]);
    }
    return rom;
}

// Shoulder-restricted fixtures, strictly nested within the nominal ROM.
inline reachmap::RomLimits partially_restricted_rom() {
    return rom_from_deg({-30, -35, -60, 0, -80, -20, -65}, {110, 115, 50, 145, 85, 35, 73});
}

inline reachmap::RomLimits restricted_rom() {
    return rom_from_deg({-15, -20, -40, 0, -80, -20, -65}, {70, 75, 30, 145, 85, 35, 73});
}

// --- hand-built maps --------------------------------------------------------

inline reachmap::VoxelGrid make_grid(const Eigen::Vector3d& origin, double edge,
                                     std::array<int, 3> dims) {
    reachmap::VoxelGrid g;
    g.origin = origin;
    g.voxel_edge = edge;
    g.dims = dims;
    g.validate();
    return g;
}

inline reachmap::CapabilityMap make_test_map(const reachmap::VoxelGrid& grid,
                                             std::vector<reachmap::MapEntry> entries,
                                             int n_dir,
                                             const std::string& condition = "unrestricted",
                                             const std::string& user_id = "t1") {
    reachmap::CapabilityMap m;
    m.grid = grid;
    m.entries = std::move(entries);
    m.meta.user_id = user_id;
    m.meta.condition = condition;
    m.meta.geom = reachmap::ArmGeometry{0.30, 0.25, 0.18};
    m.meta.rom = reachmap::nominal_rom();
    m.meta.params.n_dir = n_dir;
    m.finalize();
    return m;
}

}  // namespace fixtures
