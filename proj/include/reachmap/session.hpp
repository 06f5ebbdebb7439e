#pragma once

#include <string>
#include <vector>

#include "reachmap/analysis.hpp"

namespace reachmap {

enum class Condition { kUnrestricted = 0, kPartiallyRestricted = 1, kRestricted = 2 };

const char* condition_name(Condition c);
Condition condition_from_name(const std::string& name);

struct BalloonEvent {
    Eigen::Vector3d balloon = Eigen::Vector3d::Zero();  // spawn position [m]
    Tier difficulty = Tier::kEasy;
    double t_spawn = 0.0;  // [s]
    double t_pop = 0.0;    // [s]
};

struct SessionLog {
    std::string user_id;
    Condition condition = Condition::kUnrestricted;
    Eigen::Vector3d home = Eigen::Vector3d::Zero();
    std::vector<BalloonEvent> events;  // ordered, non-overlapping in time
};

// Straight-line home->balloon distance over the pop duration.
// Throws InvalidEventError when t_pop <= t_spawn.
double pop_speed(const Eigen::Vector3d& home, const Eigen::Vector3d& balloon, double t_spawn,
                 double t_pop);

struct SpeedCell {
    double mean = 0.0;  // [m/s]
    double sd = 0.0;    // population standard deviation (0 for a single event)
    int count = 0;
};

// One 3x3 table (condition x difficulty) per user, Table-II shaped.
struct UserSpeedTable {
    std::string user_id;
    SpeedCell cells[3][3];  // [condition][difficulty]
};

struct SpeedReport {
    std::vector<UserSpeedTable> users;          // sorted by user id
    std::vector<std::string> invalid_events;    // description per rejected event
};

// Groups valid events by (user, condition, difficulty); invalid events are
// listed, not fatal.
SpeedReport session_report(const std::vector<SessionLog>& logs);

// Parametric pop-speed model for synthesized sessions: speed around
// base_speed + score_gain * voxel_score, plus Gaussian noise.
struct UserModel {
    double base_speed = 0.6;  // [m/s]
    double score_gain = 0.0;  // [m/s per score unit]
    double noise_sd = 0.0;    // [m/s]

    void validate() const {
        if (!(base_speed > 0.0)) throw InvalidArgumentError("base_speed must be positive");
        if (score_gain < 0.0) throw InvalidArgumentError("score_gain must be >= 0");
        if (noise_sd < 0.0) throw InvalidArgumentError("noise_sd must be >= 0");
    }
};

// Draws a spawn plan, then emits one event per spawn with
// duration = distance / max(1e-6, base_speed + score_gain*score + noise);
// spawns are 0.5 s apart ("one at a time"). Condition label is taken from the
// map metadata. Deterministic per seed.
SessionLog simulate_session(const CapabilityMap& map, const RegionLabels& labels,
                            const Eigen::Vector3d& home, const UserModel& user,
                            int per_tier, double d_min, std::uint64_t seed);

void save_session_log(const SessionLog& log, const std::string& path);
SessionLog load_session_log(const std::string& path);

}  // namespace reachmap
