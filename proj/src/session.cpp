#include "reachmap/session.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "reachmap/rng.hpp"

namespace reachmap {

using nlohmann::json;

namespace {

constexpr const char* kSessionMagic = "RMAP-SESSION";
constexpr int kVersion = 1;

// Keeps the simulation noise stream disjoint from the spawn-plan streams,
// which use mix_seed(seed, tier) with tier in 0..2.
constexpr std::uint64_t kPopNoiseStream = 0x706f70;  // "pop"

double population_sd(const std::vector<double>& xs, double mean) {
    double acc = 0.0;
    for (const double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / double(xs.size()));
}

}  // namespace

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::kUnrestricted: return "unrestricted";
        case Condition::kPartiallyRestricted: return "partially_restricted";
        case Condition::kRestricted: return "restricted";
    }
    throw InvalidArgumentError("unknown condition value");
}

Condition condition_from_name(const std::string& name) {
    if (name == "unrestricted") return Condition::kUnrestricted;
    if (name == "partially_restricted") return Condition::kPartiallyRestricted;
    if (name == "restricted") return Condition::kRestricted;
    throw InvalidArgumentError("unknown condition '" + name + "'");
}

double pop_speed(const Eigen::Vector3d& home, const Eigen::Vector3d& balloon,
                 double t_spawn, double t_pop) {
    if (!(t_pop > t_spawn))
        throw InvalidEventError("t_pop " + std::to_string(t_pop) + " is not after t_spawn " +
                                std::to_string(t_spawn));
    const double speed = (balloon - home).norm() / (t_pop - t_spawn);
    if (!std::isfinite(speed)) throw InvalidEventError("event speed is not finite");
    return speed;
}

SpeedReport session_report(const std::vector<SessionLog>& logs) {
    struct Accum {
        std::vector<double> speeds[3][3];
    };
    std::map<std::string, Accum> by_user;

    SpeedReport report;
    for (const SessionLog& log : logs) {
        Accum& acc = by_user[log.user_id];
        for (std::size_t k = 0; k < log.events.size(); ++k) {
            const BalloonEvent& e = log.events[k];
            try {
                const double v = pop_speed(log.home, e.balloon, e.t_spawn, e.t_pop);
                acc.speeds[int(log.condition)][int(e.difficulty)].push_back(v);
            } catch (const InvalidEventError& err) {
                report.invalid_events.push_back("user '" + log.user_id + "' (" +
                                                condition_name(log.condition) + ") event " +
                                                std::to_string(k + 1) + ": " + err.what());
            }
        }
    }

    for (const auto& [user_id, acc] : by_user) {
        UserSpeedTable table;
        table.user_id = user_id;
        for (int c = 0; c < 3; ++c) {
            for (int d = 0; d < 3; ++d) {
                const std::vector<double>& xs = acc.speeds[c][d];
                if (xs.empty()) continue;
                SpeedCell& cell = table.cells[c][d];
                cell.count = int(xs.size());
                for (const double x : xs) cell.mean += x;
                cell.mean /= double(xs.size());
                cell.sd = population_sd(xs, cell.mean);
            }
        }
        report.users.push_back(std::move(table));
    }
    return report;
}

SessionLog simulate_session(const CapabilityMap& map, const RegionLabels& labels,
                            const Eigen::Vector3d& home, const UserModel& user,
                            int per_tier, double d_min, std::uint64_t seed) {
    user.validate();
    const SpawnPlan plan = plan_spawns(map, labels, home, per_tier, d_min, seed);

    SessionLog log;
    log.user_id = map.meta.user_id;
    log.condition = condition_from_name(map.meta.condition);
    log.home = home;

    Rng rng(mix_seed(seed, kPopNoiseStream));
    double t = 0.0;
    for (const Spawn& s : plan.spawns) {
        const double noise = user.noise_sd * rng.gaussian();
        const double score =
            double(map.numerator_at(s.voxel)) / double(map.meta.params.n_dir);
        const double speed = user.base_speed + user.score_gain * score + noise;
        const double distance = (s.position - home).norm();
        BalloonEvent e;
        e.balloon = s.position;
        e.difficulty = s.difficulty;
        e.t_spawn = t + 0.5;  // one balloon at a time, spawned after a beat
        // The floor keeps a zero-distance spawn from producing a degenerate event.
        e.t_pop = e.t_spawn + std::max(distance / std::max(1e-6, speed), 1e-9);
        t = e.t_pop;
        log.events.push_back(e);
    }
    return log;
}

void save_session_log(const SessionLog& log, const std::string& path) {
    json j;
    j["magic"] = kSessionMagic;
    j["version"] = kVersion;
    j["user_id"] = log.user_id;
    j["condition"] = condition_name(log.condition);
    j["home"] = {log.home.x(), log.home.y(), log.home.z()};
    json events = json::array();
    for (const BalloonEvent& e : log.events)
        events.push_back({{"balloon", {e.balloon.x(), e.balloon.y(), e.balloon.z()}},
                          {"difficulty", tier_name(e.difficulty)},
                          {"t_spawn", e.t_spawn},
                          {"t_pop", e.t_pop}});
    j["events"] = std::move(events);

    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

SessionLog load_session_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || j.value("magic", "") != kSessionMagic)
        throw CorruptFileError("'" + path + "' is not a session log file");
    if (j.value("version", -1) != kVersion)
        throw VersionMismatchError("'" + path + "' has format version " +
                                   std::to_string(j.value("version", -1)) + ", expected " +
                                   std::to_string(kVersion));

    SessionLog log;
    try {
        j.at("user_id").get_to(log.user_id);
        log.condition = condition_from_name(j.at("condition").get<std::string>());
        const auto& home = j.at("home");
        log.home = Eigen::Vector3d(home.at(0).get<double>(), home.at(1).get<double>(),
                                   home.at(2).get<double>());
        for (const auto& ev : j.at("events")) {
            BalloonEvent e;
            const auto& b = ev.at("balloon");
            e.balloon = Eigen::Vector3d(b.at(0).get<double>(), b.at(1).get<double>(),
                                        b.at(2).get<double>());
            e.difficulty = tier_from_name(ev.at("difficulty").get<std::string>());
            ev.at("t_spawn").get_to(e.t_spawn);
            ev.at("t_pop").get_to(e.t_pop);
            log.events.push_back(e);
        }
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is incomplete: " + e.what());
    }

    // Inter-event structure is a file-level invariant; per-event validity
    // (t_pop after t_spawn) is judged later, when speeds are computed.
    for (std::size_t k = 1; k < log.events.size(); ++k) {
        const BalloonEvent& prev = log.events[k - 1];
        const BalloonEvent& cur = log.events[k];
        if (cur.t_spawn < prev.t_spawn)
            throw InvalidEventError("event " + std::to_string(k + 1) +
                                    " spawns before event " + std::to_string(k));
        if (prev.t_pop > prev.t_spawn && cur.t_spawn < prev.t_pop)
            throw InvalidEventError("event " + std::to_string(k + 1) +
                                    " spawns while event " + std::to_string(k) +
                                    " is still up");
    }
    return log;
}

}  // namespace reachmap
