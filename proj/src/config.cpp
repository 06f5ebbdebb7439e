#include "reachmap/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

namespace reachmap {

using nlohmann::json;

namespace {

json vec3_to_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

Eigen::Vector3d vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ConfigError("expected a 3-element array");
    return Eigen::Vector3d(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>());
}

const char* pair_name(CollisionPair p) {
    switch (p) {
        case CollisionPair::kForearmHandVsTorso: return "forearm_hand_vs_torso";
        case CollisionPair::kForearmHandVsHead: return "forearm_hand_vs_head";
        case CollisionPair::kUpperArmVsTorso: return "upper_arm_vs_torso";
    }
    return "?";
}

CollisionPair pair_from_name(const std::string& name) {
    for (CollisionPair p : {CollisionPair::kForearmHandVsTorso, CollisionPair::kForearmHandVsHead,
                            CollisionPair::kUpperArmVsTorso}) {
        if (name == pair_name(p)) return p;
    }
    throw ConfigError("unknown collision pair '" + name + "'");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        if (allowed.count(key) == 0)
            throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

}  // namespace

void to_json(json& j, const ArmGeometry& g) {
    j = json{{"upper_arm_length", g.upper_arm_length},
             {"forearm_length", g.forearm_length},
             {"hand_length", g.hand_length}};
}

void from_json(const json& j, ArmGeometry& g) {
    j.at("upper_arm_length").get_to(g.upper_arm_length);
    j.at("forearm_length").get_to(g.forearm_length);
    j.at("hand_length").get_to(g.hand_length);
}

void to_json(json& j, const RomLimits& rom) {
    j = json{{"lo_rad", rom.lo}, {"hi_rad", rom.hi}};
}

void from_json(const json& j, RomLimits& rom) {
    j.at("lo_rad").get_to(rom.lo);
    j.at("hi_rad").get_to(rom.hi);
}

void to_json(json& j, const CollisionModel& cm) {
    json pairs = json::array();
    for (CollisionPair p : cm.checked_pairs) pairs.push_back(pair_name(p));
    j = json{{"torso",
              {{"a", vec3_to_json(cm.torso.a)},
               {"b", vec3_to_json(cm.torso.b)},
               {"radius", cm.torso.radius}}},
             {"head", {{"center", vec3_to_json(cm.head.center)}, {"radius", cm.head.radius}}},
             {"upper_arm_radius", cm.upper_arm_radius},
             {"forearm_hand_radius", cm.forearm_hand_radius},
             {"shoulder_trim_fraction", cm.shoulder_trim_fraction},
             {"checked_pairs", pairs}};
}

void from_json(const json& j, CollisionModel& cm) {
    cm.torso.a = vec3_from_json(j.at("torso").at("a"));
    cm.torso.b = vec3_from_json(j.at("torso").at("b"));
    j.at("torso").at("radius").get_to(cm.torso.radius);
    cm.head.center = vec3_from_json(j.at("head").at("center"));
    j.at("head").at("radius").get_to(cm.head.radius);
    j.at("upper_arm_radius").get_to(cm.upper_arm_radius);
    j.at("forearm_hand_radius").get_to(cm.forearm_hand_radius);
    j.at("shoulder_trim_fraction").get_to(cm.shoulder_trim_fraction);
    cm.checked_pairs.clear();
    for (const auto& name : j.at("checked_pairs"))
        cm.checked_pairs.push_back(pair_from_name(name.get<std::string>()));
}

void to_json(json& j, const GenerationParams& p) {
    j = json{{"arm_step", p.arm_step},
             {"wrist_step", p.wrist_step},
             {"n_dir", p.n_dir},
             {"ik_pos_tol", p.ik_pos_tol},
             {"ik_ang_tol", p.ik_ang_tol},
             {"ik_max_iterations", p.ik_max_iterations},
             {"witnesses_per_voxel", p.witnesses_per_voxel},
             {"seeds_per_bin", p.seeds_per_bin},
             {"collision_checks", p.collision_checks},
             {"rng_seed", p.rng_seed},
             {"voxel_edge", p.voxel_edge},
             {"grid_margin", p.grid_margin},
             {"max_lattice_points", p.max_lattice_points}};
}

void from_json(const json& j, GenerationParams& p) {
    j.at("arm_step").get_to(p.arm_step);
    j.at("wrist_step").get_to(p.wrist_step);
    j.at("n_dir").get_to(p.n_dir);
    j.at("ik_pos_tol").get_to(p.ik_pos_tol);
    j.at("ik_ang_tol").get_to(p.ik_ang_tol);
    j.at("ik_max_iterations").get_to(p.ik_max_iterations);
    j.at("witnesses_per_voxel").get_to(p.witnesses_per_voxel);
    j.at("seeds_per_bin").get_to(p.seeds_per_bin);
    j.at("collision_checks").get_to(p.collision_checks);
    j.at("rng_seed").get_to(p.rng_seed);
    j.at("voxel_edge").get_to(p.voxel_edge);
    j.at("grid_margin").get_to(p.grid_margin);
    j.at("max_lattice_points").get_to(p.max_lattice_points);
}

void to_json(json& j, const MapMetadata& m) {
    j = json{{"user_id", m.user_id},
             {"condition", m.condition},
             {"rom", m.rom},
             {"geometry", m.geom},
             {"collision", m.collision},
             {"params", m.params}};
}

void from_json(const json& j, MapMetadata& m) {
    j.at("user_id").get_to(m.user_id);
    j.at("condition").get_to(m.condition);
    j.at("rom").get_to(m.rom);
    j.at("geometry").get_to(m.geom);
    j.at("collision").get_to(m.collision);
    j.at("params").get_to(m.params);
}

void to_json(json& j, const UserModel& u) {
    j = json{{"base_speed", u.base_speed}, {"score_gain", u.score_gain}, {"noise_sd", u.noise_sd}};
}

void from_json(const json& j, UserModel& u) {
    j.at("base_speed").get_to(u.base_speed);
    j.at("score_gain").get_to(u.score_gain);
    j.at("noise_sd").get_to(u.noise_sd);
}

void to_json(json& j, const VoxelGrid& g) {
    j = json{{"origin", vec3_to_json(g.origin)}, {"voxel_edge", g.voxel_edge}, {"dims", g.dims}};
}

void from_json(const json& j, VoxelGrid& g) {
    g.origin = vec3_from_json(j.at("origin"));
    j.at("voxel_edge").get_to(g.voxel_edge);
    j.at("dims").get_to(g.dims);
}

namespace {

// Degree-based ROM object of human-authored documents: {"q1": [lo, hi], ...}.
RomLimits rom_from_degrees(const json& j) {
    RomLimits rom;
    std::set<std::string> allowed;
    for (int i = 0; i < kNumJoints; ++i) {
        const std::string key = "q" + std::to_string(i + 1);
        allowed.insert(key);
        const json& interval = j.at(key);
        if (!interval.is_array() || interval.size() != 2)
            throw ConfigError("rom entry '" + key + "' must be [lo_deg, hi_deg]");
        rom.lo[i] = deg_to_rad(interval.at(0).get<double>());
        rom.hi[i] = deg_to_rad(interval.at(1).get<double>());
    }
    reject_unknown_keys(j, allowed, "rom_deg");
    rom.validate();
    return rom;
}

json rom_to_degrees(const RomLimits& rom) {
    json j;
    for (int i = 0; i < kNumJoints; ++i)
        j["q" + std::to_string(i + 1)] = {rad_to_deg(rom.lo[i]), rad_to_deg(rom.hi[i])};
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void apply_generation_config(const json& j, GenerationParams& p) {
    reject_unknown_keys(j,
                        {"voxel_edge", "grid_margin", "arm_step_deg", "wrist_step_deg", "n_dir",
                         "ik_pos_tol", "ik_ang_tol_deg", "ik_max_iterations",
                         "witnesses_per_voxel", "seeds_per_bin", "collision_checks",
                         "max_lattice_points"},
                        "generation");
    if (j.contains("voxel_edge")) j.at("voxel_edge").get_to(p.voxel_edge);
    if (j.contains("grid_margin")) j.at("grid_margin").get_to(p.grid_margin);
    if (j.contains("arm_step_deg")) p.arm_step = deg_to_rad(j.at("arm_step_deg").get<double>());
    if (j.contains("wrist_step_deg"))
        p.wrist_step = deg_to_rad(j.at("wrist_step_deg").get<double>());
    if (j.contains("n_dir")) j.at("n_dir").get_to(p.n_dir);
    if (j.contains("ik_pos_tol")) j.at("ik_pos_tol").get_to(p.ik_pos_tol);
    if (j.contains("ik_ang_tol_deg"))
        p.ik_ang_tol = deg_to_rad(j.at("ik_ang_tol_deg").get<double>());
    if (j.contains("ik_max_iterations")) j.at("ik_max_iterations").get_to(p.ik_max_iterations);
    if (j.contains("witnesses_per_voxel"))
        j.at("witnesses_per_voxel").get_to(p.witnesses_per_voxel);
    if (j.contains("seeds_per_bin")) j.at("seeds_per_bin").get_to(p.seeds_per_bin);
    if (j.contains("collision_checks")) j.at("collision_checks").get_to(p.collision_checks);
    if (j.contains("max_lattice_points")) j.at("max_lattice_points").get_to(p.max_lattice_points);
}

void apply_collision_config(const json& j, CollisionModel& cm) {
    reject_unknown_keys(j,
                        {"torso", "head", "upper_arm_radius", "forearm_hand_radius",
                         "shoulder_trim_fraction", "checked_pairs"},
                        "collision");
    if (j.contains("torso")) {
        const json& t = j.at("torso");
        if (t.contains("a")) cm.torso.a = vec3_from_json(t.at("a"));
        if (t.contains("b")) cm.torso.b = vec3_from_json(t.at("b"));
        if (t.contains("radius")) t.at("radius").get_to(cm.torso.radius);
    }
    if (j.contains("head")) {
        const json& h = j.at("head");
        if (h.contains("center")) cm.head.center = vec3_from_json(h.at("center"));
        if (h.contains("radius")) h.at("radius").get_to(cm.head.radius);
    }
    if (j.contains("upper_arm_radius")) j.at("upper_arm_radius").get_to(cm.upper_arm_radius);
    if (j.contains("forearm_hand_radius"))
        j.at("forearm_hand_radius").get_to(cm.forearm_hand_radius);
    if (j.contains("shoulder_trim_fraction"))
        j.at("shoulder_trim_fraction").get_to(cm.shoulder_trim_fraction);
    if (j.contains("checked_pairs")) {
        cm.checked_pairs.clear();
        for (const auto& name : j.at("checked_pairs"))
            cm.checked_pairs.push_back(pair_from_name(name.get<std::string>()));
    }
}

}  // namespace

RomLimits nominal_rom() {
    // Normative adult shoulder/elbow/forearm/wrist ranges (degrees), converted
    // once; see configs/nominal_rom.json for the annotated source values.
    RomLimits rom;
    const double lo_deg[kNumJoints] = {-45, -50, -90, 0, -80, -20, -65};
    const double hi_deg[kNumJoints] = {160, 165, 75, 145, 85, 35, 73};
    for (int i = 0; i < kNumJoints; ++i) {
        rom.lo[i] = deg_to_rad(lo_deg[i]);
        rom.hi[i] = deg_to_rad(hi_deg[i]);
    }
    return rom;
}

RunConfig load_run_config(const std::string& path) {
    const json j = load_json_file(path);
    try {
        reject_unknown_keys(j,
                            {"user_id", "condition", "geometry", "rom_deg", "rom_path",
                             "collision", "generation", "seed", "workers", "home", "per_tier",
                             "d_min", "band", "user_model"},
                            "run config");
        RunConfig cfg;
        cfg.rom = nominal_rom();
        if (j.contains("user_id")) j.at("user_id").get_to(cfg.user_id);
        if (j.contains("condition")) j.at("condition").get_to(cfg.condition);
        if (j.contains("geometry")) j.at("geometry").get_to(cfg.geometry);
        if (j.contains("rom_deg")) cfg.rom = rom_from_degrees(j.at("rom_deg"));
        if (j.contains("rom_path")) cfg.rom_path = j.at("rom_path").get<std::string>();
        if (j.contains("collision")) apply_collision_config(j.at("collision"), cfg.collision);
        if (j.contains("generation")) apply_generation_config(j.at("generation"), cfg.generation);
        if (j.contains("seed")) cfg.generation.rng_seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("workers")) j.at("workers").get_to(cfg.workers);
        if (j.contains("home")) cfg.home = vec3_from_json(j.at("home"));
        if (j.contains("per_tier")) j.at("per_tier").get_to(cfg.per_tier);
        if (j.contains("d_min")) j.at("d_min").get_to(cfg.d_min);
        if (j.contains("band")) {
            const json& b = j.at("band");
            if (!b.is_array() || b.size() != 2) throw ConfigError("band must be [lo, hi]");
            cfg.band_lo = b.at(0).get<double>();
            cfg.band_hi = b.at(1).get<double>();
        }
        if (j.contains("user_model")) j.at("user_model").get_to(cfg.user_model);

        if (cfg.rom_path) cfg.rom = load_rom_file(*cfg.rom_path);
        cfg.geometry.validate();
        cfg.rom.validate();
        cfg.collision.validate();
        cfg.generation.validate();
        cfg.user_model.validate();
        if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
        if (cfg.per_tier < 1) throw ConfigError("per_tier must be >= 1");
        if (cfg.d_min < 0.0) throw ConfigError("d_min must be >= 0");
        if (!cfg.home.allFinite()) throw ConfigError("home must be finite");
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError("'" + path + "': " + e.what());
    }
}

RomLimits load_rom_file(const std::string& path) {
    const json j = load_json_file(path);
    try {
        if (!j.contains("rom_deg")) throw ConfigError("'" + path + "' lacks a 'rom_deg' object");
        return rom_from_degrees(j.at("rom_deg"));
    } catch (const json::exception& e) {
        throw ConfigError("'" + path + "': " + e.what());
    }
}

void save_rom_file(const RomLimits& rom, const std::string& source, const std::string& path) {
    rom.validate();
    json j;
    j["rom_deg"] = rom_to_degrees(rom);
    j["source"] = source;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace reachmap
