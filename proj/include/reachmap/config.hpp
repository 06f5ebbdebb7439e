#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "reachmap/capability_map.hpp"
#include "reachmap/collision.hpp"
#include "reachmap/session.hpp"
#include "reachmap/types.hpp"

namespace reachmap {

// JSON (de)serialization for the domain types (nlohmann ADL hooks). These are
// the ARTIFACT forms: angles stay in radians so that save -> load round-trips
// bit-exactly. Human-authored documents (run configs, ROM files) use degrees
// and go through load_run_config / load_rom_file below instead.
void to_json(nlohmann::json& j, const ArmGeometry& g);
void from_json(const nlohmann::json& j, ArmGeometry& g);
void to_json(nlohmann::json& j, const RomLimits& rom);    // {"lo_rad": [...], "hi_rad": [...]}
void from_json(const nlohmann::json& j, RomLimits& rom);
void to_json(nlohmann::json& j, const CollisionModel& cm);
void from_json(const nlohmann::json& j, CollisionModel& cm);
void to_json(nlohmann::json& j, const GenerationParams& p);
void from_json(const nlohmann::json& j, GenerationParams& p);
void to_json(nlohmann::json& j, const MapMetadata& m);
void from_json(const nlohmann::json& j, MapMetadata& m);
void to_json(nlohmann::json& j, const UserModel& u);
void from_json(const nlohmann::json& j, UserModel& u);
void to_json(nlohmann::json& j, const VoxelGrid& g);
void from_json(const nlohmann::json& j, VoxelGrid& g);

// Run configuration consumed by the CLI; one document drives the whole
// pipeline so every artifact can embed its provenance. Flags override fields.
struct RunConfig {
    std::string user_id = "user";
    std::string condition = "unrestricted";
    ArmGeometry geometry{0.30, 0.25, 0.18};
    RomLimits rom;                       // nominal unless rom_path overrides
    std::optional<std::string> rom_path; // JSON file with measured RomLimits
    CollisionModel collision = CollisionModel::default_model();
    GenerationParams generation;
    Eigen::Vector3d home = Eigen::Vector3d(0.05, 0.35, -0.15);
    int workers = 1;
    int per_tier = 10;
    double d_min = 0.15;
    double band_lo = 0.5;  // default hull band: upper-score cue
    double band_hi = 1.0;
    UserModel user_model;
};

// Loads and validates a RunConfig document; unknown keys are rejected so
// typos fail loudly. Throws ConfigError / IoError.
RunConfig load_run_config(const std::string& path);

// Standalone RomLimits document (the `rom` subcommand's output):
// {"rom_deg": {...}, "source": "...", ...}. Throws ConfigError / IoError.
RomLimits load_rom_file(const std::string& path);
void save_rom_file(const RomLimits& rom, const std::string& source, const std::string& path);

// Nominal adult ROM defaults (converted from degrees; see configs/nominal_rom.json).
RomLimits nominal_rom();

}  // namespace reachmap
