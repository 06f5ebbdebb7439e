#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reachmap/arm_model.hpp"
#include "reachmap/voxel_grid.hpp"

namespace reachmap {

// Knobs of the offline map-generation pipeline. Angles in radians; config
// files and CLI flags take degrees and convert on load.
struct GenerationParams {
    double arm_step = deg_to_rad(15.0);    // joint-lattice step for q1..q4
    double wrist_step = deg_to_rad(30.0);  // joint-lattice step for q5..q7
    int n_dir = 32;                     // orientation bins (Fibonacci sphere)
    // IK position tolerance [m]; 0 selects the half voxel diagonal, which
    // guarantees a witness can satisfy its own direction bin from inside the
    // voxel it occupies.
    double ik_pos_tol = 0.0;
    double ik_ang_tol = deg_to_rad(15.0);
    int ik_max_iterations = 100;
    int witnesses_per_voxel = 4;
    int seeds_per_bin = 2;  // extra random IK seeds per (voxel, direction)
    bool collision_checks = true;
    std::uint64_t rng_seed = 0;
    double voxel_edge = 0.05;      // [m]
    double grid_margin = 0.05;     // grid half-extent = total reach + margin [m]
    std::int64_t max_lattice_points = 50'000'000;

    double effective_pos_tol() const {
        return ik_pos_tol > 0.0 ? ik_pos_tol : voxel_edge * std::sqrt(3.0) / 2.0;
    }

    void validate() const;
    bool operator==(const GenerationParams& other) const = default;
};

struct MapMetadata {
    std::string user_id;
    std::string condition;  // unrestricted / partially_restricted / restricted / free label
    RomLimits rom;
    ArmGeometry geom;
    CollisionModel collision = CollisionModel::default_model();
    GenerationParams params;

    bool operator==(const MapMetadata& other) const = default;
};

// One occupied voxel: score = numerator / params.n_dir, numerator >= 1.
struct MapEntry {
    std::uint32_t voxel = 0;
    std::uint16_t numerator = 0;

    bool operator==(const MapEntry& other) const = default;
};

struct CapabilityMap {
    VoxelGrid grid;
    std::vector<MapEntry> entries;  // sorted by voxel index, unique
    MapMetadata meta;

    // Validates invariants (sorted unique entries, numerators in [1, n_dir])
    // and builds the dense query table. Call after manual construction or
    // deserialization; generate_capability_map returns finalized maps.
    void finalize();

    double score_of(const MapEntry& e) const {
        return static_cast<double>(e.numerator) / meta.params.n_dir;
    }

    // Numerator of the voxel with linear index `v`, 0 when unoccupied.
    std::uint16_t numerator_at(std::uint32_t v) const {
        return v < lookup_.size() ? lookup_[v] : 0;
    }

    bool operator==(const CapabilityMap& other) const {
        return grid == other.grid && entries == other.entries && meta == other.meta;
    }

  private:
    std::vector<std::uint16_t> lookup_;  // dense voxel -> numerator, derived
};

// Score of the voxel containing `point`; nullopt outside the grid or on an
// unoccupied voxel. O(1).
std::optional<double> score_at(const CapabilityMap& map, const Eigen::Vector3d& point);

// Global joint lattice: per joint the integer multiples k of the step that
// fall inside the ROM interval (k_min..k_max inclusive, anchored at 0 rad).
// Because the anchor is absolute, nested ROM intervals yield nested lattice
// point sets exactly.
struct JointLattice {
    std::array<double, kNumJoints> step{};
    std::array<std::int64_t, kNumJoints> k_min{};
    std::array<std::int64_t, kNumJoints> k_max{};  // inclusive; k_max >= k_min always
    std::int64_t total = 0;

    std::int64_t count(int joint) const { return k_max[joint] - k_min[joint] + 1; }

    // Mixed-radix decode of ordinal in [0, total) to a configuration; joint 7
    // varies fastest. Pure function of (ordinal, step, k ranges).
    JointAngles config_at(std::int64_t ordinal) const;
};

// Throws LatticeTooLargeError (carrying the estimate) when the point count
// exceeds params.max_lattice_points.
JointLattice make_joint_lattice(const RomLimits& rom, const GenerationParams& params);

// Unit directions quasi-uniform on S^2 (Fibonacci spiral), deterministic.
std::vector<Eigen::Vector3d> fibonacci_sphere_directions(int n);

// FK seeding pass output: which voxels any in-limit configuration reaches,
// plus up to witnesses_per_voxel seed configurations per voxel in lattice
// order. `witnesses` holds collision-free configs; `fallback` (filled only
// when collision_checks is off) holds the first configs regardless of
// collision and is consulted when `witnesses` is empty.
struct VoxelWitnesses {
    std::uint32_t voxel = 0;
    std::vector<JointAngles> witnesses;
    std::vector<JointAngles> fallback;
};

struct SeedPassResult {
    std::vector<VoxelWitnesses> voxels;  // sorted by voxel index
};

// `workers` is an execution knob, deliberately not part of GenerationParams:
// the result (and the serialized map) is identical for any worker count.
SeedPassResult fk_seed_pass(const ArmGeometry& geom, const RomLimits& rom,
                            const CollisionModel& cm, const VoxelGrid& grid,
                            const GenerationParams& params, int workers = 1);

// Orientation-scoring pass: for every occupied voxel and every direction bin,
// runs IK from the stored witnesses plus seeds_per_bin random in-limit seeds
// (rng derived from rng_seed, voxel index, and bin, so results are
// independent of scheduling). Voxels where no bin is reachable are dropped.
CapabilityMap score_pass(const SeedPassResult& seeds, const ArmGeometry& geom,
                         const RomLimits& rom, const CollisionModel& cm, const VoxelGrid& grid,
                         const GenerationParams& params, MapMetadata meta, int workers = 1);

// Both passes over a grid centered at the shoulder covering the full reach.
CapabilityMap generate_capability_map(const ArmGeometry& geom, const RomLimits& rom,
                                      const CollisionModel& cm, const GenerationParams& params,
                                      const std::string& user_id, const std::string& condition,
                                      int workers = 1);

VoxelGrid make_reach_grid(const ArmGeometry& geom, const GenerationParams& params);

}  // namespace reachmap
