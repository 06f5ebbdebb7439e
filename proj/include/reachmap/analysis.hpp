#pragma once

#include <string>
#include <vector>

#include "reachmap/capability_map.hpp"

namespace reachmap {

enum class Tier { kEasy = 0, kMedium = 1, kHard = 2 };

const char* tier_name(Tier t);
Tier tier_from_name(const std::string& name);  // throws InvalidArgumentError on unknown label

struct MapComparison {
    double volume_reduction_pct = 0.0;
    double dexterity_reduction_pct = 0.0;
    std::int64_t common_voxel_count = 0;
};

// 100 * (1 - occupied(other) / occupied(healthy)). Negative = improvement.
// Throws IncompatibleMapsError on differing grids and UndefinedBaselineError
// on an empty healthy map.
double volume_reduction(const CapabilityMap& healthy, const CapabilityMap& other);

struct DexterityResult {
    double reduction_pct = 0.0;
    std::int64_t common_voxel_count = 0;
};

// Score-sum comparison over the occupancy intersection:
// 100 * (1 - sum_other / sum_healthy). Throws NoCommonRegionError when the
// intersection is empty, IncompatibleMapsError on grid mismatch.
DexterityResult dexterity_reduction(const CapabilityMap& healthy, const CapabilityMap& other);

// Both measures in one report row.
MapComparison compare_maps(const CapabilityMap& healthy, const CapabilityMap& other);

// Rank-based difficulty tertiles over the occupied voxels: rank by score
// descending (ties by voxel index ascending); the top third is easy, then
// medium, then hard; remainder voxels from non-divisible counts go to the
// earlier tiers.
struct RegionLabels {
    std::vector<Tier> tiers;       // parallel to map.entries
    double easy_min_score = 0.0;   // realized thresholds (lowest score in tier)
    double medium_min_score = 0.0;
    std::array<std::int64_t, 3> tier_counts = {0, 0, 0};
};

RegionLabels classify_regions(const CapabilityMap& map);  // throws EmptySelectionError on empty map

struct Spawn {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();  // voxel center [m]
    Tier difficulty = Tier::kEasy;
    std::uint32_t voxel = 0;
};

struct SpawnPlan {
    std::vector<Spawn> spawns;  // easy block, then medium, then hard
    Eigen::Vector3d home = Eigen::Vector3d::Zero();
    std::uint64_t seed = 0;
    int per_tier = 0;
    double d_min = 0.0;
};

// Uniform without-replacement draw of per_tier voxel centers per tier, each
// at distance >= d_min from home; rng derived from (seed, tier), so plans are
// deterministic and thread-count independent. Throws InsufficientRegionError
// naming the tier that cannot supply per_tier eligible voxels.
SpawnPlan plan_spawns(const CapabilityMap& map, const RegionLabels& labels,
                      const Eigen::Vector3d& home, int per_tier, double d_min,
                      std::uint64_t seed);

// JSON artifacts for the CLI (both embed the parameters that produced them).
void save_region_labels(const RegionLabels& labels, const CapabilityMap& map,
                        const std::string& path);
RegionLabels load_region_labels(const std::string& path, const CapabilityMap& map);
void save_spawn_plan(const SpawnPlan& plan, const std::string& path);
SpawnPlan load_spawn_plan(const std::string& path);

}  // namespace reachmap
