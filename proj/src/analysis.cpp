#include "reachmap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>

#include "reachmap/config.hpp"
#include "reachmap/rng.hpp"

namespace reachmap {

using nlohmann::json;

namespace {

constexpr const char* kRegionsMagic = "RMAP-REGIONS";
constexpr const char* kSpawnsMagic = "RMAP-SPAWNS";
constexpr int kVersion = 1;

void check_same_grid(const CapabilityMap& a, const CapabilityMap& b) {
    if (!(a.grid == b.grid))
        throw IncompatibleMapsError("maps were built on different voxel grids");
}

double score_fraction(const CapabilityMap& m, const MapEntry& e) {
    return double(e.numerator) / double(m.meta.params.n_dir);
}

json parse_artifact(const std::string& path, const char* magic, const char* what) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || j.value("magic", "") != magic)
        throw CorruptFileError("'" + path + "' is not a " + std::string(what) + " file");
    if (j.value("version", -1) != kVersion)
        throw VersionMismatchError("'" + path + "' has format version " +
                                   std::to_string(j.value("version", -1)) + ", expected " +
                                   std::to_string(kVersion));
    return j;
}

void write_artifact(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace

const char* tier_name(Tier t) {
    switch (t) {
        case Tier::kEasy: return "easy";
        case Tier::kMedium: return "medium";
        case Tier::kHard: return "hard";
    }
    throw InvalidArgumentError("unknown tier value");
}

Tier tier_from_name(const std::string& name) {
    if (name == "easy") return Tier::kEasy;
    if (name == "medium") return Tier::kMedium;
    if (name == "hard") return Tier::kHard;
    throw InvalidArgumentError("unknown difficulty tier '" + name + "'");
}

double volume_reduction(const CapabilityMap& healthy, const CapabilityMap& other) {
    check_same_grid(healthy, other);
    if (healthy.entries.empty())
        throw UndefinedBaselineError("healthy map has no reachable voxels");
    return 100.0 * (1.0 - double(other.entries.size()) / double(healthy.entries.size()));
}

DexterityResult dexterity_reduction(const CapabilityMap& healthy,
                                    const CapabilityMap& other) {
    check_same_grid(healthy, other);
    double sum_healthy = 0.0, sum_other = 0.0;
    std::int64_t common = 0;
    auto a = healthy.entries.begin();
    auto b = other.entries.begin();
    while (a != healthy.entries.end() && b != other.entries.end()) {
        if (a->voxel < b->voxel) {
            ++a;
        } else if (b->voxel < a->voxel) {
            ++b;
        } else {
            sum_healthy += score_fraction(healthy, *a);
            sum_other += score_fraction(other, *b);
            ++common;
            ++a;
            ++b;
        }
    }
    if (common == 0)
        throw NoCommonRegionError("the maps share no reachable voxel");
    return {100.0 * (1.0 - sum_other / sum_healthy), common};
}

MapComparison compare_maps(const CapabilityMap& healthy, const CapabilityMap& other) {
    MapComparison out;
    out.volume_reduction_pct = volume_reduction(healthy, other);
    const DexterityResult dex = dexterity_reduction(healthy, other);
    out.dexterity_reduction_pct = dex.reduction_pct;
    out.common_voxel_count = dex.common_voxel_count;
    return out;
}

RegionLabels classify_regions(const CapabilityMap& map) {
    const std::size_t n = map.entries.size();
    if (n == 0) throw EmptySelectionError("map has no reachable voxels to classify");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (map.entries[l].numerator != map.entries[r].numerator)
            return map.entries[l].numerator > map.entries[r].numerator;
        return map.entries[l].voxel < map.entries[r].voxel;
    });

    // Tertiles by rank; a remainder of 1 grows easy, of 2 grows easy+medium.
    const std::size_t base = n / 3, rem = n % 3;
    RegionLabels labels;
    labels.tier_counts = {std::int64_t(base + (rem >= 1)), std::int64_t(base + (rem >= 2)),
                          std::int64_t(base)};
    labels.tiers.assign(n, Tier::kHard);
    std::size_t rank = 0;
    for (int t = 0; t < 3; ++t)
        for (std::int64_t i = 0; i < labels.tier_counts[t]; ++i, ++rank)
            labels.tiers[order[rank]] = Tier(t);

    auto tier_min = [&](std::int64_t tier_end) {
        return score_fraction(map, map.entries[order[std::size_t(tier_end) - 1]]);
    };
    labels.easy_min_score = tier_min(labels.tier_counts[0]);
    labels.medium_min_score = labels.tier_counts[1] > 0
                                  ? tier_min(labels.tier_counts[0] + labels.tier_counts[1])
                                  : labels.easy_min_score;
    return labels;
}

SpawnPlan plan_spawns(const CapabilityMap& map, const RegionLabels& labels,
                      const Eigen::Vector3d& home, int per_tier, double d_min,
                      std::uint64_t seed) {
    if (labels.tiers.size() != map.entries.size())
        throw InvalidArgumentError("region labels do not match the map");
    if (per_tier < 1) throw InvalidArgumentError("per-tier count must be >= 1");
    if (!std::isfinite(d_min) || d_min < 0.0)
        throw InvalidArgumentError("minimum spawn distance must be >= 0");
    if (!home.allFinite()) throw InvalidArgumentError("home position must be finite");

    SpawnPlan plan;
    plan.home = home;
    plan.seed = seed;
    plan.per_tier = per_tier;
    plan.d_min = d_min;
    for (int t = 0; t < 3; ++t) {
        std::vector<std::size_t> eligible;
        for (std::size_t i = 0; i < map.entries.size(); ++i) {
            if (labels.tiers[i] != Tier(t)) continue;
            if ((map.grid.center_of(map.entries[i].voxel) - home).norm() >= d_min)
                eligible.push_back(i);
        }
        if (eligible.size() < std::size_t(per_tier))
            throw InsufficientRegionError(std::string("tier '") + tier_name(Tier(t)) +
                                          "' has only " + std::to_string(eligible.size()) +
                                          " eligible voxels (need " +
                                          std::to_string(per_tier) + ")");
        // Partial Fisher-Yates: the first per_tier slots become a uniform
        // without-replacement sample.
        Rng rng(mix_seed(seed, std::uint64_t(t)));
        for (int k = 0; k < per_tier; ++k) {
            const std::size_t pick =
                std::size_t(k) + std::size_t(rng.bounded(std::uint64_t(eligible.size() - k)));
            std::swap(eligible[k], eligible[pick]);
            const MapEntry& e = map.entries[eligible[k]];
            plan.spawns.push_back({map.grid.center_of(e.voxel), Tier(t), e.voxel});
        }
    }
    return plan;
}

void save_region_labels(const RegionLabels& labels, const CapabilityMap& map,
                        const std::string& path) {
    if (labels.tiers.size() != map.entries.size())
        throw InvalidArgumentError("region labels do not match the map");
    json j;
    j["magic"] = kRegionsMagic;
    j["version"] = kVersion;
    j["grid"] = map.grid;
    j["easy_min_score"] = labels.easy_min_score;
    j["medium_min_score"] = labels.medium_min_score;
    j["tier_counts"] = labels.tier_counts;
    json voxels = json::array(), tiers = json::array();
    for (std::size_t i = 0; i < map.entries.size(); ++i) {
        voxels.push_back(map.entries[i].voxel);
        tiers.push_back(int(labels.tiers[i]));
    }
    j["voxels"] = std::move(voxels);
    j["tiers"] = std::move(tiers);
    write_artifact(j, path);
}

RegionLabels load_region_labels(const std::string& path, const CapabilityMap& map) {
    const json j = parse_artifact(path, kRegionsMagic, "region labels");
    RegionLabels labels;
    std::vector<std::uint32_t> voxels;
    std::vector<int> tiers;
    VoxelGrid grid;
    try {
        j.at("grid").get_to(grid);
        j.at("easy_min_score").get_to(labels.easy_min_score);
        j.at("medium_min_score").get_to(labels.medium_min_score);
        j.at("tier_counts").get_to(labels.tier_counts);
        j.at("voxels").get_to(voxels);
        j.at("tiers").get_to(tiers);
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is incomplete: " + e.what());
    }
    if (!(grid == map.grid) || voxels.size() != map.entries.size() ||
        tiers.size() != voxels.size())
        throw IncompatibleMapsError("'" + path + "' labels a different map");
    labels.tiers.reserve(tiers.size());
    for (std::size_t i = 0; i < voxels.size(); ++i) {
        if (voxels[i] != map.entries[i].voxel)
            throw IncompatibleMapsError("'" + path + "' labels a different map");
        if (tiers[i] < 0 || tiers[i] > 2)
            throw CorruptFileError("'" + path + "' holds an invalid tier value");
        labels.tiers.push_back(Tier(tiers[i]));
    }
    return labels;
}

void save_spawn_plan(const SpawnPlan& plan, const std::string& path) {
    json j;
    j["magic"] = kSpawnsMagic;
    j["version"] = kVersion;
    j["home"] = {plan.home.x(), plan.home.y(), plan.home.z()};
    j["seed"] = plan.seed;
    j["per_tier"] = plan.per_tier;
    j["d_min"] = plan.d_min;
    json spawns = json::array();
    for (const Spawn& s : plan.spawns)
        spawns.push_back({{"position", {s.position.x(), s.position.y(), s.position.z()}},
                          {"difficulty", tier_name(s.difficulty)},
                          {"voxel", s.voxel}});
    j["spawns"] = std::move(spawns);
    write_artifact(j, path);
}

SpawnPlan load_spawn_plan(const std::string& path) {
    const json j = parse_artifact(path, kSpawnsMagic, "spawn plan");
    SpawnPlan plan;
    try {
        const auto& home = j.at("home");
        plan.home = Eigen::Vector3d(home.at(0).get<double>(), home.at(1).get<double>(),
                                    home.at(2).get<double>());
        j.at("seed").get_to(plan.seed);
        j.at("per_tier").get_to(plan.per_tier);
        j.at("d_min").get_to(plan.d_min);
        for (const auto& s : j.at("spawns")) {
            Spawn spawn;
            const auto& p = s.at("position");
            spawn.position = Eigen::Vector3d(p.at(0).get<double>(), p.at(1).get<double>(),
                                             p.at(2).get<double>());
            spawn.difficulty = tier_from_name(s.at("difficulty").get<std::string>());
            spawn.voxel = s.at("voxel").get<std::uint32_t>();
            plan.spawns.push_back(spawn);
        }
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is incomplete: " + e.what());
    }
    return plan;
}

}  // namespace reachmap
