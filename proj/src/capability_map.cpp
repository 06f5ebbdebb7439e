#include "reachmap/capability_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "reachmap/log.hpp"

namespace reachmap {

void GenerationParams::validate() const {
    if (!(arm_step > 0.0) || !(wrist_step > 0.0))
        throw InvalidArgumentError("lattice steps must be positive");
    if (n_dir < 1 || n_dir > 0xffff)
        throw InvalidArgumentError("n_dir must be in [1, 65535]");
    if (ik_pos_tol < 0.0) throw InvalidArgumentError("ik_pos_tol must be >= 0 (0 = auto)");
    if (!(ik_ang_tol > 0.0)) throw InvalidArgumentError("ik_ang_tol must be positive");
    if (ik_max_iterations < 1) throw InvalidArgumentError("ik_max_iterations must be >= 1");
    if (witnesses_per_voxel < 1) throw InvalidArgumentError("witnesses_per_voxel must be >= 1");
    if (seeds_per_bin < 0) throw InvalidArgumentError("seeds_per_bin must be >= 0");
    if (!(voxel_edge > 0.0)) throw InvalidArgumentError("voxel_edge must be positive");
    if (grid_margin < 0.0) throw InvalidArgumentError("grid_margin must be >= 0");
    if (max_lattice_points < 1) throw InvalidArgumentError("max_lattice_points must be >= 1");
}

void CapabilityMap::finalize() {
    grid.validate();
    meta.geom.validate();
    meta.rom.validate();
    meta.params.validate();
    const std::int64_t count = grid.voxel_count();
    std::uint32_t prev = 0;
    bool first = true;
    for (const MapEntry& e : entries) {
        if (!first && e.voxel <= prev)
            throw InvalidArgumentError("map entries must be sorted by voxel index, unique");
        if (static_cast<std::int64_t>(e.voxel) >= count)
            throw InvalidArgumentError("map entry voxel index outside the grid");
        if (e.numerator < 1 || e.numerator > meta.params.n_dir)
            throw InvalidArgumentError("map entry numerator outside [1, n_dir]");
        prev = e.voxel;
        first = false;
    }
    lookup_.assign(static_cast<std::size_t>(count), 0);
    for (const MapEntry& e : entries) lookup_[e.voxel] = e.numerator;
}

std::optional<double> score_at(const CapabilityMap& map, const Eigen::Vector3d& point) {
    const auto idx = map.grid.index_of(point);
    if (!idx) return std::nullopt;
    const std::uint16_t num = map.numerator_at(*idx);
    if (num == 0) return std::nullopt;
    return static_cast<double>(num) / map.meta.params.n_dir;
}

JointAngles JointLattice::config_at(std::int64_t ordinal) const {
    JointAngles q;
    for (int i = kNumJoints - 1; i >= 0; --i) {
        const std::int64_t n = count(i);
        const std::int64_t k = k_min[i] + ordinal % n;
        ordinal /= n;
        q[i] = static_cast<double>(k) * step[i];
    }
    return q;
}

JointLattice make_joint_lattice(const RomLimits& rom, const GenerationParams& params) {
    rom.validate();
    params.validate();
    // The +-1e-9 slack admits interval ends that are exact step multiples but
    // land an ulp off after division. k_min/k_max are monotone in (lo, hi), so
    // nested ROM intervals produce nested k ranges, and because configs are
    // pure functions of k (not of the ROM), nested point SETS, exactly.
    JointLattice lat;
    double estimate = 1.0;
    for (int i = 0; i < kNumJoints; ++i) {
        lat.step[i] = i < 4 ? params.arm_step : params.wrist_step;
        lat.k_min[i] = static_cast<std::int64_t>(std::ceil(rom.lo[i] / lat.step[i] - 1e-9));
        lat.k_max[i] = static_cast<std::int64_t>(std::floor(rom.hi[i] / lat.step[i] + 1e-9));
        if (lat.k_max[i] < lat.k_min[i]) {
            // Interval contains no step multiple: empty lattice.
            lat.total = 0;
            return lat;
        }
        estimate *= static_cast<double>(lat.count(i));
    }
    if (estimate > static_cast<double>(params.max_lattice_points))
        throw LatticeTooLargeError(
            "joint lattice needs about " + std::to_string(static_cast<std::int64_t>(estimate)) +
                " points (cap " + std::to_string(params.max_lattice_points) +
                "); coarsen the lattice step",
            static_cast<std::int64_t>(estimate));
    lat.total = 1;
    for (int i = 0; i < kNumJoints; ++i) lat.total *= lat.count(i);
    return lat;
}

std::vector<Eigen::Vector3d> fibonacci_sphere_directions(int n) {
    if (n < 1) throw InvalidArgumentError("direction count must be >= 1");
    std::vector<Eigen::Vector3d> dirs;
    dirs.reserve(static_cast<std::size_t>(n));
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return dirs;
}

VoxelGrid make_reach_grid(const ArmGeometry& geom, const GenerationParams& params) {
    geom.validate();
    return make_centered_grid(Eigen::Vector3d::Zero(), geom.total_reach() + params.grid_margin,
                              params.voxel_edge);
}

namespace {

// Per-voxel accumulation of the seed pass within one lattice chunk.
struct WitnessAccum {
    std::vector<JointAngles> free_configs;  // collision-free, lattice order
    std::vector<JointAngles> any_configs;   // filled only when collision is off
};

using ChunkMap = std::map<std::uint32_t, WitnessAccum>;

ChunkMap seed_chunk(const JointLattice& lat, std::int64_t begin, std::int64_t end,
                    const ArmGeometry& geom, const CollisionModel& cm, const VoxelGrid& grid,
                    const GenerationParams& params) {
    ChunkMap local;
    const auto w = static_cast<std::size_t>(params.witnesses_per_voxel);
    for (std::int64_t ord = begin; ord < end; ++ord) {
        const JointAngles q = lat.config_at(ord);
        const ArmPoints pts = joint_positions(q, geom);
        const auto idx = grid.index_of(pts.tip);
        if (!idx) continue;
        const bool collides = self_collides(pts, cm);
        if (params.collision_checks) {
            if (collides) continue;
            WitnessAccum& acc = local[*idx];
            if (acc.free_configs.size() < w) acc.free_configs.push_back(q);
        } else {
            WitnessAccum& acc = local[*idx];
            if (!collides && acc.free_configs.size() < w) acc.free_configs.push_back(q);
            if (acc.any_configs.size() < w) acc.any_configs.push_back(q);
        }
    }
    return local;
}

void append_up_to(std::vector<JointAngles>& dst, const std::vector<JointAngles>& src,
                  std::size_t cap) {
    for (const JointAngles& q : src) {
        if (dst.size() >= cap) break;
        dst.push_back(q);
    }
}

}  // namespace

SeedPassResult fk_seed_pass(const ArmGeometry& geom, const RomLimits& rom,
                            const CollisionModel& cm, const VoxelGrid& grid,
                            const GenerationParams& params, int workers) {
    grid.validate();
    cm.validate();
    if (workers < 1) throw InvalidArgumentError("workers must be >= 1");
    const JointLattice lat = make_joint_lattice(rom, params);
    LOG_INFO("seed pass: %lld lattice points, %d workers", static_cast<long long>(lat.total),
             workers);

    const int n_chunks = static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(lat.total, 1)));
    std::vector<ChunkMap> chunks(static_cast<std::size_t>(n_chunks));
    auto run = [&](int c) {
        const std::int64_t begin = lat.total * c / n_chunks;
        const std::int64_t end = lat.total * (c + 1) / n_chunks;
        chunks[static_cast<std::size_t>(c)] = seed_chunk(lat, begin, end, geom, cm, grid, params);
    };
    std::vector<std::thread> pool;
    for (int c = 1; c < n_chunks; ++c) pool.emplace_back(run, c);
    run(0);
    for (std::thread& t : pool) t.join();

    // Deterministic merge: chunks cover ascending contiguous lattice ranges,
    // so appending in chunk order reproduces the serial first-come lists.
    std::map<std::uint32_t, WitnessAccum> merged;
    const auto w = static_cast<std::size_t>(params.witnesses_per_voxel);
    for (const ChunkMap& chunk : chunks) {
        for (const auto& [voxel, acc] : chunk) {
            WitnessAccum& dst = merged[voxel];
            append_up_to(dst.free_configs, acc.free_configs, w);
            append_up_to(dst.any_configs, acc.any_configs, w);
        }
    }

    SeedPassResult result;
    result.voxels.reserve(merged.size());
    for (auto& [voxel, acc] : merged) {
        VoxelWitnesses vw;
        vw.voxel = voxel;
        vw.witnesses = std::move(acc.free_configs);
        vw.fallback = std::move(acc.any_configs);
        result.voxels.push_back(std::move(vw));
    }
    LOG_INFO("seed pass: %zu voxels occupied", result.voxels.size());
    return result;
}

namespace {

std::uint16_t score_voxel(const VoxelWitnesses& vw, const std::vector<Eigen::Vector3d>& dirs,
                          const ArmGeometry& geom, const RomLimits& rom,
                          const CollisionModel* cm, const VoxelGrid& grid,
                          const GenerationParams& params, double pos_tol,
                          const IkParams& ik_params) {
    const std::vector<JointAngles>& seeds =
        !vw.witnesses.empty() ? vw.witnesses : vw.fallback;
    const Eigen::Vector3d center = grid.center_of(vw.voxel);
    std::uint16_t reachable = 0;
    for (std::size_t bin = 0; bin < dirs.size(); ++bin) {
        const Pose target{center, dirs[bin]};
        bool hit = false;
        for (const JointAngles& seed : seeds) {
            if (solve_ik(target, seed, rom, geom, cm, pos_tol, params.ik_ang_tol, ik_params)) {
                hit = true;
                break;
            }
        }
        if (!hit && params.seeds_per_bin > 0) {
            Rng rng(mix_seed(params.rng_seed, vw.voxel, static_cast<std::uint64_t>(bin)));
            for (int s = 0; s < params.seeds_per_bin && !hit; ++s) {
                JointAngles seed;
                for (int j = 0; j < kNumJoints; ++j) seed[j] = rng.uniform(rom.lo[j], rom.hi[j]);
                if (solve_ik(target, seed, rom, geom, cm, pos_tol, params.ik_ang_tol, ik_params))
                    hit = true;
            }
        }
        if (hit) ++reachable;
    }
    return reachable;
}

}  // namespace

CapabilityMap score_pass(const SeedPassResult& seeds, const ArmGeometry& geom,
                         const RomLimits& rom, const CollisionModel& cm, const VoxelGrid& grid,
                         const GenerationParams& params, MapMetadata meta, int workers) {
    grid.validate();
    params.validate();
    if (workers < 1) throw InvalidArgumentError("workers must be >= 1");
    const std::vector<Eigen::Vector3d> dirs = fibonacci_sphere_directions(params.n_dir);
    const double pos_tol = params.effective_pos_tol();
    const CollisionModel* cm_ptr = params.collision_checks ? &cm : nullptr;
    IkParams ik_params;
    ik_params.max_iterations = params.ik_max_iterations;

    const std::size_t n = seeds.voxels.size();
    std::vector<std::uint16_t> numerators(n, 0);
    const int n_chunks = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                                std::max<std::size_t>(n, 1)));
    auto run = [&](int c) {
        const std::size_t begin = n * static_cast<std::size_t>(c) / static_cast<std::size_t>(n_chunks);
        const std::size_t end = n * (static_cast<std::size_t>(c) + 1) / static_cast<std::size_t>(n_chunks);
        for (std::size_t i = begin; i < end; ++i)
            numerators[i] = score_voxel(seeds.voxels[i], dirs, geom, rom, cm_ptr, grid, params,
                                        pos_tol, ik_params);
    };
    std::vector<std::thread> pool;
    for (int c = 1; c < n_chunks; ++c) pool.emplace_back(run, c);
    run(0);
    for (std::thread& t : pool) t.join();

    CapabilityMap map;
    map.grid = grid;
    map.meta = std::move(meta);
    for (std::size_t i = 0; i < n; ++i) {
        if (numerators[i] > 0) map.entries.push_back({seeds.voxels[i].voxel, numerators[i]});
    }
    map.finalize();
    LOG_INFO("score pass: %zu of %zu voxels kept", map.entries.size(), n);
    return map;
}

CapabilityMap generate_capability_map(const ArmGeometry& geom, const RomLimits& rom,
                                      const CollisionModel& cm, const GenerationParams& params,
                                      const std::string& user_id, const std::string& condition,
                                      int workers) {
    const VoxelGrid grid = make_reach_grid(geom, params);
    const SeedPassResult seeds = fk_seed_pass(geom, rom, cm, grid, params, workers);
    MapMetadata meta;
    meta.user_id = user_id;
    meta.condition = condition;
    meta.rom = rom;
    meta.geom = geom;
    meta.collision = cm;
    meta.params = params;
    return score_pass(seeds, geom, rom, cm, grid, params, std::move(meta), workers);
}

}  // namespace reachmap
