// Acceptance gate: exercises the ten release criteria end to end and prints
// one PASS/FAIL line per criterion. Exits 0 only when every criterion holds.
//
// Usage: acceptance <reachmap-cli> <configs-dir>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "reachmap/analysis.hpp"
#include "reachmap/arm_model.hpp"
#include "reachmap/capability_map.hpp"
#include "reachmap/collision.hpp"
#include "reachmap/config.hpp"
#include "reachmap/errors.hpp"
#include "reachmap/hull.hpp"
#include "reachmap/map_io.hpp"
#include "reachmap/report.hpp"
#include "reachmap/rng.hpp"
#include "reachmap/rom_capture.hpp"
#include "reachmap/session.hpp"
#include "reachmap/types.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace reachmap;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr ArmGeometry kGeom{0.30, 0.25, 0.18};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

JointAngles random_config(const RomLimits& rom, std::mt19937_64& gen) {
    JointAngles q;
    for (int i = 0; i < kNumJoints; ++i) {
        std::uniform_real_distribution<double> d(rom.lo[i], rom.hi[i]);
        q[i] = d(gen);
    }
    return q;
}

std::string fmt(const char* pattern, double value) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::set<std::uint32_t> occupancy(const SeedPassResult& r) {
    std::set<std::uint32_t> s;
    for (const VoxelWitnesses& v : r.voxels) s.insert(v.voxel);
    return s;
}

// Occupancy-only map (every occupied voxel scores 1.0) on a shared grid, so
// volume_reduction can compare fk_seed_pass results directly.
CapabilityMap occupancy_map(const SeedPassResult& r, const VoxelGrid& grid,
                            const std::string& condition) {
    std::vector<MapEntry> entries;
    for (const VoxelWitnesses& v : r.voxels) entries.push_back({v.voxel, 1});
    return fixtures::make_test_map(grid, entries, 1, condition, "acc");
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// Shell runner for the CLI under test; stdout/stderr land in cli.log so a
// failing step can be diagnosed from the work directory.
struct Cli {
    std::string bin;
    fs::path dir;

    int run(const std::string& args) const {
        const std::string cmd = "\"" + bin + "\" " + args + " >>\"" +
                                (dir / "cli.log").string() + "\" 2>&1";
        const int status = std::system(cmd.c_str());
        if (status == -1) return -1;
        return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
    }
};

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// ---------------------------------------------------------------------------
// Criterion bodies. Each returns "" on success or a failure reason.
// ---------------------------------------------------------------------------

std::string criterion_fk_oracle() {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(20260815);
    const RomLimits rom = nominal_rom();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const JointAngles qv = random_config(rom, gen);
        const oracles::FkOracle expect = oracles::fk_oracle(qv, kGeom);
        const Pose pose = forward_kinematics(qv, kGeom);
        worst = std::max(worst, (pose.position - expect.tip).norm());
    }
    if (worst > 1e-9) return fmt("worst FK position error %.3e m exceeds 1e-9", worst);
    const double dt = seconds_since(t0);
    if (dt >= 1.0) return fmt("took %.2f s, budget 1 s", dt);
    return "";
}

std::string criterion_ik_round_trip() {
    const auto t0 = Clock::now();
    const RomLimits rom = nominal_rom();
    std::mt19937_64 gen(31);
    Rng rng(77);
    const double pos_tol = 0.005;
    const double ang_tol = deg_to_rad(15.0);
    int solved = 0;
    int reverified = 0;
    for (int i = 0; i < 200; ++i) {
        const Pose target = forward_kinematics(random_config(rom, gen), kGeom);
        const auto sol = solve_ik_multistart(target, {rom.midpoint()}, 100, rng, rom, kGeom,
                                             nullptr, pos_tol, ang_tol);
        if (!sol) continue;
        ++solved;
        const Pose back = forward_kinematics(*sol, kGeom);
        if ((back.position - target.position).norm() <= pos_tol &&
            angle_between(back.pointing_axis, target.pointing_axis) <= ang_tol &&
            within_limits(*sol, rom))
            ++reverified;
    }
    if (solved < 198) return fmt("solved %.0f of 200 targets, need >= 198", double(solved));
    if (reverified != solved)
        return fmt("%.0f solutions failed FK re-verification", double(solved - reverified));
    const double dt = seconds_since(t0);
    if (dt >= 30.0) return fmt("took %.2f s, budget 30 s", dt);
    return "";
}

std::string criterion_voxel_nesting() {
    const auto t0 = Clock::now();
    GenerationParams p;
    p.arm_step = deg_to_rad(30.0);
    p.wrist_step = deg_to_rad(30.0);
    p.voxel_edge = 0.10;
    p.grid_margin = 0.05;
    p.witnesses_per_voxel = 2;
    const VoxelGrid grid = make_reach_grid(kGeom, p);
    const CollisionModel cm = CollisionModel::default_model();

    const std::array<std::pair<std::string, RomLimits>, 3> roms = {{
        {"unrestricted", nominal_rom()},
        {"partially_restricted", fixtures::partially_restricted_rom()},
        {"restricted", fixtures::restricted_rom()},
    }};
    std::array<SeedPassResult, 3> passes;
    std::array<std::set<std::uint32_t>, 3> sets;
    for (int i = 0; i < 3; ++i) {
        passes[i] = fk_seed_pass(kGeom, roms[i].second, cm, grid, p, 2);
        sets[i] = occupancy(passes[i]);
        if (sets[i].empty()) return "fk_seed_pass produced an empty map for " + roms[i].first;
    }
    if (!std::includes(sets[1].begin(), sets[1].end(), sets[2].begin(), sets[2].end()))
        return "restricted occupancy escapes the partially-restricted set";
    if (!std::includes(sets[0].begin(), sets[0].end(), sets[1].begin(), sets[1].end()))
        return "partially-restricted occupancy escapes the unrestricted set";

    const CapabilityMap nominal = occupancy_map(passes[0], grid, roms[0].first);
    const double vr_partial = volume_reduction(nominal, occupancy_map(passes[1], grid, roms[1].first));
    const double vr_restricted =
        volume_reduction(nominal, occupancy_map(passes[2], grid, roms[2].first));
    if (!(vr_partial >= 0.0)) return fmt("volume reduction for the partial ROM is %.3f%%", vr_partial);
    if (!(vr_restricted >= vr_partial))
        return fmt("restriction ordering violated: restricted %.3f%%", vr_restricted) +
               fmt(" < partial %.3f%%", vr_partial);
    const double dt = seconds_since(t0);
    if (dt >= 60.0) return fmt("took %.2f s, budget 60 s", dt);
    return "";
}

std::string criterion_dexterity_arithmetic() {
    VoxelGrid grid;
    grid.origin = Eigen::Vector3d::Zero();
    grid.voxel_edge = 0.05;
    grid.dims = {10, 5, 4};  // 200 voxels

    // Healthy scores sum to exactly 200; the other map keeps all 200 voxels
    // occupied but drops 46 of them to score 0.5, summing to exactly 177.
    std::vector<MapEntry> healthy_entries;
    std::vector<MapEntry> other_entries;
    for (std::uint32_t v = 0; v < 200; ++v) {
        healthy_entries.push_back({v, 4});
        other_entries.push_back({v, std::uint16_t(v < 154 ? 4 : 2)});
    }
    const CapabilityMap healthy =
        fixtures::make_test_map(grid, healthy_entries, 4, "unrestricted", "acc");
    const CapabilityMap other =
        fixtures::make_test_map(grid, other_entries, 4, "restricted", "acc");

    const DexterityResult d = dexterity_reduction(healthy, other);
    if (std::abs(d.reduction_pct - 11.50) > 0.005)
        return fmt("200-vs-177 dexterity reduction is %.6f%%, want 11.50 +/- 0.005",
                   d.reduction_pct);
    if (format_fixed2(d.reduction_pct) != "11.50")
        return "reduction does not format as the expected table cell '11.50'";
    const DexterityResult self = dexterity_reduction(healthy, healthy);
    if (self.reduction_pct != 0.0)
        return fmt("identical maps report %.3e%% instead of exactly 0", self.reduction_pct);
    return "";
}

std::string criterion_determinism(const Cli& cli) {
    const fs::path cfg = fs::path(cli.dir) / "demo.json";
    const fs::path w1 = cli.dir / "det_w1.rmap";
    const fs::path w4 = cli.dir / "det_w4.rmap";
    if (cli.run("build-map --config " + q(cfg) + " --workers 1 --out " + q(w1)) != 0)
        return "build-map with 1 worker failed (see cli.log)";
    if (cli.run("build-map --config " + q(cfg) + " --workers 4 --out " + q(w4)) != 0)
        return "build-map with 4 workers failed (see cli.log)";
    const std::string b1 = slurp(w1);
    if (b1.empty()) return "1-worker map file is empty";
    if (b1 != slurp(w4)) return "1-worker and 4-worker map files differ byte for byte";

    const std::array<RomLimits, 3> roms = {nominal_rom(), fixtures::partially_restricted_rom(),
                                           fixtures::restricted_rom()};
    for (int i = 0; i < 10; ++i) {
        GenerationParams p;
        p.arm_step = deg_to_rad(60.0);
        p.wrist_step = deg_to_rad(120.0);
        p.n_dir = std::uint16_t(3 + i);
        p.voxel_edge = 0.12 + 0.01 * i;
        p.witnesses_per_voxel = 2;
        p.seeds_per_bin = 1;
        p.ik_max_iterations = 40;
        p.rng_seed = 1000 + std::uint64_t(i);
        p.collision_checks = (i % 2 == 0);
        const CapabilityMap m =
            generate_capability_map(kGeom, roms[std::size_t(i) % 3], CollisionModel::default_model(),
                                    p, "acc", "unrestricted", 1 + i % 3);
        const fs::path path = cli.dir / ("det_" + std::to_string(i) + ".rmap");
        save_map(m, path.string());
        if (!(load_map(path.string()) == m))
            return "map " + std::to_string(i) + " does not survive save/load bit-exactly";
    }
    return "";
}

std::string criterion_hull_correctness() {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(2718);
    VoxelGrid grid;
    grid.origin = Eigen::Vector3d::Zero();
    grid.voxel_edge = 1.0;  // voxel corners are exact integer lattice points
    grid.dims = {6, 6, 6};

    std::vector<std::uint32_t> all(std::size_t(grid.voxel_count()));
    for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;

    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t count = 1 + gen() % 200;
        std::shuffle(all.begin(), all.end(), gen);
        std::vector<std::uint32_t> chosen(all.begin(), all.begin() + long(count));
        std::sort(chosen.begin(), chosen.end());

        std::vector<MapEntry> entries;
        std::vector<oracles::Pt> corners;
        for (const std::uint32_t v : chosen) {
            entries.push_back({v, 1});
            const auto c = grid.coords_of(v);
            for (int dx = 0; dx <= 1; ++dx)
                for (int dy = 0; dy <= 1; ++dy)
                    for (int dz = 0; dz <= 1; ++dz)
                        corners.push_back({c[0] + dx, c[1] + dy, c[2] + dz});
        }
        const CapabilityMap map = fixtures::make_test_map(grid, entries, 1, "unrestricted", "acc");
        const Mesh mesh = extract_hull(map, 0.5, 1.0);

        // Exact certificate: containment, watertightness, orientation, and
        // vertex minimality, all in integer arithmetic.
        const std::string err = oracles::check_hull_certificate(mesh, corners);
        if (!err.empty()) return "trial " + std::to_string(trial) + ": " + err;

        // Float containment as stated: signed distance of every selected
        // corner to every face plane is at most 1e-9.
        for (const auto& tri : mesh.triangles) {
            const Eigen::Vector3d a = mesh.vertices[std::size_t(tri[0])];
            const Eigen::Vector3d n = (mesh.vertices[std::size_t(tri[1])] - a)
                                          .cross(mesh.vertices[std::size_t(tri[2])] - a)
                                          .normalized();
            for (const oracles::Pt& c : corners) {
                const Eigen::Vector3d p(static_cast<double>(c[0]), static_cast<double>(c[1]),
                                        static_cast<double>(c[2]));
                if (n.dot(p - a) > 1e-9)
                    return "trial " + std::to_string(trial) +
                           fmt(": corner lies %.3e outside a hull face", n.dot(p - a));
            }
        }

        // Brute-force vertex set from supporting-plane enumeration.
        const std::vector<oracles::Pt> brute = oracles::brute_hull_vertices(corners);
        std::vector<oracles::Pt> got;
        for (const Eigen::Vector3d& v : mesh.vertices)
            got.push_back({std::llround(v.x()), std::llround(v.y()), std::llround(v.z())});
        std::sort(got.begin(), got.end());
        if (got != brute)
            return "trial " + std::to_string(trial) + ": mesh vertex set (" +
                   std::to_string(got.size()) + ") differs from brute force (" +
                   std::to_string(brute.size()) + ")";
    }
    const double dt = seconds_since(t0);
    if (dt >= 10.0) return fmt("took %.2f s, budget 10 s", dt);
    return "";
}

std::string criterion_rom_extraction() {
    // Noisy sweeps: recovered limits stay within 1 deg (q1, q2, q4) / 2 deg
    // (q3) of the programmed percentiles.
    fixtures::RecordingSpec noisy;
    noisy.noise_sd = 0.0015;
    noisy.noise_seed = 5;
    const fixtures::BuiltRecording built = fixtures::build_recording(noisy);
    const RomLimits got = extract_rom(built.rec, nominal_rom());
    const double tol[4] = {deg_to_rad(1.0), deg_to_rad(1.0), deg_to_rad(2.0), deg_to_rad(1.0)};
    for (int i = 0; i < 4; ++i) {
        const double lo = oracles::percentile_oracle(built.angles[std::size_t(i)], 2.0);
        const double hi = oracles::percentile_oracle(built.angles[std::size_t(i)], 98.0);
        if (std::abs(got.lo[i] - lo) > tol[i] || std::abs(got.hi[i] - hi) > tol[i])
            return "q" + std::to_string(i + 1) +
                   fmt(" recovered limits off by up to %.2f deg",
                       rad_to_deg(std::max(std::abs(got.lo[i] - lo), std::abs(got.hi[i] - hi))));
    }

    // 2% outlier fixture: spike frames at 170 deg must not drag the
    // extracted maximum to the spike.
    fixtures::RecordingSpec spiked;
    spiked.abduction = {-30.0, 110.0, 200, 4, 170.0};
    const RomLimits clipped = extract_rom(fixtures::build_recording(spiked).rec, nominal_rom());
    const double gap = deg_to_rad(170.0) - clipped.hi[0];
    if (gap < deg_to_rad(40.0))
        return fmt("extracted q1 max sits %.1f deg from the spike, need >= 40", rad_to_deg(gap));
    return "";
}

std::string criterion_speed_analytics() {
    // Hand-built (unrestricted, easy) cell: speeds 0.60 and 0.72 m/s.
    SessionLog log;
    log.user_id = "t1";
    log.condition = Condition::kUnrestricted;
    log.home = Eigen::Vector3d::Zero();
    log.events.push_back({{0.60, 0.0, 0.0}, Tier::kEasy, 0.0, 1.0});
    log.events.push_back({{0.72, 0.0, 0.0}, Tier::kEasy, 2.0, 3.0});
    const SpeedReport rep = session_report({log});
    if (rep.users.size() != 1 || !rep.invalid_events.empty())
        return "hand-built session did not aggregate cleanly";
    const SpeedCell cell = rep.users[0].cells[0][0];
    if (cell.count != 2) return fmt("cell holds %.0f events, want 2", double(cell.count));
    if (std::abs(cell.mean - 0.66) > 1e-9)
        return fmt("cell mean %.12f differs from 0.66 by more than 1e-9", cell.mean);
    if (format_fixed2(cell.mean) != "0.66") return "cell does not format as '0.66'";

    // Simulated sessions over three nested-ROM maps: one user, three
    // conditions; means must be monotone non-increasing across difficulty
    // and across restriction.
    GenerationParams p;
    p.arm_step = deg_to_rad(45.0);
    p.wrist_step = deg_to_rad(90.0);
    p.n_dir = 8;
    p.voxel_edge = 0.12;
    p.witnesses_per_voxel = 2;
    p.seeds_per_bin = 1;
    p.ik_max_iterations = 40;
    p.rng_seed = 5;
    const std::array<std::pair<std::string, RomLimits>, 3> roms = {{
        {"unrestricted", nominal_rom()},
        {"partially_restricted", fixtures::partially_restricted_rom()},
        {"restricted", fixtures::restricted_rom()},
    }};
    const double base_speed[3] = {0.9, 0.6, 0.3};
    std::vector<SessionLog> logs;
    for (int i = 0; i < 3; ++i) {
        const CapabilityMap map =
            generate_capability_map(kGeom, roms[std::size_t(i)].second,
                                    CollisionModel::default_model(), p, "sim",
                                    roms[std::size_t(i)].first, 2);
        const RegionLabels labels = classify_regions(map);
        const UserModel user{base_speed[i], 0.2, 0.0};
        logs.push_back(simulate_session(map, labels, Eigen::Vector3d(0.05, 0.35, -0.15), user, 3,
                                        0.0, 9));
    }
    const SpeedReport sim = session_report(logs);
    if (sim.users.size() != 1 || !sim.invalid_events.empty())
        return "simulated sessions did not aggregate into one user table";
    double mean[3][3];
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
            const SpeedCell& cellcd = sim.users[0].cells[c][d];
            if (cellcd.count != 3)
                return fmt("simulated cell holds %.0f events, want 3", double(cellcd.count));
            mean[c][d] = cellcd.mean;
        }
    for (int c = 0; c < 3; ++c)
        if (!(mean[c][0] >= mean[c][1] && mean[c][1] >= mean[c][2]))
            return "speed is not monotone across difficulty for " + roms[std::size_t(c)].first;
    for (int d = 0; d < 3; ++d)
        if (!(mean[0][d] >= mean[1][d] && mean[1][d] >= mean[2][d]))
            return "speed is not monotone across restriction for tier " +
                   std::string(tier_name(Tier(d)));
    return "";
}

std::string criterion_collision_filter() {
    GenerationParams p;
    p.arm_step = deg_to_rad(45.0);
    p.wrist_step = deg_to_rad(90.0);
    p.n_dir = 6;
    p.voxel_edge = 0.12;
    p.witnesses_per_voxel = 2;
    p.seeds_per_bin = 1;
    p.ik_max_iterations = 40;
    p.rng_seed = 3;
    const CollisionModel cm = CollisionModel::default_model();

    GenerationParams off = p;
    off.collision_checks = false;
    const CapabilityMap with_checks =
        generate_capability_map(kGeom, nominal_rom(), cm, p, "acc", "unrestricted", 2);
    const CapabilityMap without_checks =
        generate_capability_map(kGeom, nominal_rom(), cm, off, "acc", "unrestricted", 2);

    if (without_checks.entries.size() < with_checks.entries.size())
        return "disabling collision checks removed occupied voxels";
    std::map<std::uint32_t, std::uint16_t> unfiltered;
    for (const MapEntry& e : without_checks.entries) unfiltered[e.voxel] = e.numerator;
    for (const MapEntry& e : with_checks.entries) {
        const auto it = unfiltered.find(e.voxel);
        if (it == unfiltered.end())
            return "voxel " + std::to_string(e.voxel) + " vanished without collision checks";
        if (it->second < e.numerator)
            return "voxel " + std::to_string(e.voxel) + " scored lower without collision checks";
    }
    return "";
}

std::string criterion_cli_pipeline(const Cli& cli, const fs::path& configs) {
    const auto t0 = Clock::now();
    const fs::path rom_json = cli.dir / "e2e_rom.json";
    const fs::path healthy = cli.dir / "e2e_healthy.rmap";
    const fs::path partial = cli.dir / "e2e_partial.rmap";
    const fs::path restricted = cli.dir / "e2e_restricted.rmap";
    const fs::path compare_csv = cli.dir / "e2e_compare.csv";
    const fs::path full_obj = cli.dir / "e2e_full.obj";
    const fs::path band_obj = cli.dir / "e2e_band.obj";
    const fs::path regions_json = cli.dir / "e2e_regions.json";
    const fs::path plan_json = cli.dir / "e2e_plan.json";
    const fs::path session_json = cli.dir / "e2e_session.json";
    const fs::path report_csv = cli.dir / "e2e_report.csv";

    const std::vector<std::string> steps = {
        "rom " + q(configs / "sample_recording.jsonl") + " --out " + q(rom_json),
        "build-map --config " + q(configs / "demo.json") + " --out " + q(healthy),
        "build-map --config " + q(configs / "demo_partially_restricted.json") + " --out " +
            q(partial),
        "build-map --config " + q(configs / "demo_restricted.json") + " --out " + q(restricted),
        "compare " + q(healthy) + " " + q(partial) + " " + q(restricted) + " --out " +
            q(compare_csv),
        "hull " + q(healthy) + " --band 0.0,1.0 --out " + q(full_obj),
        "hull " + q(healthy) + " --band 0.5,1.0 --out " + q(band_obj),
        "regions " + q(healthy) + " --out " + q(regions_json),
        "plan " + q(healthy) + " " + q(regions_json) + " --config " + q(configs / "demo.json") +
            " --per-tier 10 --out " + q(plan_json),
        "simulate " + q(healthy) + " " + q(regions_json) + " --config " +
            q(configs / "demo.json") + " --per-tier 10 --out " + q(session_json),
        "report " + q(session_json) + " --out " + q(report_csv),
    };
    for (const std::string& step : steps) {
        if (cli.run(step) != 0)
            return "step `" + step.substr(0, step.find(' ')) + "` exited nonzero (see cli.log)";
    }

    // Every artifact must load back through the library.
    const RomLimits rom = load_rom_file(rom_json.string());
    if (!(rom.hi[0] > rom.lo[0])) return "extracted ROM file is degenerate";
    const CapabilityMap m = load_map(healthy.string());
    if (m.entries.empty()) return "demo map has no occupied voxels";
    const RegionLabels labels = load_region_labels(regions_json.string(), m);
    if (labels.tiers.size() != m.entries.size()) return "region labels do not cover the map";
    const SpawnPlan plan = load_spawn_plan(plan_json.string());
    if (plan.per_tier != 10 || plan.spawns.size() != 30)
        return "spawn plan does not hold 10 balloons per tier";
    const SessionLog session = load_session_log(session_json.string());
    if (session.events.size() != 30) return "simulated session does not hold 30 events";

    for (const fs::path& obj : {full_obj, band_obj}) {
        const std::string text = slurp(obj);
        std::istringstream lines(text);
        std::string line;
        int vertices = 0;
        int faces = 0;
        while (std::getline(lines, line)) {
            if (line.rfind("v ", 0) == 0) ++vertices;
            if (line.rfind("f ", 0) == 0) ++faces;
        }
        if (vertices < 4 || faces < 4)
            return obj.filename().string() + " is not a usable hull mesh";
    }

    const std::string csv = slurp(compare_csv);
    if (csv.rfind("user,condition,", 0) != 0) return "comparison CSV lacks its header";
    if (std::count(csv.begin(), csv.end(), '\n') < 3)
        return "comparison CSV lacks one row per condition";
    const std::string speeds = slurp(report_csv);
    if (speeds.rfind("user,", 0) != 0) return "speed report CSV lacks its header";
    if (speeds.find("demo") == std::string::npos)
        return "speed report CSV does not mention the demo user";

    const double dt = seconds_since(t0);
    if (dt >= 300.0) return fmt("took %.1f s, budget 300 s", dt);
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: acceptance <reachmap-cli> <configs-dir>\n");
        return 2;
    }
    const std::string cli_bin = argv[1];
    const fs::path configs = argv[2];
    const fs::path work = fs::temp_directory_path() / "reachmap_acceptance";
    std::error_code ec;
    fs::remove_all(work, ec);
    fs::create_directories(work);
    fs::copy_file(configs / "demo.json", work / "demo.json",
                  fs::copy_options::overwrite_existing);
    const Cli cli{cli_bin, work};

    int failures = 0;
    const auto check = [&](int n, const std::function<std::string()>& body) {
        const auto t0 = Clock::now();
        std::string why;
        try {
            why = body();
        } catch (const std::exception& e) {
            why = std::string("unexpected exception: ") + e.what();
        }
        if (why.empty()) {
            std::printf("criterion %d: PASS (%.2f s)\n", n, seconds_since(t0));
        } else {
            std::printf("criterion %d: FAIL (%s)\n", n, why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    };

    check(1, criterion_fk_oracle);
    check(2, criterion_ik_round_trip);
    check(3, criterion_voxel_nesting);
    check(4, criterion_dexterity_arithmetic);
    check(5, [&] { return criterion_determinism(cli); });
    check(6, criterion_hull_correctness);
    check(7, criterion_rom_extraction);
    check(8, criterion_speed_analytics);
    check(9, criterion_collision_filter);
    check(10, [&] { return criterion_cli_pipeline(cli, configs); });

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria hold\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
