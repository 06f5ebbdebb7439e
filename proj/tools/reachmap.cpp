// reachmap: capability-map pipeline for a 7-DoF right-arm model.
//
// Subcommands cover the offline stages (rom, build-map, compare, hull,
// regions, plan) and the synthetic online side (simulate, report). Every
// artifact embeds the parameters and seed that produced it. Exit codes:
// 0 success, 1 domain error ("error: <class>: <message>" on stderr),
// 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "reachmap/analysis.hpp"
#include "reachmap/config.hpp"
#include "reachmap/hull.hpp"
#include "reachmap/log.hpp"
#include "reachmap/map_io.hpp"
#include "reachmap/report.hpp"
#include "reachmap/rom_capture.hpp"
#include "reachmap/session.hpp"

namespace {

using namespace reachmap;

RunConfig load_config(const std::string& path) {
    if (!path.empty()) return load_run_config(path);
    RunConfig cfg;
    cfg.rom = nominal_rom();
    return cfg;
}

std::pair<double, double> parse_band(const std::string& text) {
    double lo = 0.0, hi = 0.0;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &lo, &hi, &trailing) != 2)
        throw InvalidArgumentError("band must be '<lo>,<hi>', got '" + text + "'");
    return {lo, hi};
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

struct CommonOpts {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> per_tier;
    std::optional<double> d_min;
};

void add_config_option(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config, "Run configuration JSON (flags win)")
        ->check(CLI::ExistingFile);
}

void run_rom(const std::string& recording_path, const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts.config);
    const SkeletonRecording rec = load_recording(recording_path);
    RomExtractionStats stats;
    const RomLimits rom = extract_rom(rec, cfg.rom, &stats);

    const std::string out = opts.out.empty() ? "rom.json" : opts.out;
    save_rom_file(rom, "measured from '" + recording_path + "'", out);
    for (int q = 0; q < kNumJoints; ++q)
        std::printf("q%d: [%.2f, %.2f] deg%s\n", q + 1, rad_to_deg(rom.lo[q]),
                    rad_to_deg(rom.hi[q]), q >= 4 ? " (nominal)" : "");
    for (int e = 0; e < 4; ++e)
        std::printf("%s: %d frames used, %d skipped\n",
                    exercise_name(Exercise(e + 1)), stats.valid_frames[e],
                    stats.skipped_frames[e]);
    std::printf("wrote %s\n", out.c_str());
}

void run_build_map(const CommonOpts& opts, std::optional<int> workers,
                   std::optional<double> voxel_edge, std::optional<double> step_deg,
                   std::optional<int> ndir) {
    RunConfig cfg = load_config(opts.config);
    if (opts.seed) cfg.generation.rng_seed = *opts.seed;
    if (workers) cfg.workers = *workers;
    if (voxel_edge) cfg.generation.voxel_edge = *voxel_edge;
    if (step_deg) {
        cfg.generation.arm_step = deg_to_rad(*step_deg);
        cfg.generation.wrist_step = deg_to_rad(2.0 * *step_deg);
    }
    if (ndir) cfg.generation.n_dir = *ndir;
    if (cfg.workers < 1) throw InvalidArgumentError("workers must be >= 1");

    const CapabilityMap map =
        generate_capability_map(cfg.geometry, cfg.rom, cfg.collision, cfg.generation,
                                cfg.user_id, cfg.condition, cfg.workers);
    const std::string out = opts.out.empty() ? "capability.map" : opts.out;
    save_map(map, out);
    std::printf("wrote %s: %zu occupied voxels on a %dx%dx%d grid (seed %llu)\n",
                out.c_str(), map.entries.size(), map.grid.dims[0], map.grid.dims[1],
                map.grid.dims[2],
                static_cast<unsigned long long>(cfg.generation.rng_seed));
}

void run_compare(const std::string& healthy_path, const std::vector<std::string>& others,
                 const CommonOpts& opts) {
    const CapabilityMap healthy = load_map(healthy_path);
    std::vector<ComparisonRow> rows;
    for (const std::string& path : others) {
        const CapabilityMap other = load_map(path);
        rows.push_back({other.meta.user_id, other.meta.condition,
                        compare_maps(healthy, other)});
    }
    std::fputs(comparison_markdown(rows).c_str(), stdout);
    if (!opts.out.empty()) {
        write_text(comparison_csv(rows), opts.out);
        std::printf("wrote %s\n", opts.out.c_str());
    }
}

void run_hull(const std::string& map_path, const std::string& band_text,
              const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts.config);
    double lo = cfg.band_lo, hi = cfg.band_hi;
    if (!band_text.empty()) std::tie(lo, hi) = parse_band(band_text);
    const CapabilityMap map = load_map(map_path);
    const Mesh mesh = extract_hull(map, lo, hi);
    const std::string out = opts.out.empty() ? "hull.obj" : opts.out;
    write_obj(mesh, out);
    std::printf("wrote %s: %zu vertices, %zu triangles for band [%g, %g]\n", out.c_str(),
                mesh.vertices.size(), mesh.triangles.size(), lo, hi);
}

void run_regions(const std::string& map_path, const CommonOpts& opts) {
    const CapabilityMap map = load_map(map_path);
    const RegionLabels labels = classify_regions(map);
    const std::string out = opts.out.empty() ? "regions.json" : opts.out;
    save_region_labels(labels, map, out);
    std::printf("wrote %s: easy %lld (score >= %.4f), medium %lld (>= %.4f), hard %lld\n",
                out.c_str(), static_cast<long long>(labels.tier_counts[0]),
                labels.easy_min_score, static_cast<long long>(labels.tier_counts[1]),
                labels.medium_min_score, static_cast<long long>(labels.tier_counts[2]));
}

void run_plan(const std::string& map_path, const std::string& labels_path,
              const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts.config);
    const CapabilityMap map = load_map(map_path);
    const RegionLabels labels = load_region_labels(labels_path, map);
    const SpawnPlan plan = plan_spawns(map, labels, cfg.home,
                                       opts.per_tier.value_or(cfg.per_tier),
                                       opts.d_min.value_or(cfg.d_min),
                                       opts.seed.value_or(cfg.generation.rng_seed));
    const std::string out = opts.out.empty() ? "plan.json" : opts.out;
    save_spawn_plan(plan, out);
    std::printf("wrote %s: %zu spawns (%d per tier, d_min %.3f m, seed %llu)\n",
                out.c_str(), plan.spawns.size(), plan.per_tier, plan.d_min,
                static_cast<unsigned long long>(plan.seed));
}

void run_simulate(const std::string& map_path, const std::string& labels_path,
                  const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts.config);
    const CapabilityMap map = load_map(map_path);
    const RegionLabels labels = load_region_labels(labels_path, map);
    const SessionLog log = simulate_session(map, labels, cfg.home, cfg.user_model,
                                            opts.per_tier.value_or(cfg.per_tier),
                                            opts.d_min.value_or(cfg.d_min),
                                            opts.seed.value_or(cfg.generation.rng_seed));
    const std::string out = opts.out.empty() ? "session.json" : opts.out;
    save_session_log(log, out);
    std::printf("wrote %s: %zu events for user '%s' (%s)\n", out.c_str(),
                log.events.size(), log.user_id.c_str(), condition_name(log.condition));
}

void run_report(const std::vector<std::string>& log_paths, const CommonOpts& opts) {
    std::vector<SessionLog> logs;
    for (const std::string& path : log_paths) logs.push_back(load_session_log(path));
    const SpeedReport report = session_report(logs);
    std::fputs(speed_report_markdown(report).c_str(), stdout);
    if (!opts.out.empty()) {
        write_text(speed_report_csv(report), opts.out);
        std::printf("wrote %s\n", opts.out.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    init_log_level_from_env();

    CLI::App app{"Capability maps, difficulty regions, and session analytics for a "
                 "7-DoF right-arm model"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string recording_path;
    auto* rom = app.add_subcommand("rom", "Extract joint ROM from a skeleton recording");
    rom->add_option("recording", recording_path, "Skeleton recording (JSON lines)")
        ->required();
    add_config_option(rom, opts);
    rom->add_option("--out", opts.out, "Output ROM JSON (default rom.json)");
    rom->callback([&] { run_rom(recording_path, opts); });

    std::optional<int> workers, ndir;
    std::optional<double> voxel_edge, step_deg;
    auto* build = app.add_subcommand("build-map", "Generate a capability map");
    add_config_option(build, opts);
    build->add_option("--seed", opts.seed, "Generation seed");
    build->add_option("--workers", workers, "Worker threads (output is identical)");
    build->add_option("--voxel-edge", voxel_edge, "Voxel edge length [m]");
    build->add_option("--lattice-step", step_deg,
                      "Arm joint lattice step [deg]; wrist joints use twice this");
    build->add_option("--ndir", ndir, "Orientation bins per voxel");
    build->add_option("--out", opts.out, "Output map file (default capability.map)");
    build->callback([&] { run_build_map(opts, workers, voxel_edge, step_deg, ndir); });

    std::string healthy_path;
    std::vector<std::string> other_paths;
    auto* compare = app.add_subcommand("compare", "Compare maps against a baseline");
    compare->add_option("healthy", healthy_path, "Baseline map")->required();
    compare->add_option("others", other_paths, "Maps to compare")->required();
    compare->add_option("--out", opts.out, "Also write the table as CSV");
    compare->callback([&] { run_compare(healthy_path, other_paths, opts); });

    std::string map_path, band_text;
    auto* hull = app.add_subcommand("hull", "Export a score-band hull as OBJ");
    hull->add_option("map", map_path, "Capability map")->required();
    add_config_option(hull, opts);
    hull->add_option("--band", band_text, "Score band '<lo>,<hi>' (default from config)");
    hull->add_option("--out", opts.out, "Output OBJ (default hull.obj)");
    hull->callback([&] { run_hull(map_path, band_text, opts); });

    auto* regions = app.add_subcommand("regions", "Label difficulty tertiles");
    regions->add_option("map", map_path, "Capability map")->required();
    regions->add_option("--out", opts.out, "Output labels JSON (default regions.json)");
    regions->callback([&] { run_regions(map_path, opts); });

    std::string labels_path;
    auto* plan = app.add_subcommand("plan", "Draw balloon spawn positions per tier");
    plan->add_option("map", map_path, "Capability map")->required();
    plan->add_option("labels", labels_path, "Region labels JSON")->required();
    add_config_option(plan, opts);
    plan->add_option("--seed", opts.seed, "Plan seed");
    plan->add_option("--per-tier", opts.per_tier, "Spawns per difficulty tier");
    plan->add_option("--dmin", opts.d_min, "Minimum spawn distance from home [m]");
    plan->add_option("--out", opts.out, "Output plan JSON (default plan.json)");
    plan->callback([&] { run_plan(map_path, labels_path, opts); });

    auto* simulate = app.add_subcommand("simulate", "Synthesize a balloon-pop session");
    simulate->add_option("map", map_path, "Capability map")->required();
    simulate->add_option("labels", labels_path, "Region labels JSON")->required();
    add_config_option(simulate, opts);
    simulate->add_option("--seed", opts.seed, "Session seed");
    simulate->add_option("--per-tier", opts.per_tier, "Balloons per difficulty tier");
    simulate->add_option("--dmin", opts.d_min, "Minimum spawn distance from home [m]");
    simulate->add_option("--out", opts.out, "Output session JSON (default session.json)");
    simulate->callback([&] { run_simulate(map_path, labels_path, opts); });

    std::vector<std::string> log_paths;
    auto* report = app.add_subcommand("report", "Speed table from session logs");
    report->add_option("logs", log_paths, "Session log JSON files")->required();
    report->add_option("--out", opts.out, "Also write the table as CSV");
    report->callback([&] { run_report(log_paths, opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.error_class() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
