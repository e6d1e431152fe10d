// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Numeric criteria run against the core library;
// file-level determinism criteria drive the installed CLI binary.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/gait.hpp"
#include "core/heightmap.hpp"
#include "core/image.hpp"
#include "core/lip.hpp"
#include "core/membrane.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"
#include "core/units.hpp"
#include "core/world.hpp"
#include "oracle_utils.hpp"

namespace fs = std::filesystem;
using namespace sucktac;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

membrane::MembraneParams reference_params() {
    return membrane::MembraneParams::from_mm_mpa(20.0, 2.0, 0.098, 0.101, 2.0);
}

/* -------- criterion 1: model sanity -------- */
Check criterion_model_sanity() {
    Check c;
    const auto p = reference_params();

    const auto rest = membrane::solve_deflection(p, p.p_atm_pa);
    c.expect(rest.deflection_m == 0.0 && rest.force_n == 0.0, "rest state must be exactly zero");

    for (int i = 1; i <= 20; ++i) {
        const double suction_kpa = 14.0 * double(i) / 20.0;
        const double p_cavity = p.p_atm_pa - suction_kpa * units::kpa_to_pa;
        const auto sol = membrane::solve_deflection(p, p_cavity);
        c.expect(std::abs(sol.residual_pa) <= 1e-3,
                 "residual above 1e-9 MPa at " + std::to_string(suction_kpa) + " kPa");
        const double w_oracle = oracle::grid_scan_root(p, p_cavity);
        c.expect(std::abs(sol.deflection_m - w_oracle) < 1e-9,
                 "solution differs from the grid-scan oracle at " + std::to_string(suction_kpa) +
                     " kPa");
    }
    return c;
}

/* -------- criterion 2: model structure -------- */
Check criterion_model_structure() {
    Check c;
    const auto p = reference_params();
    double prev_force = -1.0;
    for (int i = 1; i <= 20; ++i) {
        const double suction_kpa = 14.0 * double(i) / 20.0;
        const double p_cavity = p.p_atm_pa - suction_kpa * units::kpa_to_pa;
        const auto sol = membrane::solve_deflection(p, p_cavity);
        c.expect(sol.force_n > prev_force, "force must increase strictly with suction");
        const double cap =
            std::numbers::pi * p.radius_m * p.radius_m * suction_kpa * units::kpa_to_pa;
        c.expect(sol.force_n <= cap, "force exceeds pi R^2 |suction|");
        prev_force = sol.force_n;
    }
    for (double suction_kpa : {0.25, 0.5, 1.0}) {
        const double p_cavity = p.p_atm_pa - suction_kpa * units::kpa_to_pa;
        const double w_full = membrane::solve_deflection(p, p_cavity).deflection_m;
        const double w_lin = oracle::linearized_deflection(p, p_cavity);
        c.expect(std::abs(w_full - w_lin) / w_full < 0.05,
                 "linearized solution off by more than 5% at " + std::to_string(suction_kpa) +
                     " kPa");
    }
    return c;
}

/* -------- criterion 3: lip geometry -------- */
Check criterion_lip_geometry() {
    Check c;
    lip::LipSpec spec;
    spec.cycles = 8;

    const auto pts = lip::lip_contour(spec, 4096);
    double rmin = 1e18, rmax = 0.0;
    for (const auto& pt : pts) {
        const double r = std::hypot(pt.x, pt.y);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    c.expect(std::abs(rmax - 30.0) < 1e-3, "N=8 max radius must be 30.000 mm");
    c.expect(std::abs(rmin - 27.0) < 1e-3, "N=8 min radius must be 27.000 mm");

    lip::LipSpec circle = spec;
    circle.cycles = 0;
    const auto circle_pts = lip::lip_contour(circle, 4096);
    double perimeter = 0.0;
    for (size_t i = 0; i < circle_pts.size(); ++i) {
        const auto& a = circle_pts[i];
        const auto& b = circle_pts[(i + 1) % circle_pts.size()];
        perimeter += std::hypot(b.x - a.x, b.y - a.y);
    }
    const double target = 2.0 * std::numbers::pi * 28.5;
    c.expect(std::abs(perimeter - target) / target < 1e-4,
             "N=0 perimeter off 2 pi R0 by more than 0.01%");

    for (double dt : {1.0, 2.0, 4.0}) {
        lip::SubstrateSpec substrate;
        substrate.wavelength_mm = 60.0 / dt;
        double prev = 1e18;
        for (int n : {0, 6, 8, 10}) {
            lip::LipSpec s = spec;
            s.cycles = n;
            const double demand = lip::conformity_demand(s, substrate, 4096);
            c.expect(demand <= prev, "conformity demand must be nonincreasing in N (D/T=" +
                                         std::to_string(dt) + ")");
            prev = demand;
        }
    }
    return c;
}

/* -------- criterion 4: microhole feasibility -------- */
Check criterion_microholes() {
    Check c;
    for (int n : {60, 120, 180}) {
        const auto layout = lip::hole_layout(n, 3, 0.5, 0.6, 21.0);
        c.expect(int(layout.centers.size()) == 3 * n, "layout size mismatch");
        bool clean = true;
        for (size_t i = 0; i < layout.centers.size() && clean; ++i) {
            for (size_t j = i + 1; j < layout.centers.size(); ++j) {
                const double d = std::hypot(layout.centers[i].x - layout.centers[j].x,
                                            layout.centers[i].y - layout.centers[j].y);
                if (d <= layout.hole_diameter_mm) {
                    clean = false;
                    break;
                }
            }
        }
        c.expect(clean, "pairwise overlap at n=" + std::to_string(n));
    }
    bool rejected = false;
    try {
        lip::hole_layout(600, 3, 0.5, 0.6, 21.0);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    c.expect(rejected, "n=600 must be rejected");
    return c;
}

/* -------- criterion 5: spectral pipeline -------- */
Check criterion_spectral() {
    Check c;
    // Parseval on a busy frame
    const auto map = heightmap::texture(9, 12);
    tactile::CaptureParams cap;
    const auto img = tactile::render_tactile(map, cap, 5);
    const auto spec = spectral::fft2_log_spectrum(img);
    double spec_energy = 0.0;
    for (double v : spec.values) {
        const double mag = std::expm1(v);
        spec_energy += mag * mag;
    }
    double img_energy = 0.0;
    for (float px : img.pixels) img_energy += double(px) * double(px);
    img_energy *= double(img.width) * double(img.height);
    c.expect(std::abs(spec_energy - img_energy) / img_energy < 1e-6,
             "Parseval check above 1e-6 relative");

    // bin-exact localization of a pure sinusoid
    tactile::TactileImage wave;
    wave.pixels.resize(size_t(wave.width) * wave.height);
    const int kx = 37, ky = 11;
    for (int y = 0; y < wave.height; ++y)
        for (int x = 0; x < wave.width; ++x)
            wave.at(x, y) = float(0.5 + 0.4 * std::cos(2.0 * std::numbers::pi *
                                                       (double(kx) * x / wave.width +
                                                        double(ky) * y / wave.height)));
    const auto wave_spec = spectral::fft2_log_spectrum(wave);
    const int cx = wave.width / 2, cy = wave.height / 2;
    double best = -1.0;
    int bx = 0, by = 0;
    for (int y = 0; y < wave.height; ++y)
        for (int x = 0; x < wave.width; ++x) {
            if (x == cx && y == cy) continue;
            if (wave_spec.at(x, y) > best) {
                best = wave_spec.at(x, y);
                bx = x - cx;
                by = y - cy;
            }
        }
    c.expect((std::abs(bx) == kx && std::abs(by) == ky), "sinusoid peak not bin-exact");

    const auto bands = spectral::radial_band_energies(spec, spectral::band_count);
    double total = 0.0;
    for (double b : bands) total += b;
    c.expect(std::abs(total - 1.0) < 1e-9, "band fractions must partition to 1");
    return c;
}

/* -------- criterion 6: roughness ordering -------- */
Check criterion_roughness() {
    Check c;
    const std::vector<int> meshes = {36, 60, 80, 120, 180, 240, 320, 400, 600};
    tactile::CaptureParams cap;
    cap.press_force_n = 5.0;
    cap.pressure_kpa = 8.0;

    std::map<int, double> median;
    for (int mesh : meshes) {
        std::vector<double> indices;
        for (uint64_t trial = 0; trial < 10; ++trial) {
            const uint64_t seed = rng::derive(606, uint64_t(mesh) * 100 + trial);
            const auto grit = heightmap::sandpaper(mesh, seed, 1280, 960);
            const auto flat = heightmap::flat(1280, 960, heightmap::sandpaper_pitch_um);
            const auto frame = tactile::render_tactile(grit, cap, rng::derive(seed, 1));
            const auto ref = tactile::render_tactile(flat, cap, rng::derive(seed, 2));
            const auto diff =
                tactile::apply_center_mask(tactile::difference_image(frame, ref), 0.45);
            indices.push_back(spectral::roughness_index(diff));
        }
        std::sort(indices.begin(), indices.end());
        median[mesh] = 0.5 * (indices[4] + indices[5]);
    }
    for (size_t i = 0; i + 1 < meshes.size() - 1; ++i) {
        c.expect(median[meshes[i]] > median[meshes[i + 1]],
                 "median index must decrease from mesh " + std::to_string(meshes[i]) + " to " +
                     std::to_string(meshes[i + 1]));
    }
    const double gap_coarse = median[36] - median[60];
    const double gap_fine = std::abs(median[400] - median[600]);
    c.expect(gap_fine < gap_coarse, "400-vs-600 gap must be smaller than the 36-vs-60 gap");
    return c;
}

/* -------- criterion 7: classification -------- */
Check criterion_classification() {
    Check c;
    dataset::Options opts;
    opts.per_class = 100;
    opts.seed = 20250810;
    const auto items = dataset::generate(opts);
    const auto result = dataset::run_classification(items, 20250810);
    c.expect(result.confusion.accuracy >= 0.90,
             "test accuracy " + std::to_string(result.confusion.accuracy) + " below 0.90");
    for (int t = 0; t < result.confusion.classes; ++t) {
        long row = 0;
        for (int px = 0; px < result.confusion.classes; ++px) row += result.confusion.at(t, px);
        c.expect(row == 20, "confusion row sum must be 20");
    }
    if (c.ok)
        c.detail = "accuracy " + std::to_string(result.confusion.accuracy);
    return c;
}

/* -------- criterion 8: grasp workflow -------- */
Check criterion_grasp() {
    Check c;
    const auto plan = gait::grasp_cycle_plan({{"a", "bin_a"}});
    int sense_at = -1, attach_at = -1, release_at = -1;
    for (size_t i = 0; i < plan.phases.size(); ++i) {
        for (const auto& t : plan.phases[i].targets) {
            if (t.channel != gait::Channel::head_sucker) continue;
            if (t.pressure_kpa == 8.0 && sense_at < 0) sense_at = int(i);
            if (t.pressure_kpa == -10.0 && attach_at < 0) attach_at = int(i);
            if (t.pressure_kpa == 0.0 && attach_at >= 0 && release_at < 0) release_at = int(i);
        }
    }
    c.expect(sense_at >= 0, "no +8 kPa sensing phase");
    c.expect(attach_at > sense_at, "-10 kPa attach must follow +8 kPa sensing");
    c.expect(release_at > attach_at, "0 kPa release must follow attachment");
    return c;
}

/* -------- criterion 9: gait correctness -------- */
Check criterion_gait() {
    Check c;
    const auto crawl = gait::crawl_cycle_sequence();
    c.expect(crawl.phases.size() == 4, "crawl must have exactly 4 phases");

    auto target = [](const gait::Phase& phase, gait::Channel ch) {
        for (const auto& t : phase.targets)
            if (t.channel == ch) return t.pressure_kpa;
        return 1e18;
    };
    c.expect(target(crawl.phases[0], gait::Channel::tail_sucker) < 0.0 &&
                 target(crawl.phases[0], gait::Channel::head_sucker) > 0.0,
             "phase 1 anchoring pattern wrong");
    c.expect(target(crawl.phases[2], gait::Channel::head_sucker) < 0.0 &&
                 target(crawl.phases[2], gait::Channel::tail_sucker) == 0.0,
             "phase 3 anchor swap wrong");

    // cyclic closure: state trace periodic over repeats, actuators back home
    std::array<double, gait::channel_count> state{};
    std::vector<std::array<double, gait::channel_count>> states;
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& phase : crawl.phases) {
            for (const auto& t : phase.targets) state[size_t(int(t.channel))] = t.pressure_kpa;
            states.push_back(state);
        }
    for (size_t i = 0; i < 4; ++i)
        c.expect(states[i] == states[i + 4], "state trace must be periodic");
    for (int ch = int(gait::Channel::actuator_1); ch <= int(gait::Channel::actuator_4); ++ch)
        c.expect(states[3][size_t(ch)] == 0.0, "actuators must return to initial targets");

    for (auto dir : {gait::Steer::left, gait::Steer::right}) {
        const auto steer = gait::steer_sequence(dir);
        int active = 0;
        bool left_pair = false, right_pair = false;
        for (const auto& t : steer.phases[1].targets) {
            if (!gait::is_sucker(t.channel) && t.pressure_kpa != 0.0) {
                ++active;
                if (t.channel == gait::Channel::actuator_1 ||
                    t.channel == gait::Channel::actuator_2)
                    left_pair = true;
                else
                    right_pair = true;
            }
        }
        c.expect(active == 2, "steering must actuate exactly 2 actuators");
        c.expect(left_pair != right_pair, "steering must actuate exactly one lateral pair");
        gait::validate_plan(steer);
    }
    gait::validate_plan(crawl);
    return c;
}

/* -------- criterion 10: locomotion safety and policy -------- */
Check criterion_locomotion() {
    Check c;
    int rerun_budget = 20;
    for (int world_idx = 0; world_idx < 100; ++world_idx) {
        rng::Stream rs(rng::derive(777, uint64_t(world_idx)));
        const int width = 10, height = 8;
        std::string text;
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) text += (rs.uniform() < 0.12) ? '#' : '.';
            text += '\n';
        }
        auto world = sim::parse_world(text);
        int sx = -1, sy = -1;
        for (int tries = 0; tries < 200 && sx < 0; ++tries) {
            const int x = int(rs.below(width)), y = int(rs.below(height));
            if (!world.is_hole(x, y)) {
                sx = x;
                sy = y;
            }
        }
        if (sx < 0) continue;
        const auto heading = sim::Heading(int(rs.below(4)));
        const uint64_t seed = rng::derive(888, uint64_t(world_idx));
        const auto episode = sim::run_episode(world, sx, sy, heading, 20, seed);

        for (const auto& row : episode.log) {
            c.expect(!world.is_hole(row.x, row.y),
                     "robot stood on a hole in world " + std::to_string(world_idx));
            if (row.right_queried)
                c.expect(row.hole_ahead, "right queried without an ahead hole");
            if (row.left_queried)
                c.expect(row.right_queried && row.right_hole,
                         "left queried before right reported a hole");
        }
        c.expect(!world.is_hole(episode.final_state.x, episode.final_state.y),
                 "final cell is a hole");

        if (rerun_budget > 0) {
            --rerun_budget;
            const auto again = sim::run_episode(world, sx, sy, heading, 20, seed);
            c.expect(sim::trajectory_csv(again) == sim::trajectory_csv(episode),
                     "trajectory not bit-identical across reruns");
        }
        if (!c.ok) break;
    }
    return c;
}

/* -------- criterion 11: CLI determinism and round trips -------- */

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SUCKTAC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::map<std::string, std::string> snapshot_dir(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        files[fs::relative(entry.path(), dir).string()] = read_file(entry.path());
    }
    return files;
}

Check criterion_determinism() {
    Check c;
    const fs::path base = fs::temp_directory_path() / "sucktac_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    const fs::path world_file = base / "demo.world";
    {
        std::ofstream w(world_file);
        w << "S.....\n..#...\n....#.\n......\n";
    }

    const std::string commands[] = {
        "model-curve --seed 5 --out {out}",
        "lip --seed 5 --out {out}",
        "gait --seed 5 --out {out}",
        "roughness --seed 5 --perception.meshes 36,120 --perception.seeds-per-mesh 2 --out {out}",
        "dataset --seed 5 --synthesis.per-class 10 --out {out}",
        "classify-eval --seed 5 --synthesis.dataset-dir {out}/dataset --out {out}",
        "locomotion --seed 5 --world.file " + world_file.string() +
            " --world.max-steps 8 --out {out}",
    };

    for (int run = 0; run < 2; ++run) {
        const fs::path out = base / ("run" + std::to_string(run));
        for (const auto& tmpl : commands) {
            std::string cmd = tmpl;
            for (auto p = cmd.find("{out}"); p != std::string::npos; p = cmd.find("{out}"))
                cmd.replace(p, 5, out.string());
            if (run_cli(cmd) != 0) {
                c.expect(false, "CLI command failed: " + cmd);
                return c;
            }
        }
    }
    const auto run0 = snapshot_dir(base / "run0");
    const auto run1 = snapshot_dir(base / "run1");
    c.expect(run0.size() == run1.size(), "rerun produced a different file set");
    c.expect(!run0.empty(), "no files were produced");
    for (const auto& [name, bytes] : run0) {
        const auto it = run1.find(name);
        c.expect(it != run1.end() && it->second == bytes, "file differs across reruns: " + name);
    }

    // parse-back checks for every format with a documented reader
    const fs::path out = base / "run0";
    {
        std::ifstream in(out / "force_curve.csv", std::ios::binary);
        const auto curve = membrane::read_force_curve_csv(in);
        c.expect(curve.samples.size() == 21, "force curve row count");
        c.expect(membrane::force_curve_csv(curve) == read_file(out / "force_curve.csv"),
                 "force curve re-encode differs");
    }
    {
        const auto img = tactile::read_pgm_file((out / "mesh_036_diff.pgm").string());
        c.expect(tactile::write_pgm(img) == read_file(out / "mesh_036_diff.pgm"),
                 "pgm re-encode differs");
    }
    {
        std::ifstream in(out / "crawl_plan.txt", std::ios::binary);
        const auto plan = gait::parse_plan_text(in);
        c.expect(gait::plan_text(plan) == read_file(out / "crawl_plan.txt"),
                 "plan re-encode differs");
        std::ifstream tin(out / "crawl_timeline.csv", std::ios::binary);
        const auto timeline = gait::read_timeline_csv(tin);
        c.expect(gait::timeline_csv(timeline) == read_file(out / "crawl_timeline.csv"),
                 "timeline re-encode differs");
    }
    {
        const auto model = spectral::load_model((out / "model.txt").string());
        c.expect(spectral::model_text(model) == read_file(out / "model.txt"),
                 "model re-encode differs");
    }
    {
        const auto items = dataset::load((out / "dataset").string());
        c.expect(items.size() == size_t(18 * 10), "dataset load count");
        c.expect(dataset::manifest_csv(items) == read_file(out / "dataset" / "manifest.csv"),
                 "manifest re-encode differs");
    }
    fs::remove_all(base);
    return c;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no stated budget
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "model-sanity", 1.0, criterion_model_sanity},
        {2, "model-structure", 1.0, criterion_model_structure},
        {3, "lip-geometry", 1.0, criterion_lip_geometry},
        {4, "microhole-feasibility", 1.0, criterion_microholes},
        {5, "spectral-pipeline", 0.0, criterion_spectral},
        {6, "roughness-ordering", 120.0, criterion_roughness},
        {7, "classification", 300.0, criterion_classification},
        {8, "grasp-workflow", 0.0, criterion_grasp},
        {9, "gait-correctness", 0.0, criterion_gait},
        {10, "locomotion-safety-policy", 120.0, criterion_locomotion},
        {11, "determinism-round-trip", 0.0, criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_s > 0.0 && elapsed > criterion.budget_s) {
            result.ok = false;
            if (!result.detail.empty()) result.detail += "; ";
            result.detail += "runtime " + std::to_string(elapsed) + " s exceeds budget " +
                             std::to_string(criterion.budget_s) + " s";
        }
        std::printf("%s  %2d %-28s (%6.2f s)%s%s\n", result.ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, elapsed, result.detail.empty() ? "" : ": ",
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    return failures;
}
