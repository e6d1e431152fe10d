// sucktac command-line harness. Everything below talks to the shared
// library through the public C API only.

#include <sucktac/sucktac.h>

#include <CLI11.hpp>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_runtime = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

void check_api(sucktac_status status, const std::string& what, int code = exit_runtime) {
    if (status != SUCKTAC_OK)
        fail(code, what + ": " + sucktac_status_name(status) + " (" + sucktac_last_error() + ")");
}

void ensure_out_dir(const std::string& out) {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) fail(exit_runtime, "cannot create output directory " + out);
}

/* strict plain-text config: `key = value` entries under [section] headers,
 * '#' comments; unknown keys are rejected before anything runs */
class ConfigRegistry {
  public:
    void bind(const std::string& key, std::function<void(const std::string&)> apply) {
        bindings_[key] = std::move(apply);
    }
    void load(const std::string& path) const {
        std::ifstream in(path);
        if (!in) fail(exit_validation, "cannot open config file " + path);
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    fail(exit_validation, config_where(path, lineno) + "unterminated section");
                section = trim(line.substr(1, line.size() - 2));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                fail(exit_validation, config_where(path, lineno) + "expected key = value");
            const std::string key =
                (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            const auto it = bindings_.find(key);
            if (it == bindings_.end())
                fail(exit_validation, config_where(path, lineno) + "unknown key '" + key + "'");
            try {
                it->second(value);
            } catch (const CliError&) {
                throw;
            } catch (const std::exception&) {
                fail(exit_validation,
                     config_where(path, lineno) + "bad value '" + value + "' for " + key);
            }
        }
    }

    static double to_double(const std::string& s) {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    }
    static long to_long(const std::string& s) {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    }
    static std::vector<std::string> split_list(const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                out.push_back(trim(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
        return out;
    }

  private:
    static std::string trim(const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return "";
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    }
    static std::string config_where(const std::string& path, int lineno) {
        return "config " + path + ":" + std::to_string(lineno) + ": ";
    }
    std::map<std::string, std::function<void(const std::string&)>> bindings_;
};

struct MembraneOpts {
    double radius_mm = 20.0;
    double thickness_mm = 2.0;
    double shear_c_mpa = 0.098;
    double p_atm_mpa = 0.101;
    double standoff_mm = 2.0;
    double sweep_start_kpa = 0.0;
    double sweep_stop_kpa = -14.0;
    double sweep_step_kpa = 0.7;

    sucktac_membrane_params params() const {
        return {radius_mm, thickness_mm, shear_c_mpa, p_atm_mpa, standoff_mm};
    }
    std::vector<double> sweep() const {
        std::vector<double> points;
        if (sweep_step_kpa <= 0.0) fail(exit_validation, "sweep step must be positive");
        for (double p = sweep_start_kpa; p >= sweep_stop_kpa - 1e-9; p -= sweep_step_kpa)
            points.push_back(p);
        return points;
    }
};

struct LipOpts {
    int cycles = 8;
    double base_radius_mm = 28.5;
    double amplitude_mm = 1.5;
    double inner_diameter_mm = 40.0;
    int samples = 512;
    int holes_per_ring = 180;
    int rings = 3;
    std::vector<double> d_over_t = {0.0, 1.0, 2.0, 4.0};

    sucktac_lip_spec spec() const { return {cycles, base_radius_mm, amplitude_mm, inner_diameter_mm}; }
};

struct SynthesisOpts {
    int per_class = 100;
    std::string dataset_dir;  // defaults to <out>/dataset
};

struct PerceptionOpts {
    std::vector<int> meshes = {36, 60, 80, 120, 180, 240, 320, 400};
    int seeds_per_mesh = 10;
};

struct GaitOpts {
    double dwell_s = 1.0;
    double elongation_kpa = 20.0;
    int cycles = 3;
    std::vector<std::string> destinations = {"leather_smooth=bin_a", "leather_coarse=bin_b",
                                             "leather_grid=bin_c"};
};

struct WorldOpts {
    std::string file;
    int max_steps = 50;
    std::string heading = "E";
    int start_x = -1;
    int start_y = -1;
};

int heading_code(const std::string& h) {
    if (h == "N") return 0;
    if (h == "E") return 1;
    if (h == "S") return 2;
    if (h == "W") return 3;
    fail(exit_validation, "heading must be one of N, E, S, W");
}

/* ---------------- subcommand bodies ---------------- */

void cmd_model_curve(const MembraneOpts& mo, const std::string& out) {
    const auto params = mo.params();
    check_api(sucktac_membrane_validate(&params), "membrane config", exit_validation);
    const auto sweep = mo.sweep();
    ensure_out_dir(out);

    const std::string csv_path = (fs::path(out) / "force_curve.csv").string();
    check_api(sucktac_force_curve_csv_file(&params, sweep.data(), sweep.size(), csv_path.c_str()),
              "force curve");

    size_t failures = 0;
    for (double gauge : sweep) {
        sucktac_suction_solution sol;
        const sucktac_status status = sucktac_solve_suction(&params, gauge, &sol);
        if (status == SUCKTAC_OK) {
            std::printf("p_cavity %8.3f kPa  w %9.6f mm  P_gap %8.4f kPa  F %8.4f N\n", gauge,
                        sol.deflection_mm, sol.gap_pressure_mpa * 1000.0, sol.force_n);
        } else {
            ++failures;
            std::printf("p_cavity %8.3f kPa  FAILED (%s)\n", gauge, sucktac_status_name(status));
        }
    }
    std::printf("wrote %s (%zu/%zu points)\n", csv_path.c_str(), sweep.size() - failures,
                sweep.size());
    if (!sweep.empty() && failures == sweep.size())
        fail(exit_runtime, "every sweep point failed to solve");
}

void cmd_lip(const LipOpts& lo, const std::string& out) {
    const auto spec = lo.spec();
    double probe = 0.0;
    check_api(sucktac_conformity_demand(&spec, 30.0, std::max(lo.samples, 64), &probe),
              "lip config", exit_validation);
    ensure_out_dir(out);

    const std::string contour = (fs::path(out) / "lip_contour.csv").string();
    const std::string holes = (fs::path(out) / "holes.csv").string();
    const std::string svg = (fs::path(out) / "lip.svg").string();
    check_api(sucktac_lip_export(&spec, lo.samples, lo.holes_per_ring, lo.rings, contour.c_str(),
                                 holes.c_str(), svg.c_str()),
              "lip export");

    std::string conf = "d_over_t,cycles,demand_mm\n";
    const double outer = 2.0 * (lo.base_radius_mm + lo.amplitude_mm);
    for (double dt : lo.d_over_t) {
        const double wavelength = dt > 0.0 ? outer / dt : -1.0;
        for (int n : {0, 6, 8, 10}) {
            sucktac_lip_spec s = spec;
            s.cycles = n;
            double demand = 0.0;
            check_api(sucktac_conformity_demand(&s, wavelength, 4096, &demand), "conformity");
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%.3f,%d,%.6f\n", dt, n, demand);
            conf += buf;
        }
    }
    const std::string conf_path = (fs::path(out) / "conformity.csv").string();
    FILE* f = std::fopen(conf_path.c_str(), "wb");
    if (!f) fail(exit_runtime, "cannot write " + conf_path);
    std::fwrite(conf.data(), 1, conf.size(), f);
    std::fclose(f);
    std::printf("wrote %s, %s, %s, %s\n", contour.c_str(), holes.c_str(), svg.c_str(),
                conf_path.c_str());
}

void cmd_dataset(const SynthesisOpts& so, uint64_t seed, const std::string& out) {
    if (so.per_class < 1) fail(exit_validation, "per-class count must be >= 1");
    ensure_out_dir(out);
    const std::string dir =
        so.dataset_dir.empty() ? (fs::path(out) / "dataset").string() : so.dataset_dir;
    check_api(sucktac_dataset_generate(so.per_class, seed, dir.c_str()), "dataset generation");
    std::printf("wrote %d x %d images + manifest under %s\n", sucktac_texture_class_count(),
                so.per_class, dir.c_str());
}

void cmd_classify_eval(const SynthesisOpts& so, uint64_t seed, const std::string& out) {
    const std::string dir =
        so.dataset_dir.empty() ? (fs::path(out) / "dataset").string() : so.dataset_dir;
    if (!fs::exists(fs::path(dir) / "manifest.csv"))
        fail(exit_runtime, "missing dataset manifest under " + dir + " (run `sucktac dataset`)");
    ensure_out_dir(out);
    const std::string confusion = (fs::path(out) / "confusion.csv").string();
    const std::string model = (fs::path(out) / "model.txt").string();
    double accuracy = 0.0;
    check_api(sucktac_dataset_classify_eval(dir.c_str(), seed, confusion.c_str(), model.c_str(),
                                            &accuracy),
              "classification experiment");
    std::printf("test accuracy %.4f\nwrote %s and %s\n", accuracy, confusion.c_str(),
                model.c_str());
}

void cmd_roughness(const PerceptionOpts& po, uint64_t seed, const std::string& out) {
    if (po.meshes.empty()) fail(exit_validation, "mesh list must be nonempty");
    for (int mesh : po.meshes)
        if (mesh < 36 || mesh > 600) fail(exit_validation, "mesh values must lie in [36, 600]");
    if (po.seeds_per_mesh < 1) fail(exit_validation, "seeds-per-mesh must be >= 1");
    ensure_out_dir(out);

    sucktac_capture_params cap{5.0, 8.0, 0.0, 0.0};  // fixed preload and pressure
    std::string csv = "mesh,median_index\n";
    for (int mesh : po.meshes) {
        std::vector<double> indices;
        for (int trial = 0; trial < po.seeds_per_mesh; ++trial) {
            const uint64_t trial_seed =
                sucktac_derive_seed(seed, uint64_t(mesh) * 1000u + uint64_t(trial));

            sucktac_heightmap* grit = nullptr;
            check_api(sucktac_heightmap_sandpaper(mesh, trial_seed, 1280, 960, &grit),
                      "sandpaper generation");
            sucktac_heightmap* flat = nullptr;
            check_api(sucktac_heightmap_flat(1280, 960, 75.0, &flat), "flat map");

            sucktac_image* img = nullptr;
            sucktac_image* ref = nullptr;
            sucktac_image* diff = nullptr;
            check_api(sucktac_render_tactile(grit, &cap, sucktac_derive_seed(trial_seed, 1), &img),
                      "render");
            check_api(sucktac_render_tactile(flat, &cap, sucktac_derive_seed(trial_seed, 2), &ref),
                      "render");
            check_api(sucktac_image_difference(img, ref, &diff), "difference");
            check_api(sucktac_image_apply_center_mask(diff, 0.45), "mask");

            double index = 0.0;
            check_api(sucktac_roughness_index(diff, &index), "roughness index");
            indices.push_back(index);

            if (trial == 0) {
                char name[64];
                std::snprintf(name, sizeof(name), "mesh_%03d_diff.pgm", mesh);
                check_api(sucktac_image_write_pgm(diff, (fs::path(out) / name).string().c_str()),
                          "diff image");
                std::snprintf(name, sizeof(name), "mesh_%03d_spectrum.pgm", mesh);
                check_api(
                    sucktac_spectrum_write_pgm(diff, (fs::path(out) / name).string().c_str()),
                    "spectrum image");
            }
            sucktac_image_free(diff);
            sucktac_image_free(ref);
            sucktac_image_free(img);
            sucktac_heightmap_free(flat);
            sucktac_heightmap_free(grit);
        }
        std::sort(indices.begin(), indices.end());
        const double median = indices[indices.size() / 2];
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%d,%.6f\n", mesh, median);
        csv += buf;
        std::printf("mesh %3d  median roughness index %.6f\n", mesh, median);
    }
    const std::string csv_path = (fs::path(out) / "roughness.csv").string();
    FILE* f = std::fopen(csv_path.c_str(), "wb");
    if (!f) fail(exit_runtime, "cannot write " + csv_path);
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
    std::printf("wrote %s\n", csv_path.c_str());
}

void cmd_gait(const GaitOpts& go, const std::string& out) {
    if (go.cycles < 1) fail(exit_validation, "gait cycles must be >= 1");
    if (go.dwell_s <= 0.0) fail(exit_validation, "gait dwell must be positive");
    std::vector<std::string> classes, poses;
    for (const auto& pair : go.destinations) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size())
            fail(exit_validation, "destination must look like class=pose: " + pair);
        classes.push_back(pair.substr(0, eq));
        poses.push_back(pair.substr(eq + 1));
    }
    std::vector<const char*> class_ptrs, pose_ptrs;
    for (const auto& c : classes) class_ptrs.push_back(c.c_str());
    for (const auto& p : poses) pose_ptrs.push_back(p.c_str());
    ensure_out_dir(out);

    struct Entry {
        const char* stem;
        sucktac_plan* plan = nullptr;
    };
    Entry entries[4] = {{"grasp"}, {"crawl"}, {"steer_left"}, {"steer_right"}};
    check_api(sucktac_grasp_plan_ex(class_ptrs.data(), pose_ptrs.data(), class_ptrs.size(),
                                    go.dwell_s, &entries[0].plan),
              "grasp plan");
    check_api(sucktac_crawl_plan_ex(go.dwell_s, go.elongation_kpa, &entries[1].plan),
              "crawl plan");
    check_api(sucktac_steer_plan_ex(0, go.dwell_s, go.elongation_kpa, &entries[2].plan),
              "steer plan");
    check_api(sucktac_steer_plan_ex(1, go.dwell_s, go.elongation_kpa, &entries[3].plan),
              "steer plan");

    for (auto& e : entries) {
        check_api(sucktac_plan_validate(e.plan), "plan safety check");
        const std::string plan_path = (fs::path(out) / (std::string(e.stem) + "_plan.txt")).string();
        const std::string csv_path =
            (fs::path(out) / (std::string(e.stem) + "_timeline.csv")).string();
        check_api(sucktac_plan_write(e.plan, plan_path.c_str()), "plan write");
        const int cycles = std::string(e.stem) == "grasp" ? 1 : go.cycles;
        check_api(sucktac_plan_timeline_csv_file(e.plan, cycles, csv_path.c_str()),
                  "timeline write");
        std::printf("wrote %s and %s\n", plan_path.c_str(), csv_path.c_str());
        sucktac_plan_free(e.plan);
    }
}

void cmd_locomotion(const WorldOpts& wo, uint64_t seed, const std::string& out) {
    if (wo.file.empty()) fail(exit_validation, "a world file is required (--world.file)");
    if (wo.max_steps < 1) fail(exit_validation, "max-steps must be >= 1");
    const int heading = heading_code(wo.heading);

    sucktac_world* world = nullptr;
    check_api(sucktac_world_load(wo.file.c_str(), &world), "world file");
    int sx = wo.start_x, sy = wo.start_y;
    if (sx < 0 || sy < 0) {
        check_api(sucktac_world_start(world, &sx, &sy), "world start");
        if (sx < 0) fail(exit_validation, "world has no S marker; pass --world.start-x/start-y");
    }
    ensure_out_dir(out);

    sucktac_episode* episode = nullptr;
    check_api(sucktac_run_episode(world, sx, sy, heading, wo.max_steps, seed, &episode),
              "episode");
    const std::string traj = (fs::path(out) / "trajectory.csv").string();
    const std::string timeline = (fs::path(out) / "timeline.csv").string();
    check_api(sucktac_episode_trajectory_csv_file(episode, traj.c_str()), "trajectory write");
    check_api(sucktac_episode_timeline_csv_file(episode, timeline.c_str()), "timeline write");
    std::printf("episode: %d steps%s\nwrote %s and %s\n", sucktac_episode_steps(episode),
                sucktac_episode_halted(episode) ? " (halted)" : "", traj.c_str(),
                timeline.c_str());
    sucktac_episode_free(episode);
    sucktac_world_free(world);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"suction-mechanics, tactile-synthesis and gait toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 1;
    std::string out = "out";
    std::string config_path;
    app.add_option("--config", config_path, "plain-text key-value config (INI sections)");
    app.add_option("--seed", seed, "base seed for every random stream");
    app.add_option("--out", out, "output directory");

    MembraneOpts mo;
    app.add_option("--membrane.radius-mm", mo.radius_mm)->check(CLI::PositiveNumber);
    app.add_option("--membrane.thickness-mm", mo.thickness_mm)->check(CLI::PositiveNumber);
    app.add_option("--membrane.shear-c-mpa", mo.shear_c_mpa)->check(CLI::PositiveNumber);
    app.add_option("--membrane.p-atm-mpa", mo.p_atm_mpa)->check(CLI::PositiveNumber);
    app.add_option("--membrane.standoff-mm", mo.standoff_mm)->check(CLI::PositiveNumber);
    app.add_option("--membrane.sweep-start-kpa", mo.sweep_start_kpa)
        ->check(CLI::Range(-15.0, 0.0));
    app.add_option("--membrane.sweep-stop-kpa", mo.sweep_stop_kpa)->check(CLI::Range(-15.0, 0.0));
    app.add_option("--membrane.sweep-step-kpa", mo.sweep_step_kpa)->check(CLI::PositiveNumber);

    LipOpts lo;
    app.add_option("--lip.cycles", lo.cycles)->check(CLI::Range(0, 64));
    app.add_option("--lip.base-radius-mm", lo.base_radius_mm)->check(CLI::PositiveNumber);
    app.add_option("--lip.amplitude-mm", lo.amplitude_mm)->check(CLI::NonNegativeNumber);
    app.add_option("--lip.inner-diameter-mm", lo.inner_diameter_mm)->check(CLI::PositiveNumber);
    app.add_option("--lip.samples", lo.samples)->check(CLI::Range(64, 1 << 20));
    app.add_option("--lip.holes-per-ring", lo.holes_per_ring)->check(CLI::Range(0, 100000));
    app.add_option("--lip.rings", lo.rings)->check(CLI::Range(0, 64));
    app.add_option("--lip.d-over-t", lo.d_over_t, "substrate D/T ratios (0 = flat)")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);

    SynthesisOpts so;
    app.add_option("--synthesis.per-class", so.per_class)->check(CLI::Range(1, 100000));
    app.add_option("--synthesis.dataset-dir", so.dataset_dir,
                   "dataset directory (default <out>/dataset)");

    PerceptionOpts po;
    app.add_option("--perception.meshes", po.meshes)->delimiter(',')->check(CLI::Range(36, 600));
    app.add_option("--perception.seeds-per-mesh", po.seeds_per_mesh)->check(CLI::Range(1, 1000));

    GaitOpts go;
    app.add_option("--gait.dwell-s", go.dwell_s)->check(CLI::PositiveNumber);
    app.add_option("--gait.elongation-kpa", go.elongation_kpa)->check(CLI::Range(0.0, 40.0));
    app.add_option("--gait.cycles", go.cycles)->check(CLI::Range(1, 10000));
    app.add_option("--gait.destinations", go.destinations, "class=pose pairs for grasp plans")
        ->delimiter(',');

    WorldOpts wo;
    app.add_option("--world.file", wo.file, "grid world map file");
    app.add_option("--world.max-steps", wo.max_steps)->check(CLI::Range(1, 1000000));
    app.add_option("--world.heading", wo.heading)->check(CLI::IsMember({"N", "E", "S", "W"}));
    app.add_option("--world.start-x", wo.start_x);
    app.add_option("--world.start-y", wo.start_y);

    auto* sub_model = app.add_subcommand("model-curve", "solve the membrane over a suction sweep");
    auto* sub_lip = app.add_subcommand("lip", "export lip contours, hole layouts and conformity");
    auto* sub_dataset = app.add_subcommand("dataset", "synthesize the texture image dataset");
    auto* sub_classify =
        app.add_subcommand("classify-eval", "train and evaluate the texture classifier");
    auto* sub_rough = app.add_subcommand("roughness", "sandpaper difference spectra and indices");
    auto* sub_gait = app.add_subcommand("gait", "emit grasp, crawl and steering plans");
    auto* sub_loco = app.add_subcommand("locomotion", "run the reactive grid-world episode");

    ConfigRegistry registry;
    registry.bind("seed", [&](const std::string& v) { seed = uint64_t(std::stoull(v)); });
    registry.bind("out", [&](const std::string& v) { out = v; });
    auto bind_double = [&](const std::string& key, double* target) {
        registry.bind(key, [target](const std::string& v) { *target = ConfigRegistry::to_double(v); });
    };
    auto bind_int = [&](const std::string& key, int* target) {
        registry.bind(key, [target](const std::string& v) { *target = int(ConfigRegistry::to_long(v)); });
    };
    bind_double("membrane.radius-mm", &mo.radius_mm);
    bind_double("membrane.thickness-mm", &mo.thickness_mm);
    bind_double("membrane.shear-c-mpa", &mo.shear_c_mpa);
    bind_double("membrane.p-atm-mpa", &mo.p_atm_mpa);
    bind_double("membrane.standoff-mm", &mo.standoff_mm);
    bind_double("membrane.sweep-start-kpa", &mo.sweep_start_kpa);
    bind_double("membrane.sweep-stop-kpa", &mo.sweep_stop_kpa);
    bind_double("membrane.sweep-step-kpa", &mo.sweep_step_kpa);
    bind_int("lip.cycles", &lo.cycles);
    bind_double("lip.base-radius-mm", &lo.base_radius_mm);
    bind_double("lip.amplitude-mm", &lo.amplitude_mm);
    bind_double("lip.inner-diameter-mm", &lo.inner_diameter_mm);
    bind_int("lip.samples", &lo.samples);
    bind_int("lip.holes-per-ring", &lo.holes_per_ring);
    bind_int("lip.rings", &lo.rings);
    registry.bind("lip.d-over-t", [&](const std::string& v) {
        lo.d_over_t.clear();
        for (const auto& item : ConfigRegistry::split_list(v))
            lo.d_over_t.push_back(ConfigRegistry::to_double(item));
    });
    bind_int("synthesis.per-class", &so.per_class);
    registry.bind("synthesis.dataset-dir", [&](const std::string& v) { so.dataset_dir = v; });
    registry.bind("perception.meshes", [&](const std::string& v) {
        po.meshes.clear();
        for (const auto& item : ConfigRegistry::split_list(v))
            po.meshes.push_back(int(ConfigRegistry::to_long(item)));
    });
    bind_int("perception.seeds-per-mesh", &po.seeds_per_mesh);
    bind_double("gait.dwell-s", &go.dwell_s);
    bind_double("gait.elongation-kpa", &go.elongation_kpa);
    bind_int("gait.cycles", &go.cycles);
    registry.bind("gait.destinations",
                  [&](const std::string& v) { go.destinations = ConfigRegistry::split_list(v); });
    registry.bind("world.file", [&](const std::string& v) { wo.file = v; });
    bind_int("world.max-steps", &wo.max_steps);
    registry.bind("world.heading", [&](const std::string& v) { wo.heading = v; });
    bind_int("world.start-x", &wo.start_x);
    bind_int("world.start-y", &wo.start_y);

    // the config applies first so explicit command-line flags override it
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc)
                config_path = argv[i + 1];
            else if (arg.rfind("--config=", 0) == 0)
                config_path = arg.substr(9);
        }
        if (!config_path.empty()) registry.load(config_path);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_validation;
    }

    try {
        if (sub_model->parsed()) cmd_model_curve(mo, out);
        if (sub_lip->parsed()) cmd_lip(lo, out);
        if (sub_dataset->parsed()) cmd_dataset(so, seed, out);
        if (sub_classify->parsed()) cmd_classify_eval(so, seed, out);
        if (sub_rough->parsed()) cmd_roughness(po, seed, out);
        if (sub_gait->parsed()) cmd_gait(go, out);
        if (sub_loco->parsed()) cmd_locomotion(wo, seed, out);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_runtime;
    }
    return exit_ok;
}
