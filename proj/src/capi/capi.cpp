#include "sucktac/sucktac.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "../core/dataset.hpp"
#include "../core/errors.hpp"
#include "../core/gait.hpp"
#include "../core/heightmap.hpp"
#include "../core/image.hpp"
#include "../core/lip.hpp"
#include "../core/membrane.hpp"
#include "../core/rng.hpp"
#include "../core/spectral.hpp"
#include "../core/units.hpp"
#include "../core/world.hpp"

using namespace sucktac;

struct sucktac_heightmap {
    heightmap::HeightMap map;
};
struct sucktac_image {
    tactile::TactileImage img;
};
struct sucktac_model {
    spectral::CentroidModel model;
};
struct sucktac_plan {
    gait::GaitPlan plan;
};
struct sucktac_world {
    sim::GridWorld world;
};
struct sucktac_episode {
    sim::EpisodeResult episode;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
sucktac_status guarded(Fn&& fn) {
    try {
        fn();
        return SUCKTAC_OK;
    } catch (const validity_error& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_VALIDITY;
    } catch (const no_bracket_error& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_NO_BRACKET;
    } catch (const convergence_error& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_NO_CONVERGENCE;
    } catch (const parse_error& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_PARSE;
    } catch (const io_error& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_IO;
    } catch (const zero_energy_error& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_ZERO_ENERGY;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SUCKTAC_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return SUCKTAC_ERROR_INTERNAL;
    }
}

sucktac_status require(bool ok, const char* msg) {
    if (ok) return SUCKTAC_OK;
    set_error(msg);
    return SUCKTAC_ERROR_INVALID_ARGUMENT;
}

membrane::MembraneParams to_core(const sucktac_membrane_params& p) {
    return membrane::MembraneParams::from_mm_mpa(p.radius_mm, p.thickness_mm, p.shear_c_mpa,
                                                 p.p_atm_mpa, p.standoff_mm);
}

tactile::CaptureParams to_core(const sucktac_capture_params& p) {
    tactile::CaptureParams c;
    c.press_force_n = p.press_force_n;
    c.pressure_kpa = p.pressure_kpa;
    c.offset_x_um = p.offset_x_um;
    c.offset_y_um = p.offset_y_um;
    return c;
}

lip::LipSpec to_core(const sucktac_lip_spec& s) {
    lip::LipSpec spec;
    spec.cycles = s.cycles;
    spec.base_radius_mm = s.base_radius_mm;
    spec.amplitude_mm = s.amplitude_mm;
    spec.inner_diameter_mm = s.inner_diameter_mm;
    return spec;
}

std::vector<std::array<double, spectral::feature_dim>> unpack_features(const double* features,
                                                                       size_t count) {
    std::vector<std::array<double, spectral::feature_dim>> out(count);
    for (size_t i = 0; i < count; ++i)
        for (int d = 0; d < spectral::feature_dim; ++d)
            out[i][size_t(d)] = features[i * spectral::feature_dim + size_t(d)];
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out.write(text.data(), std::streamsize(text.size()));
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace

extern "C" {

const char* sucktac_version(void) { return "0.1.0"; }

const char* sucktac_status_name(sucktac_status status) {
    switch (status) {
        case SUCKTAC_OK: return "ok";
        case SUCKTAC_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case SUCKTAC_ERROR_VALIDITY: return "outside_model_validity";
        case SUCKTAC_ERROR_NO_BRACKET: return "no_bracket";
        case SUCKTAC_ERROR_NO_CONVERGENCE: return "no_convergence";
        case SUCKTAC_ERROR_IO: return "io_error";
        case SUCKTAC_ERROR_PARSE: return "parse_error";
        case SUCKTAC_ERROR_ZERO_ENERGY: return "zero_energy";
        case SUCKTAC_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* sucktac_last_error(void) { return g_last_error.c_str(); }

/* ---------------- suction mechanics ---------------- */

void sucktac_membrane_params_default(sucktac_membrane_params* out) {
    if (!out) return;
    out->radius_mm = 20.0;
    out->thickness_mm = 2.0;
    out->shear_c_mpa = 0.098;
    out->p_atm_mpa = 0.101;
    out->standoff_mm = 2.0;
}

sucktac_status sucktac_membrane_validate(const sucktac_membrane_params* params) {
    if (auto s = require(params, "params is null")) return s;
    return guarded([&] { to_core(*params); });
}

sucktac_status sucktac_solve_suction(const sucktac_membrane_params* params,
                                     double p_cavity_kpa_gauge, sucktac_suction_solution* out) {
    if (auto s = require(params && out, "null argument")) return s;
    return guarded([&] {
        const auto core = to_core(*params);
        const double p_cavity = core.p_atm_pa + p_cavity_kpa_gauge * units::kpa_to_pa;
        const auto sol = membrane::solve_deflection(core, p_cavity);
        out->deflection_mm = sol.deflection_m * units::m_to_mm;
        out->arc_length_mm = sol.arc_length_m * units::m_to_mm;
        out->radial_stress_mpa = sol.radial_stress_pa * units::pa_to_mpa;
        out->edge_angle_rad = sol.edge_angle_rad;
        out->gap_pressure_mpa = sol.gap_pressure_pa * units::pa_to_mpa;
        out->pressure_difference_mpa = sol.pressure_difference_pa * units::pa_to_mpa;
        out->force_n = sol.force_n;
        out->residual_mpa = sol.residual_pa * units::pa_to_mpa;
    });
}

sucktac_status sucktac_force_curve(const sucktac_membrane_params* params,
                                   const double* sweep_kpa_gauge, size_t count, double* force_n,
                                   int* point_status) {
    if (auto s = require(params && (count == 0 || (sweep_kpa_gauge && force_n && point_status)),
                         "null argument")) return s;
    return guarded([&] {
        const auto core = to_core(*params);
        const std::vector<double> sweep(sweep_kpa_gauge, sweep_kpa_gauge + count);
        const auto curve = membrane::force_curve(core, sweep);
        for (size_t i = 0; i < count; ++i) {
            force_n[i] = curve.samples[i].ok ? curve.samples[i].force_n
                                             : std::numeric_limits<double>::quiet_NaN();
            point_status[i] = curve.samples[i].ok ? SUCKTAC_OK : SUCKTAC_ERROR_VALIDITY;
        }
    });
}

sucktac_status sucktac_force_curve_csv_file(const sucktac_membrane_params* params,
                                            const double* sweep_kpa_gauge, size_t count,
                                            const char* path) {
    if (auto s = require(params && path && (count == 0 || sweep_kpa_gauge), "null argument"))
        return s;
    return guarded([&] {
        const auto core = to_core(*params);
        const std::vector<double> sweep(sweep_kpa_gauge, sweep_kpa_gauge + count);
        write_text_file(path, membrane::force_curve_csv(membrane::force_curve(core, sweep)));
    });
}

sucktac_status sucktac_detachment_work(const double* displacement_mm, const double* force_n,
                                       size_t count, double* work_mj) {
    if (auto s = require(displacement_mm && force_n && work_mj, "null argument")) return s;
    return guarded([&] {
        std::vector<std::pair<double, double>> series;
        series.reserve(count);
        for (size_t i = 0; i < count; ++i) series.emplace_back(displacement_mm[i], force_n[i]);
        *work_mj = membrane::detachment_work_mj(series);
    });
}

sucktac_status sucktac_detachment_work_csv_file(const char* path, double* work_mj) {
    if (auto s = require(path && work_mj, "null argument")) return s;
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw io_error(std::string("cannot open: ") + path);
        *work_mj = membrane::read_detachment_csv(in, path).work_mj;
    });
}

/* ---------------- lip geometry ---------------- */

void sucktac_lip_spec_default(sucktac_lip_spec* out) {
    if (!out) return;
    out->cycles = 8;
    out->base_radius_mm = 28.5;
    out->amplitude_mm = 1.5;
    out->inner_diameter_mm = 40.0;
}

sucktac_status sucktac_lip_contour(const sucktac_lip_spec* spec, int samples, double* xy) {
    if (auto s = require(spec && xy, "null argument")) return s;
    return guarded([&] {
        const auto pts = lip::lip_contour(to_core(*spec), samples);
        for (size_t i = 0; i < pts.size(); ++i) {
            xy[2 * i] = pts[i].x;
            xy[2 * i + 1] = pts[i].y;
        }
    });
}

sucktac_status sucktac_substrate_height(double wavelength_mm, double x_mm, double* height_mm) {
    if (auto s = require(height_mm, "null argument")) return s;
    return guarded([&] {
        lip::SubstrateSpec spec;
        spec.wavelength_mm = wavelength_mm;
        *height_mm = lip::substrate_height(spec, x_mm);
    });
}

sucktac_status sucktac_conformity_demand(const sucktac_lip_spec* spec, double wavelength_mm,
                                         int samples, double* demand_mm) {
    if (auto s = require(spec && demand_mm, "null argument")) return s;
    return guarded([&] {
        lip::SubstrateSpec substrate;
        substrate.wavelength_mm = wavelength_mm;
        *demand_mm = lip::conformity_demand(to_core(*spec), substrate, samples);
    });
}

sucktac_status sucktac_hole_layout(int holes_per_ring, int rings, double hole_diameter_mm,
                                   double ring_interval_mm, double base_radius_mm,
                                   double* centers, size_t capacity, size_t* count) {
    if (auto s = require(centers && count, "null argument")) return s;
    return guarded([&] {
        const auto layout = lip::hole_layout(holes_per_ring, rings, hole_diameter_mm,
                                             ring_interval_mm, base_radius_mm);
        if (capacity < 2 * layout.centers.size())
            throw std::invalid_argument("hole_layout: centers capacity too small");
        for (size_t i = 0; i < layout.centers.size(); ++i) {
            centers[2 * i] = layout.centers[i].x;
            centers[2 * i + 1] = layout.centers[i].y;
        }
        *count = layout.centers.size();
    });
}

sucktac_status sucktac_lip_export(const sucktac_lip_spec* spec, int samples, int holes_per_ring,
                                  int rings, const char* contour_csv_path,
                                  const char* holes_csv_path, const char* svg_path) {
    if (auto s = require(spec, "null argument")) return s;
    return guarded([&] {
        const auto contour = lip::lip_contour(to_core(*spec), samples);
        lip::HoleLayout layout;
        const bool with_holes = holes_per_ring > 0 && rings > 0;
        if (with_holes)
            layout = lip::hole_layout(holes_per_ring, rings, 0.5, 0.6,
                                      lip::default_ring_base_radius_mm);
        if (contour_csv_path) write_text_file(contour_csv_path, lip::points_csv(contour));
        if (holes_csv_path && with_holes)
            write_text_file(holes_csv_path, lip::points_csv(layout.centers));
        if (svg_path)
            write_text_file(svg_path, lip::layout_svg(contour, with_holes ? &layout : nullptr));
    });
}

/* ---------------- tactile synthesis ---------------- */

void sucktac_sample_capture(uint64_t seed, sucktac_capture_params* out) {
    if (!out) return;
    const auto c = tactile::sample_capture(seed);
    out->press_force_n = c.press_force_n;
    out->pressure_kpa = c.pressure_kpa;
    out->offset_x_um = c.offset_x_um;
    out->offset_y_um = c.offset_y_um;
}

uint64_t sucktac_derive_seed(uint64_t base, uint64_t index) { return rng::derive(base, index); }

sucktac_status sucktac_heightmap_flat(int width, int height, double pitch_um,
                                      sucktac_heightmap** out) {
    if (auto s = require(out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_heightmap{heightmap::flat(width, height, pitch_um)}; });
}

sucktac_status sucktac_heightmap_sandpaper(int mesh, uint64_t seed, int width, int height,
                                           sucktac_heightmap** out) {
    if (auto s = require(out, "null argument")) return s;
    return guarded(
        [&] { *out = new sucktac_heightmap{heightmap::sandpaper(mesh, seed, width, height)}; });
}

sucktac_status sucktac_heightmap_texture(int class_id, uint64_t seed, sucktac_heightmap** out) {
    if (auto s = require(out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_heightmap{heightmap::texture(class_id, seed)}; });
}

void sucktac_heightmap_free(sucktac_heightmap* map) { delete map; }

int sucktac_heightmap_grains(const sucktac_heightmap* map) {
    return map ? map->map.grains_placed : 0;
}

const char* sucktac_texture_class_name(int class_id) {
    if (class_id < 0 || class_id >= heightmap::texture_class_count) return nullptr;
    return heightmap::texture_class_name(class_id);
}

int sucktac_texture_class_count(void) { return heightmap::texture_class_count; }

sucktac_status sucktac_render_tactile(const sucktac_heightmap* map,
                                      const sucktac_capture_params* params, uint64_t seed,
                                      sucktac_image** out) {
    if (auto s = require(map && params && out, "null argument")) return s;
    return guarded([&] {
        *out = new sucktac_image{tactile::render_tactile(map->map, to_core(*params), seed)};
    });
}

sucktac_status sucktac_render_resting(uint64_t seed, sucktac_image** out) {
    if (auto s = require(out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_image{tactile::render_resting(seed)}; });
}

void sucktac_image_free(sucktac_image* img) { delete img; }

sucktac_status sucktac_image_difference(const sucktac_image* img, const sucktac_image* ref,
                                        sucktac_image** out) {
    if (auto s = require(img && ref && out, "null argument")) return s;
    return guarded(
        [&] { *out = new sucktac_image{tactile::difference_image(img->img, ref->img)}; });
}

sucktac_status sucktac_image_apply_center_mask(sucktac_image* img, double radius_fraction) {
    if (auto s = require(img, "null argument")) return s;
    return guarded([&] { img->img = tactile::apply_center_mask(img->img, radius_fraction); });
}

sucktac_status sucktac_image_quantize_8bit(sucktac_image* img) {
    if (auto s = require(img, "null argument")) return s;
    return guarded([&] { tactile::quantize_8bit(img->img); });
}

int sucktac_image_width(const sucktac_image* img) { return img ? img->img.width : 0; }
int sucktac_image_height(const sucktac_image* img) { return img ? img->img.height : 0; }

sucktac_status sucktac_image_pixels(const sucktac_image* img, float* pixels, size_t capacity) {
    if (auto s = require(img && pixels, "null argument")) return s;
    return guarded([&] {
        if (capacity < img->img.pixels.size())
            throw std::invalid_argument("image_pixels: capacity too small");
        std::memcpy(pixels, img->img.pixels.data(), img->img.pixels.size() * sizeof(float));
    });
}

sucktac_status sucktac_image_mean_intensity(const sucktac_image* img, double* mean) {
    if (auto s = require(img && mean, "null argument")) return s;
    return guarded([&] {
        double sum = 0.0;
        for (float p : img->img.pixels) sum += p;
        *mean = img->img.pixels.empty() ? 0.0 : sum / double(img->img.pixels.size());
    });
}

sucktac_status sucktac_image_write_pgm(const sucktac_image* img, const char* path) {
    if (auto s = require(img && path, "null argument")) return s;
    return guarded([&] { tactile::write_pgm_file(img->img, path); });
}

sucktac_status sucktac_image_read_pgm(const char* path, sucktac_image** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_image{tactile::read_pgm_file(path)}; });
}

/* ---------------- spectral perception ---------------- */

sucktac_status sucktac_spectrum_write_pgm(const sucktac_image* img, const char* path) {
    if (auto s = require(img && path, "null argument")) return s;
    return guarded([&] {
        const auto spec = spectral::fft2_log_spectrum(img->img);
        tactile::write_pgm_file(spectral::spectrum_to_image(spec), path);
    });
}

sucktac_status sucktac_radial_band_energies(const sucktac_image* img, int bands,
                                            double* fractions) {
    if (auto s = require(img && fractions, "null argument")) return s;
    return guarded([&] {
        const auto e = spectral::radial_band_energies(spectral::fft2_log_spectrum(img->img), bands);
        for (size_t i = 0; i < e.size(); ++i) fractions[i] = e[i];
    });
}

sucktac_status sucktac_roughness_index(const sucktac_image* masked_diff, double* index) {
    if (auto s = require(masked_diff && index, "null argument")) return s;
    return guarded([&] { *index = spectral::roughness_index(masked_diff->img); });
}

sucktac_status sucktac_image_features(const sucktac_image* masked,
                                      double features[SUCKTAC_FEATURE_DIM]) {
    if (auto s = require(masked && features, "null argument")) return s;
    return guarded([&] {
        const auto f = spectral::features(masked->img);
        for (int d = 0; d < SUCKTAC_FEATURE_DIM; ++d) features[d] = f[size_t(d)];
    });
}

sucktac_status sucktac_model_fit(const double* features, const int* labels, size_t count,
                                 int classes, const char* const* class_names,
                                 sucktac_model** out) {
    if (auto s = require(features && labels && class_names && out && classes > 0,
                         "null argument")) return s;
    return guarded([&] {
        std::vector<std::string> names;
        for (int c = 0; c < classes; ++c) names.emplace_back(class_names[c]);
        *out = new sucktac_model{spectral::fit_classifier(
            unpack_features(features, count), std::vector<int>(labels, labels + count), names)};
    });
}

void sucktac_model_free(sucktac_model* model) { delete model; }

sucktac_status sucktac_model_classify(const sucktac_model* model,
                                      const double features[SUCKTAC_FEATURE_DIM], int* label,
                                      double* margin) {
    if (auto s = require(model && features && label && margin, "null argument")) return s;
    return guarded([&] {
        std::array<double, spectral::feature_dim> f{};
        for (int d = 0; d < SUCKTAC_FEATURE_DIM; ++d) f[size_t(d)] = features[d];
        const auto r = spectral::classify(model->model, f);
        *label = r.label;
        *margin = r.margin;
    });
}

sucktac_status sucktac_model_evaluate(const sucktac_model* model, const double* features,
                                      const int* labels, size_t count, int* counts,
                                      double* accuracy) {
    if (auto s = require(model && features && labels && counts && accuracy, "null argument"))
        return s;
    return guarded([&] {
        const auto cm = spectral::evaluate(model->model, unpack_features(features, count),
                                           std::vector<int>(labels, labels + count));
        std::memcpy(counts, cm.counts.data(), cm.counts.size() * sizeof(int));
        *accuracy = cm.accuracy;
    });
}

sucktac_status sucktac_model_save(const sucktac_model* model, const char* path) {
    if (auto s = require(model && path, "null argument")) return s;
    return guarded([&] { spectral::save_model(model->model, path); });
}

sucktac_status sucktac_model_load(const char* path, sucktac_model** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_model{spectral::load_model(path)}; });
}

sucktac_status sucktac_stratified_split(const int* labels, size_t count, double test_fraction,
                                        uint64_t seed, uint8_t* is_test) {
    if (auto s = require(labels && is_test, "null argument")) return s;
    return guarded([&] {
        const auto flags = spectral::stratified_split(std::vector<int>(labels, labels + count),
                                                      test_fraction, seed);
        std::memcpy(is_test, flags.data(), flags.size());
    });
}

/* ---------------- dataset pipeline ---------------- */

sucktac_status sucktac_dataset_generate(int per_class, uint64_t seed, const char* out_dir) {
    if (auto s = require(out_dir, "null argument")) return s;
    return guarded([&] {
        dataset::Options opts;
        opts.per_class = per_class;
        opts.seed = seed;
        dataset::write(dataset::generate(opts), out_dir);
    });
}

sucktac_status sucktac_dataset_classify_eval(const char* dataset_dir, uint64_t split_seed,
                                             const char* confusion_csv_path,
                                             const char* model_path, double* accuracy) {
    if (auto s = require(dataset_dir && accuracy, "null argument")) return s;
    return guarded([&] {
        const auto items = dataset::load(dataset_dir);
        const auto result = dataset::run_classification(items, split_seed);
        if (confusion_csv_path)
            write_text_file(confusion_csv_path, spectral::confusion_csv(result.confusion));
        if (model_path) spectral::save_model(result.model, model_path);
        *accuracy = result.confusion.accuracy;
    });
}

/* ---------------- gait plans ---------------- */

sucktac_status sucktac_grasp_plan_ex(const char* const* class_labels,
                                     const char* const* drop_poses, size_t count, double dwell_s,
                                     sucktac_plan** out) {
    if (auto s = require(class_labels && drop_poses && out, "null argument")) return s;
    return guarded([&] {
        std::map<std::string, std::string> destinations;
        for (size_t i = 0; i < count; ++i) destinations[class_labels[i]] = drop_poses[i];
        *out = new sucktac_plan{gait::grasp_cycle_plan(destinations, dwell_s)};
    });
}

sucktac_status sucktac_grasp_plan(const char* const* class_labels, const char* const* drop_poses,
                                  size_t count, sucktac_plan** out) {
    return sucktac_grasp_plan_ex(class_labels, drop_poses, count, gait::default_dwell_s, out);
}

sucktac_status sucktac_crawl_plan_ex(double dwell_s, double elongation_kpa, sucktac_plan** out) {
    if (auto s = require(out, "null argument")) return s;
    return guarded(
        [&] { *out = new sucktac_plan{gait::crawl_cycle_sequence(dwell_s, elongation_kpa)}; });
}

sucktac_status sucktac_crawl_plan(sucktac_plan** out) {
    return sucktac_crawl_plan_ex(gait::default_dwell_s, gait::default_elongation_kpa, out);
}

sucktac_status sucktac_steer_plan_ex(int direction, double dwell_s, double elongation_kpa,
                                     sucktac_plan** out) {
    if (auto s = require(out && (direction == 0 || direction == 1), "direction must be 0 or 1"))
        return s;
    return guarded([&] {
        *out = new sucktac_plan{gait::steer_sequence(
            direction == 0 ? gait::Steer::left : gait::Steer::right, dwell_s, elongation_kpa)};
    });
}

sucktac_status sucktac_steer_plan(int direction, sucktac_plan** out) {
    return sucktac_steer_plan_ex(direction, gait::default_dwell_s, gait::default_elongation_kpa,
                                 out);
}

void sucktac_plan_free(sucktac_plan* plan) { delete plan; }

int sucktac_plan_phase_count(const sucktac_plan* plan) {
    return plan ? int(plan->plan.phases.size()) : 0;
}

sucktac_status sucktac_plan_target(const sucktac_plan* plan, int phase, int channel,
                                   double* pressure_kpa) {
    if (auto s = require(plan && pressure_kpa, "null argument")) return s;
    return guarded([&] {
        if (phase < 0 || size_t(phase) >= plan->plan.phases.size())
            throw std::invalid_argument("plan_target: phase out of range");
        if (channel < 0 || channel >= SUCKTAC_CHANNEL_COUNT)
            throw std::invalid_argument("plan_target: channel out of range");
        for (const auto& t : plan->plan.phases[size_t(phase)].targets) {
            if (int(t.channel) == channel) {
                *pressure_kpa = t.pressure_kpa;
                return;
            }
        }
        throw std::invalid_argument("plan_target: channel not targeted in this phase");
    });
}

sucktac_status sucktac_plan_validate(const sucktac_plan* plan) {
    if (auto s = require(plan, "null argument")) return s;
    return guarded([&] { gait::validate_plan(plan->plan); });
}

sucktac_status sucktac_plan_write(const sucktac_plan* plan, const char* path) {
    if (auto s = require(plan && path, "null argument")) return s;
    return guarded([&] { write_text_file(path, gait::plan_text(plan->plan)); });
}

sucktac_status sucktac_plan_read(const char* path, sucktac_plan** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw io_error(std::string("cannot open: ") + path);
        *out = new sucktac_plan{gait::parse_plan_text(in)};
    });
}

sucktac_status sucktac_plan_timeline_csv_file(const sucktac_plan* plan, int cycles,
                                              const char* path) {
    if (auto s = require(plan && path, "null argument")) return s;
    return guarded([&] {
        write_text_file(path, gait::timeline_csv(gait::pressure_timeline(plan->plan, cycles)));
    });
}

sucktac_status sucktac_plan_resolve_destination(const sucktac_plan* plan,
                                                const char* class_label, char* pose,
                                                size_t capacity) {
    if (auto s = require(plan && class_label && pose, "null argument")) return s;
    return guarded([&] {
        const std::string dest = gait::resolve_destination(plan->plan, class_label);
        if (dest.size() + 1 > capacity)
            throw std::invalid_argument("resolve_destination: pose buffer too small");
        std::memcpy(pose, dest.c_str(), dest.size() + 1);
    });
}

/* ---------------- locomotion ---------------- */

sucktac_status sucktac_world_load(const char* path, sucktac_world** out) {
    if (auto s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_world{sim::load_world(path)}; });
}

sucktac_status sucktac_world_parse(const char* text, sucktac_world** out) {
    if (auto s = require(text && out, "null argument")) return s;
    return guarded([&] { *out = new sucktac_world{sim::parse_world(text)}; });
}

void sucktac_world_free(sucktac_world* world) { delete world; }

sucktac_status sucktac_world_size(const sucktac_world* world, int* width, int* height) {
    if (auto s = require(world && width && height, "null argument")) return s;
    *width = world->world.width;
    *height = world->world.height;
    return SUCKTAC_OK;
}

sucktac_status sucktac_world_start(const sucktac_world* world, int* x, int* y) {
    if (auto s = require(world && x && y, "null argument")) return s;
    *x = world->world.start_x;
    *y = world->world.start_y;
    return SUCKTAC_OK;
}

sucktac_status sucktac_run_episode(const sucktac_world* world, int start_x, int start_y,
                                   int heading, int max_steps, uint64_t seed,
                                   sucktac_episode** out) {
    if (auto s = require(world && out, "null argument")) return s;
    if (auto s = require(heading >= 0 && heading <= 3, "heading must be 0..3")) return s;
    return guarded([&] {
        *out = new sucktac_episode{sim::run_episode(world->world, start_x, start_y,
                                                    sim::Heading(heading), max_steps, seed)};
    });
}

void sucktac_episode_free(sucktac_episode* episode) { delete episode; }

int sucktac_episode_steps(const sucktac_episode* episode) {
    return episode ? int(episode->episode.log.size()) : 0;
}

int sucktac_episode_halted(const sucktac_episode* episode) {
    return episode && episode->episode.halted ? 1 : 0;
}

sucktac_status sucktac_episode_trajectory_csv_file(const sucktac_episode* episode,
                                                   const char* path) {
    if (auto s = require(episode && path, "null argument")) return s;
    return guarded([&] { write_text_file(path, sim::trajectory_csv(episode->episode)); });
}

sucktac_status sucktac_episode_timeline_csv_file(const sucktac_episode* episode,
                                                 const char* path) {
    if (auto s = require(episode && path, "null argument")) return s;
    return guarded([&] { write_text_file(path, gait::timeline_csv(episode->episode.timeline)); });
}

} /* extern "C" */
