/* sucktac - suction-mechanics, tactile-synthesis and gait toolkit.
 *
 * C API over the C++ core: opaque handles, integer status codes, no
 * exceptions across the boundary. Every created handle is released by the
 * matching _free call; out-parameters are written only on SUCKTAC_OK.
 * sucktac_last_error() returns a thread-local detail message for the most
 * recent failure.
 */
#ifndef SUCKTAC_H
#define SUCKTAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SUCKTAC_API __declspec(dllexport)
#else
#define SUCKTAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sucktac_status {
    SUCKTAC_OK = 0,
    SUCKTAC_ERROR_INVALID_ARGUMENT = 1,
    SUCKTAC_ERROR_VALIDITY = 2,       /* outside model validity envelope */
    SUCKTAC_ERROR_NO_BRACKET = 3,
    SUCKTAC_ERROR_NO_CONVERGENCE = 4,
    SUCKTAC_ERROR_IO = 5,
    SUCKTAC_ERROR_PARSE = 6,
    SUCKTAC_ERROR_ZERO_ENERGY = 7,
    SUCKTAC_ERROR_INTERNAL = 8
} sucktac_status;

SUCKTAC_API const char* sucktac_version(void);
SUCKTAC_API const char* sucktac_status_name(sucktac_status status);
SUCKTAC_API const char* sucktac_last_error(void);

/* ------------------------------------------------------------------ */
/* suction mechanics                                                    */

typedef struct sucktac_membrane_params {
    double radius_mm;        /* membrane radius R */
    double thickness_mm;     /* film thickness t */
    double shear_c_mpa;      /* neo-Hookean constant C */
    double p_atm_mpa;        /* atmospheric pressure */
    double standoff_mm;      /* initial membrane-substrate height h */
} sucktac_membrane_params;

typedef struct sucktac_suction_solution {
    double deflection_mm;
    double arc_length_mm;
    double radial_stress_mpa;
    double edge_angle_rad;
    double gap_pressure_mpa;
    double pressure_difference_mpa;
    double force_n;
    double residual_mpa;
} sucktac_suction_solution;

SUCKTAC_API void sucktac_membrane_params_default(sucktac_membrane_params* out);
SUCKTAC_API sucktac_status sucktac_membrane_validate(const sucktac_membrane_params* params);

/* cavity pressure as gauge kPa (<= 0; 0..-15 supported) */
SUCKTAC_API sucktac_status sucktac_solve_suction(const sucktac_membrane_params* params,
                                                 double p_cavity_kpa_gauge,
                                                 sucktac_suction_solution* out);

/* per-point statuses land in point_status (SUCKTAC_OK or failure);
 * forces of failed points are NaN. Returns OK when the sweep is valid,
 * regardless of per-point failures. */
SUCKTAC_API sucktac_status sucktac_force_curve(const sucktac_membrane_params* params,
                                               const double* sweep_kpa_gauge, size_t count,
                                               double* force_n, int* point_status);

SUCKTAC_API sucktac_status sucktac_force_curve_csv_file(const sucktac_membrane_params* params,
                                                        const double* sweep_kpa_gauge,
                                                        size_t count, const char* path);

/* trapezoidal detachment work (displacement mm, force N -> mJ) */
SUCKTAC_API sucktac_status sucktac_detachment_work(const double* displacement_mm,
                                                   const double* force_n, size_t count,
                                                   double* work_mj);
SUCKTAC_API sucktac_status sucktac_detachment_work_csv_file(const char* path, double* work_mj);

/* ------------------------------------------------------------------ */
/* lip geometry                                                         */

typedef struct sucktac_lip_spec {
    int cycles;               /* N; 0 = circle */
    double base_radius_mm;    /* R0 */
    double amplitude_mm;      /* A */
    double inner_diameter_mm;
} sucktac_lip_spec;

SUCKTAC_API void sucktac_lip_spec_default(sucktac_lip_spec* out);

/* xy: interleaved x0,y0,x1,y1,... capacity 2*samples doubles */
SUCKTAC_API sucktac_status sucktac_lip_contour(const sucktac_lip_spec* spec, int samples,
                                               double* xy);

/* wavelength <= 0 means flat */
SUCKTAC_API sucktac_status sucktac_substrate_height(double wavelength_mm, double x_mm,
                                                    double* height_mm);

SUCKTAC_API sucktac_status sucktac_conformity_demand(const sucktac_lip_spec* spec,
                                                     double wavelength_mm, int samples,
                                                     double* demand_mm);

/* centers: interleaved xy, capacity 2*rings*holes_per_ring doubles;
 * count receives the number of holes written */
SUCKTAC_API sucktac_status sucktac_hole_layout(int holes_per_ring, int rings,
                                               double hole_diameter_mm, double ring_interval_mm,
                                               double base_radius_mm, double* centers,
                                               size_t capacity, size_t* count);

SUCKTAC_API sucktac_status sucktac_lip_export(const sucktac_lip_spec* spec, int samples,
                                              int holes_per_ring, int rings,
                                              const char* contour_csv_path,
                                              const char* holes_csv_path,
                                              const char* svg_path);

/* ------------------------------------------------------------------ */
/* tactile synthesis                                                    */

typedef struct sucktac_heightmap sucktac_heightmap; /* opaque */
typedef struct sucktac_image sucktac_image;         /* opaque */

typedef struct sucktac_capture_params {
    double press_force_n;  /* [3, 5] */
    double pressure_kpa;   /* [5, 8] */
    double offset_x_um;
    double offset_y_um;
} sucktac_capture_params;

SUCKTAC_API void sucktac_sample_capture(uint64_t seed, sucktac_capture_params* out);
SUCKTAC_API uint64_t sucktac_derive_seed(uint64_t base, uint64_t index);

SUCKTAC_API sucktac_status sucktac_heightmap_flat(int width, int height, double pitch_um,
                                                  sucktac_heightmap** out);
SUCKTAC_API sucktac_status sucktac_heightmap_sandpaper(int mesh, uint64_t seed, int width,
                                                       int height, sucktac_heightmap** out);
SUCKTAC_API sucktac_status sucktac_heightmap_texture(int class_id, uint64_t seed,
                                                     sucktac_heightmap** out);
SUCKTAC_API void sucktac_heightmap_free(sucktac_heightmap* map);
SUCKTAC_API int sucktac_heightmap_grains(const sucktac_heightmap* map);
SUCKTAC_API const char* sucktac_texture_class_name(int class_id);
SUCKTAC_API int sucktac_texture_class_count(void);

SUCKTAC_API sucktac_status sucktac_render_tactile(const sucktac_heightmap* map,
                                                  const sucktac_capture_params* params,
                                                  uint64_t seed, sucktac_image** out);
SUCKTAC_API sucktac_status sucktac_render_resting(uint64_t seed, sucktac_image** out);
SUCKTAC_API void sucktac_image_free(sucktac_image* img);

SUCKTAC_API sucktac_status sucktac_image_difference(const sucktac_image* img,
                                                    const sucktac_image* ref,
                                                    sucktac_image** out);
SUCKTAC_API sucktac_status sucktac_image_apply_center_mask(sucktac_image* img,
                                                           double radius_fraction);
SUCKTAC_API sucktac_status sucktac_image_quantize_8bit(sucktac_image* img);
SUCKTAC_API int sucktac_image_width(const sucktac_image* img);
SUCKTAC_API int sucktac_image_height(const sucktac_image* img);
/* pixels: row-major floats, capacity width*height */
SUCKTAC_API sucktac_status sucktac_image_pixels(const sucktac_image* img, float* pixels,
                                                size_t capacity);
SUCKTAC_API sucktac_status sucktac_image_mean_intensity(const sucktac_image* img, double* mean);

SUCKTAC_API sucktac_status sucktac_image_write_pgm(const sucktac_image* img, const char* path);
SUCKTAC_API sucktac_status sucktac_image_read_pgm(const char* path, sucktac_image** out);

/* ------------------------------------------------------------------ */
/* spectral perception                                                  */

#define SUCKTAC_FEATURE_DIM 11 /* 8 radial bands + mean, variance, skewness */

typedef struct sucktac_model sucktac_model; /* opaque */

SUCKTAC_API sucktac_status sucktac_spectrum_write_pgm(const sucktac_image* img,
                                                      const char* path);
SUCKTAC_API sucktac_status sucktac_radial_band_energies(const sucktac_image* img, int bands,
                                                        double* fractions);
SUCKTAC_API sucktac_status sucktac_roughness_index(const sucktac_image* masked_diff,
                                                   double* index);
SUCKTAC_API sucktac_status sucktac_image_features(const sucktac_image* masked,
                                                  double features[SUCKTAC_FEATURE_DIM]);

SUCKTAC_API sucktac_status sucktac_model_fit(const double* features, const int* labels,
                                             size_t count, int classes,
                                             const char* const* class_names,
                                             sucktac_model** out);
SUCKTAC_API void sucktac_model_free(sucktac_model* model);
SUCKTAC_API sucktac_status sucktac_model_classify(const sucktac_model* model,
                                                  const double features[SUCKTAC_FEATURE_DIM],
                                                  int* label, double* margin);
/* counts: capacity classes*classes ints, row = true class */
SUCKTAC_API sucktac_status sucktac_model_evaluate(const sucktac_model* model,
                                                  const double* features, const int* labels,
                                                  size_t count, int* counts, double* accuracy);
SUCKTAC_API sucktac_status sucktac_model_save(const sucktac_model* model, const char* path);
SUCKTAC_API sucktac_status sucktac_model_load(const char* path, sucktac_model** out);

/* is_test: capacity count bytes; deterministic class-stratified split */
SUCKTAC_API sucktac_status sucktac_stratified_split(const int* labels, size_t count,
                                                    double test_fraction, uint64_t seed,
                                                    uint8_t* is_test);

/* ------------------------------------------------------------------ */
/* dataset pipeline                                                     */

/* generate per_class x 18 masked 8-bit captures + manifest.csv under out_dir */
SUCKTAC_API sucktac_status sucktac_dataset_generate(int per_class, uint64_t seed,
                                                    const char* out_dir);
/* load a written dataset, run the stratified 80/20 experiment; emits the
 * confusion CSV and the model file when paths are non-NULL */
SUCKTAC_API sucktac_status sucktac_dataset_classify_eval(const char* dataset_dir,
                                                         uint64_t split_seed,
                                                         const char* confusion_csv_path,
                                                         const char* model_path,
                                                         double* accuracy);

/* ------------------------------------------------------------------ */
/* gait plans                                                           */

typedef struct sucktac_plan sucktac_plan; /* opaque */

#define SUCKTAC_CHANNEL_COUNT 6

SUCKTAC_API sucktac_status sucktac_grasp_plan(const char* const* class_labels,
                                              const char* const* drop_poses, size_t count,
                                              sucktac_plan** out);
SUCKTAC_API sucktac_status sucktac_crawl_plan(sucktac_plan** out);
/* direction: 0 = left, 1 = right */
SUCKTAC_API sucktac_status sucktac_steer_plan(int direction, sucktac_plan** out);

/* variants with configurable per-phase dwell (s) and actuator elongation
 * pressure (kPa); the plain versions use 1.0 s and +20 kPa */
SUCKTAC_API sucktac_status sucktac_grasp_plan_ex(const char* const* class_labels,
                                                 const char* const* drop_poses, size_t count,
                                                 double dwell_s, sucktac_plan** out);
SUCKTAC_API sucktac_status sucktac_crawl_plan_ex(double dwell_s, double elongation_kpa,
                                                 sucktac_plan** out);
SUCKTAC_API sucktac_status sucktac_steer_plan_ex(int direction, double dwell_s,
                                                 double elongation_kpa, sucktac_plan** out);
SUCKTAC_API void sucktac_plan_free(sucktac_plan* plan);

SUCKTAC_API int sucktac_plan_phase_count(const sucktac_plan* plan);
/* pressure target of a phase on a channel (0=head,1=tail,2..5=actuators) */
SUCKTAC_API sucktac_status sucktac_plan_target(const sucktac_plan* plan, int phase, int channel,
                                               double* pressure_kpa);
SUCKTAC_API sucktac_status sucktac_plan_validate(const sucktac_plan* plan);
SUCKTAC_API sucktac_status sucktac_plan_write(const sucktac_plan* plan, const char* path);
SUCKTAC_API sucktac_status sucktac_plan_read(const char* path, sucktac_plan** out);
SUCKTAC_API sucktac_status sucktac_plan_timeline_csv_file(const sucktac_plan* plan, int cycles,
                                                          const char* path);
SUCKTAC_API sucktac_status sucktac_plan_resolve_destination(const sucktac_plan* plan,
                                                            const char* class_label,
                                                            char* pose, size_t capacity);

/* ------------------------------------------------------------------ */
/* locomotion                                                           */

typedef struct sucktac_world sucktac_world;     /* opaque */
typedef struct sucktac_episode sucktac_episode; /* opaque */

SUCKTAC_API sucktac_status sucktac_world_load(const char* path, sucktac_world** out);
SUCKTAC_API sucktac_status sucktac_world_parse(const char* text, sucktac_world** out);
SUCKTAC_API void sucktac_world_free(sucktac_world* world);
SUCKTAC_API sucktac_status sucktac_world_size(const sucktac_world* world, int* width,
                                              int* height);
/* -1,-1 when the map has no S marker */
SUCKTAC_API sucktac_status sucktac_world_start(const sucktac_world* world, int* x, int* y);

/* heading: 0=N 1=E 2=S 3=W */
SUCKTAC_API sucktac_status sucktac_run_episode(const sucktac_world* world, int start_x,
                                               int start_y, int heading, int max_steps,
                                               uint64_t seed, sucktac_episode** out);
SUCKTAC_API void sucktac_episode_free(sucktac_episode* episode);
SUCKTAC_API int sucktac_episode_steps(const sucktac_episode* episode);
SUCKTAC_API int sucktac_episode_halted(const sucktac_episode* episode);
SUCKTAC_API sucktac_status sucktac_episode_trajectory_csv_file(const sucktac_episode* episode,
                                                               const char* path);
SUCKTAC_API sucktac_status sucktac_episode_timeline_csv_file(const sucktac_episode* episode,
                                                             const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUCKTAC_H */
