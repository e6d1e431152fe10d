#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "image.hpp"
#include "spectral.hpp"

namespace sucktac::dataset {

struct Item {
    tactile::TactileImage image;  // masked, 8-bit quantized (matches the persisted form)
    int class_id = -1;
    tactile::CaptureParams capture;
    uint64_t seed = 0;
    std::string rel_path;
};

struct Options {
    int per_class = 100;
    uint64_t seed = 1;
    double mask_radius_fraction = tactile::default_mask_radius_fraction;
};

/// Synthesize per_class masked captures for each of the 18 texture
/// families under randomly sampled press parameters. Item seeds fan out
/// from the base seed by stable item index, so any item is reproducible
/// in isolation.
std::vector<Item> generate(const Options& opts);

/// Manifest CSV: `path,class_id,press_force_n,pressure_kpa,seed`.
std::string manifest_csv(const std::vector<Item>& items);

/// Write PGM files plus manifest.csv under out_dir (created if needed).
void write(const std::vector<Item>& items, const std::string& out_dir);

/// Load a dataset previously written by write(); paths resolve against dir.
std::vector<Item> load(const std::string& dir);

struct ExperimentResult {
    spectral::CentroidModel model;
    spectral::ConfusionMatrix confusion;
};

/// Stratified 80/20 split (deterministic in split_seed), fit on the
/// training side, evaluate on the held-out side.
ExperimentResult run_classification(const std::vector<Item>& items, uint64_t split_seed);

}  // namespace sucktac::dataset
