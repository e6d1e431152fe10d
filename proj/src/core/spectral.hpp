#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "image.hpp"

namespace sucktac::spectral {

using tactile::TactileImage;

inline constexpr int band_count = 8;
inline constexpr int feature_dim = band_count + 3;  // bands + mean, variance, skewness

/// Center-shifted log magnitudes of the 2-D DFT: log(1 + |F|).
struct Spectrum {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major, zero frequency at (w/2, h/2)
    bool centered = true;

    double at(int x, int y) const { return values[size_t(y) * width + x]; }
};

/// 2-D FFT magnitude spectrum of a 640x480 frame (signed or masked).
Spectrum fft2_log_spectrum(const TactileImage& img);

/// Squared-magnitude energy fractions in `bands` equal-width annuli of
/// elliptically normalized radius (axis Nyquist = 1); the DC bin is
/// excluded and corner bins beyond radius 1 count toward the outer band.
/// All-zero spectra return all-zero fractions.
std::vector<double> radial_band_energies(const Spectrum& spec, int bands);

/// Upper-half band energy over total non-DC energy of a masked difference
/// image; higher = rougher. Throws zero_energy_error when the image
/// carries no energy at all.
double roughness_index(const TactileImage& masked_diff);

/// Spectral + statistical descriptor of a masked image: band fractions of
/// the disk-demeaned frame plus mean, variance and skewness of the pixels
/// inside the mask disk. Demeaning keeps the band fractions independent of
/// a global intensity offset under the disk mask.
std::array<double, feature_dim> features(const TactileImage& masked);

/// z-normalized nearest-centroid classifier.
struct CentroidModel {
    int classes = 0;
    std::vector<std::string> labels;
    std::array<double, feature_dim> norm_mean{};
    std::array<double, feature_dim> norm_std{};
    std::vector<std::array<double, feature_dim>> centroids;  // one per class

    bool trained() const { return classes > 0; }
};

struct Classification {
    int label = -1;
    double margin = 0.0;  // runner-up distance minus best distance
};

/// Requires >= 2 classes and >= 5 samples per class; zero-variance feature
/// dimensions fall back to unit scale. Deterministic.
CentroidModel fit_classifier(const std::vector<std::array<double, feature_dim>>& feats,
                             const std::vector<int>& labels,
                             const std::vector<std::string>& class_names);

Classification classify(const CentroidModel& model, const std::array<double, feature_dim>& feat);
Classification classify(const CentroidModel& model, const TactileImage& masked);

struct ConfusionMatrix {
    int classes = 0;
    std::vector<int> counts;  // counts[true * classes + predicted]
    double accuracy = 0.0;
    std::vector<double> per_class_recall;

    int at(int truth, int predicted) const { return counts[size_t(truth) * classes + predicted]; }
};

ConfusionMatrix evaluate(const CentroidModel& model,
                         const std::vector<std::array<double, feature_dim>>& feats,
                         const std::vector<int>& labels);

/// CSV: header `true_class,pred_0,...`, one row per true class.
std::string confusion_csv(const ConfusionMatrix& cm);

/// Deterministic class-stratified split; returns is_test flags with
/// round(test_fraction * n) test items per class.
std::vector<uint8_t> stratified_split(const std::vector<int>& labels, double test_fraction,
                                      uint64_t seed);

// Plain-text model persistence (fixed %.12e formatting; save(load(f)) is
// byte-identical).
std::string model_text(const CentroidModel& model);
CentroidModel parse_model_text(std::istream& in);
void save_model(const CentroidModel& model, const std::string& path);
CentroidModel load_model(const std::string& path);

/// Scale a spectrum into an exportable frame (values / max, [0,1]).
TactileImage spectrum_to_image(const Spectrum& spec);

}  // namespace sucktac::spectral
