#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "core/errors.hpp"
#include "core/heightmap.hpp"
#include "core/image.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"

using namespace sucktac;
using tactile::TactileImage;

namespace {

TactileImage blank() {
    TactileImage img;
    img.pixels.assign(size_t(img.width) * img.height, 0.f);
    return img;
}

TactileImage sinusoid(int kx, int ky, double amp = 0.4, double offset = 0.5) {
    TactileImage img = blank();
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            img.at(x, y) = float(offset + amp * std::cos(2.0 * std::numbers::pi *
                                                         (double(kx) * x / img.width +
                                                          double(ky) * y / img.height)));
    return img;
}

// direct energy bookkeeping for the Parseval check
double image_energy(const TactileImage& img) {
    double e = 0.0;
    for (float p : img.pixels) e += double(p) * double(p);
    return e;
}

double spectrum_energy(const spectral::Spectrum& spec) {
    double e = 0.0;
    for (double v : spec.values) {
        const double mag = std::expm1(v);
        e += mag * mag;
    }
    return e;
}

}  // namespace

TEST_CASE("all-zero image gives an all-zero spectrum") {
    const auto spec = spectral::fft2_log_spectrum(blank());
    for (double v : spec.values) CHECK(v == 0.0);
}

TEST_CASE("constant image concentrates all energy in the DC bin") {
    TactileImage img = blank();
    for (auto& p : img.pixels) p = 0.25f;
    const auto spec = spectral::fft2_log_spectrum(img);
    const int cx = img.width / 2, cy = img.height / 2;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            if (x == cx && y == cy)
                CHECK(spec.at(x, y) > 0.0);
            else
                CHECK(spec.at(x, y) == doctest::Approx(0.0).epsilon(1e-9));
        }
}

TEST_CASE("pure sinusoid peaks are bin-exact and symmetric") {
    for (auto [kx, ky] : {std::pair{37, 0}, std::pair{0, 25}, std::pair{12, 9}}) {
        const auto spec = spectral::fft2_log_spectrum(sinusoid(kx, ky));
        const int cx = spec.width / 2, cy = spec.height / 2;
        double best = -1.0;
        int bx = 0, by = 0;
        for (int y = 0; y < spec.height; ++y)
            for (int x = 0; x < spec.width; ++x) {
                if (x == cx && y == cy) continue;
                if (spec.at(x, y) > best) {
                    best = spec.at(x, y);
                    bx = x - cx;
                    by = y - cy;
                }
            }
        const bool matches = (bx == kx && by == ky) || (bx == -kx && by == -ky);
        CHECK(matches);
        CHECK(spec.at(cx + kx, cy + ky) == doctest::Approx(spec.at(cx - kx, cy - ky)));
    }
}

TEST_CASE("Parseval: spectral energy equals N times image energy") {
    const auto map = heightmap::texture(9, 4);
    tactile::CaptureParams cap;
    const auto img = tactile::render_tactile(map, cap, 17);
    const auto spec = spectral::fft2_log_spectrum(img);
    const double n = double(img.width) * double(img.height);
    const double lhs = spectrum_energy(spec);
    const double rhs = n * image_energy(img);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-6);
}

TEST_CASE("band fractions partition the non-DC energy") {
    SUBCASE("DC-only spectrum yields all-zero bands") {
        TactileImage img = blank();
        for (auto& p : img.pixels) p = 1.0f;
        const auto bands = spectral::radial_band_energies(spectral::fft2_log_spectrum(img), 8);
        for (double b : bands) CHECK(b == 0.0);
    }
    SUBCASE("single outer-radius peak lands entirely in the outermost band") {
        // normalized radius 0.9 along the x axis: kx = 0.9 * (W/2)
        const auto spec = spectral::fft2_log_spectrum(sinusoid(288, 0));
        const auto bands = spectral::radial_band_energies(spec, 8);
        CHECK(bands[7] == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("fractions sum to one for busy spectra") {
        const auto map = heightmap::texture(13, 2);
        tactile::CaptureParams cap;
        const auto img = tactile::render_tactile(map, cap, 3);
        const auto bands = spectral::radial_band_energies(spectral::fft2_log_spectrum(img), 8);
        double total = 0.0;
        for (double b : bands) {
            CHECK(b >= 0.0);
            total += b;
        }
        CHECK(std::abs(total - 1.0) < 1e-9);
    }
    SUBCASE("full-frame mean offset does not move band fractions") {
        auto img = sinusoid(24, 10, 0.2, 0.4);
        const auto a = spectral::radial_band_energies(spectral::fft2_log_spectrum(img), 8);
        for (auto& p : img.pixels) p += 0.17f;
        const auto b = spectral::radial_band_energies(spectral::fft2_log_spectrum(img), 8);
        for (int k = 0; k < 8; ++k) CHECK(a[size_t(k)] == doctest::Approx(b[size_t(k)]).epsilon(1e-6));
    }
}

TEST_CASE("roughness index") {
    auto rough_diff = [](int mesh, uint64_t seed) {
        const auto map = heightmap::sandpaper(mesh, seed, 1280, 960);
        tactile::CaptureParams cap;
        cap.press_force_n = 5.0;
        cap.pressure_kpa = 8.0;
        const auto img = tactile::render_tactile(map, cap, rng::derive(seed, 1));
        const auto flat = heightmap::flat(1280, 960, heightmap::sandpaper_pitch_um);
        const auto ref = tactile::render_tactile(flat, cap, rng::derive(seed, 2));
        return tactile::apply_center_mask(tactile::difference_image(img, ref), 0.45);
    };

    SUBCASE("coarse grit reads rougher than fine grit (10-seed medians)") {
        std::vector<double> coarse, fine;
        for (uint64_t s = 0; s < 10; ++s) {
            coarse.push_back(spectral::roughness_index(rough_diff(36, s)));
            fine.push_back(spectral::roughness_index(rough_diff(400, s)));
        }
        std::sort(coarse.begin(), coarse.end());
        std::sort(fine.begin(), fine.end());
        CHECK(coarse[5] > fine[5]);
    }
    SUBCASE("smooth surface scores below coarse grit") {
        tactile::CaptureParams cap;
        cap.press_force_n = 5.0;
        cap.pressure_kpa = 8.0;
        const auto flat = heightmap::flat(1280, 960, heightmap::sandpaper_pitch_um);
        const auto a = tactile::render_tactile(flat, cap, 100);
        const auto b = tactile::render_tactile(flat, cap, 101);
        const auto diff = tactile::apply_center_mask(tactile::difference_image(a, b), 0.45);
        const double smooth_index = spectral::roughness_index(diff);
        CHECK(smooth_index < spectral::roughness_index(rough_diff(36, 0)));
        CHECK(smooth_index < 0.1);  // documented smooth threshold
    }
    SUBCASE("index is invariant to global intensity scaling") {
        auto diff = rough_diff(120, 3);
        const double base = spectral::roughness_index(diff);
        for (auto& p : diff.pixels) p *= 0.35f;
        CHECK(spectral::roughness_index(diff) == doctest::Approx(base).epsilon(1e-9));
    }
    SUBCASE("zero-energy input reported distinctly") {
        auto zeros = blank();
        zeros.mask_applied = true;
        zeros.mask_radius_fraction = 0.45;
        CHECK_THROWS_AS(spectral::roughness_index(zeros), zero_energy_error);
    }
    SUBCASE("unmasked input rejected") {
        CHECK_THROWS_AS(spectral::roughness_index(blank()), std::invalid_argument);
    }
}

namespace {
std::vector<std::array<double, spectral::feature_dim>> cluster(double center, int n,
                                                               uint64_t seed) {
    rng::Stream rs(seed);
    std::vector<std::array<double, spectral::feature_dim>> out;
    for (int i = 0; i < n; ++i) {
        std::array<double, spectral::feature_dim> f{};
        for (int d = 0; d < spectral::feature_dim; ++d) f[size_t(d)] = center + 0.01 * rs.normal();
        out.push_back(f);
    }
    return out;
}
}  // namespace

TEST_CASE("centroid classifier on synthetic clusters") {
    auto a = cluster(0.0, 20, 1);
    auto b = cluster(1.0, 20, 2);
    std::vector<std::array<double, spectral::feature_dim>> feats;
    std::vector<int> labels;
    for (const auto& f : a) {
        feats.push_back(f);
        labels.push_back(0);
    }
    for (const auto& f : b) {
        feats.push_back(f);
        labels.push_back(1);
    }
    const auto model = spectral::fit_classifier(feats, labels, {"low", "high"});

    SUBCASE("100% training accuracy on separated clusters") {
        const auto cm = spectral::evaluate(model, feats, labels);
        CHECK(cm.accuracy == 1.0);
        CHECK(cm.at(0, 0) == 20);
        CHECK(cm.at(1, 1) == 20);
    }
    SUBCASE("identical training data produces identical model bytes") {
        const auto again = spectral::fit_classifier(feats, labels, {"low", "high"});
        CHECK(spectral::model_text(model) == spectral::model_text(again));
    }
    SUBCASE("centroids equal per-class normalized means") {
        // recompute independently
        for (int cls : {0, 1}) {
            std::array<double, spectral::feature_dim> mean{};
            int n = 0;
            for (size_t i = 0; i < feats.size(); ++i) {
                if (labels[i] != cls) continue;
                for (int d = 0; d < spectral::feature_dim; ++d)
                    mean[size_t(d)] +=
                        (feats[i][size_t(d)] - model.norm_mean[size_t(d)]) / model.norm_std[size_t(d)];
                ++n;
            }
            for (int d = 0; d < spectral::feature_dim; ++d)
                CHECK(model.centroids[size_t(cls)][size_t(d)] ==
                      doctest::Approx(mean[size_t(d)] / n).epsilon(1e-12));
        }
    }
    SUBCASE("classification margin and tie-breaking") {
        auto r = spectral::classify(model, a.front());
        CHECK(r.label == 0);
        CHECK(r.margin > 0.0);
        // equidistant probe breaks ties toward the lowest class index
        std::array<double, spectral::feature_dim> mid{};
        for (int d = 0; d < spectral::feature_dim; ++d)
            mid[size_t(d)] = (model.norm_mean[size_t(d)]);
        const auto tie = spectral::classify(model, mid);
        CHECK(tie.label == 0);
    }
    SUBCASE("degenerate feature dimensions fall back to unit scale") {
        auto feats2 = feats;
        for (auto& f : feats2) f[3] = 42.0;  // constant dimension
        const auto m2 = spectral::fit_classifier(feats2, labels, {"low", "high"});
        CHECK(m2.norm_std[3] == 1.0);
        CHECK(spectral::evaluate(m2, feats2, labels).accuracy == 1.0);
    }
}

TEST_CASE("argmin is intensity-scale invariant when only bands separate classes") {
    // two centroids equal in the moment dimensions, separated in band space;
    // global intensity scaling maps (bands, mean, var, skew) to
    // (bands, c*mean, c^2*var, skew), which moves both distances equally
    spectral::CentroidModel model;
    model.classes = 2;
    model.labels = {"low_band", "high_band"};
    for (int d = 0; d < spectral::feature_dim; ++d) {
        model.norm_mean[size_t(d)] = 0.0;
        model.norm_std[size_t(d)] = 1.0;
    }
    model.centroids.assign(2, {});
    model.centroids[0][1] = 1.0;  // band 1 heavy
    model.centroids[1][6] = 1.0;  // band 6 heavy
    const double moments[3] = {0.4, 0.02, 0.3};
    for (int cls = 0; cls < 2; ++cls)
        for (int m = 0; m < 3; ++m)
            model.centroids[size_t(cls)][size_t(8 + m)] = moments[m];

    std::array<double, spectral::feature_dim> probe{};
    probe[1] = 0.8;
    probe[6] = 0.2;
    probe[8] = 0.37;
    probe[9] = 0.015;
    probe[10] = 0.25;
    const int base_label = spectral::classify(model, probe).label;
    CHECK(base_label == 0);
    for (double c : {0.5, 0.8, 1.25, 2.0}) {
        auto scaled = probe;  // bands invariant; moments follow the scaling law
        scaled[8] *= c;
        scaled[9] *= c * c;
        CHECK(spectral::classify(model, scaled).label == base_label);
    }
}

TEST_CASE("classifier input validation") {
    const auto a = cluster(0.0, 4, 1);
    std::vector<int> labels(4, 0);
    CHECK_THROWS_AS(spectral::fit_classifier(a, labels, {"only"}), std::invalid_argument);
    CHECK_THROWS_AS(spectral::classify(spectral::CentroidModel{}, a.front()),
                    std::invalid_argument);
}

TEST_CASE("stratified split is deterministic and class-balanced") {
    std::vector<int> labels;
    for (int cls = 0; cls < 6; ++cls)
        for (int i = 0; i < 50; ++i) labels.push_back(cls);
    const auto s1 = spectral::stratified_split(labels, 0.2, 99);
    const auto s2 = spectral::stratified_split(labels, 0.2, 99);
    CHECK(s1 == s2);
    const auto s3 = spectral::stratified_split(labels, 0.2, 100);
    CHECK(s1 != s3);
    std::vector<int> test_per_class(6, 0);
    for (size_t i = 0; i < labels.size(); ++i)
        if (s1[i]) ++test_per_class[size_t(labels[i])];
    for (int c : test_per_class) CHECK(c == 10);
}

TEST_CASE("confusion matrix bookkeeping") {
    auto a = cluster(0.0, 10, 5);
    auto b = cluster(1.0, 10, 6);
    std::vector<std::array<double, spectral::feature_dim>> feats;
    std::vector<int> labels;
    for (const auto& f : a) {
        feats.push_back(f);
        labels.push_back(0);
    }
    for (const auto& f : b) {
        feats.push_back(f);
        labels.push_back(1);
    }
    const auto model = spectral::fit_classifier(feats, labels, {"a", "b"});
    const auto cm = spectral::evaluate(model, feats, labels);

    long total = 0, trace = 0;
    for (int t = 0; t < cm.classes; ++t)
        for (int p = 0; p < cm.classes; ++p) {
            total += cm.at(t, p);
            if (t == p) trace += cm.at(t, p);
        }
    CHECK(total == long(feats.size()));
    CHECK(cm.accuracy == doctest::Approx(double(trace) / double(total)));

    const std::string csv = spectral::confusion_csv(cm);
    CHECK(csv.rfind("true_class,pred_0,pred_1\n", 0) == 0);

    CHECK_THROWS_AS(spectral::evaluate(model, {}, {}), std::invalid_argument);
}

TEST_CASE("model persistence round trip") {
    auto a = cluster(0.0, 8, 1);
    auto b = cluster(2.0, 8, 2);
    std::vector<std::array<double, spectral::feature_dim>> feats;
    std::vector<int> labels;
    for (const auto& f : a) {
        feats.push_back(f);
        labels.push_back(0);
    }
    for (const auto& f : b) {
        feats.push_back(f);
        labels.push_back(1);
    }
    const auto model = spectral::fit_classifier(feats, labels, {"a", "b"});
    const std::string text = spectral::model_text(model);
    std::istringstream in(text);
    const auto loaded = spectral::parse_model_text(in);
    CHECK(spectral::model_text(loaded) == text);  // stable re-encode
    CHECK(loaded.labels == model.labels);
    for (const auto& f : feats)
        CHECK(spectral::classify(loaded, f).label == spectral::classify(model, f).label);

    std::istringstream bad("not a model\n");
    CHECK_THROWS_AS(spectral::parse_model_text(bad), parse_error);
}
