#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "core/dataset.hpp"
#include "core/heightmap.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"

using namespace sucktac;

namespace {
dataset::Options small_opts(int per_class = 6, uint64_t seed = 2024) {
    dataset::Options o;
    o.per_class = per_class;
    o.seed = seed;
    return o;
}
}  // namespace

TEST_CASE("dataset generation shape and determinism") {
    const auto items = dataset::generate(small_opts());
    CHECK(items.size() == size_t(18 * 6));
    std::set<std::string> paths;
    for (const auto& item : items) {
        CHECK(item.image.mask_applied);
        CHECK(item.image.width == 640);
        CHECK(item.class_id >= 0);
        CHECK(item.class_id < 18);
        paths.insert(item.rel_path);
    }
    CHECK(paths.size() == items.size());

    const auto again = dataset::generate(small_opts());
    CHECK(dataset::manifest_csv(items) == dataset::manifest_csv(again));
    CHECK(items.front().image.pixels == again.front().image.pixels);
}

TEST_CASE("per-item seeds are order-independent reproductions") {
    const auto items = dataset::generate(small_opts(3, 5));
    // regenerate one item in isolation from its recorded seed
    const auto& probe = items[size_t(7 * 3 + 1)];  // class 7, index 1
    const auto cap = tactile::sample_capture(rng::derive(probe.seed, 1));
    CHECK(cap.press_force_n == probe.capture.press_force_n);
    const auto map = heightmap::texture(probe.class_id, rng::derive(probe.seed, 2));
    auto img = tactile::render_tactile(map, probe.capture, rng::derive(probe.seed, 3));
    img = tactile::apply_center_mask(img, tactile::default_mask_radius_fraction);
    tactile::quantize_8bit(img);
    CHECK(img.pixels == probe.image.pixels);
}

TEST_CASE("dataset write/load round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "sucktac_test_dataset";
    std::filesystem::remove_all(dir);
    const auto items = dataset::generate(small_opts(5, 77));
    dataset::write(items, dir.string());

    CHECK(std::filesystem::exists(dir / "manifest.csv"));
    const auto loaded = dataset::load(dir.string());
    REQUIRE(loaded.size() == items.size());
    std::vector<int> per_class(18, 0);
    for (size_t i = 0; i < items.size(); ++i) {
        CHECK(loaded[i].class_id == items[i].class_id);
        CHECK(loaded[i].image.pixels == items[i].image.pixels);  // 8-bit quantized both sides
        ++per_class[size_t(loaded[i].class_id)];
    }
    for (int n : per_class) CHECK(n == 5);  // manifest tally: equal counts per class
    std::filesystem::remove_all(dir);
}

TEST_CASE("classification experiment on a reduced dataset") {
    const auto items = dataset::generate(small_opts(6, 99));
    const auto result = dataset::run_classification(items, 42);
    CHECK(result.confusion.classes == 18);
    // row sums equal the per-class test count (20% of 6 rounds to 1)
    for (int t = 0; t < 18; ++t) {
        long row = 0;
        for (int p = 0; p < 18; ++p) row += result.confusion.at(t, p);
        CHECK(row == 1);
    }
    CHECK(result.confusion.accuracy >= 0.90);

    const auto rerun = dataset::run_classification(items, 42);
    CHECK(spectral::confusion_csv(rerun.confusion) ==
          spectral::confusion_csv(result.confusion));
}

TEST_CASE("class separability precondition on the 18 families") {
    // feature clusters must sit far apart relative to their spread
    const auto items = dataset::generate(small_opts(8, 4242));
    std::vector<std::array<double, spectral::feature_dim>> feats;
    std::vector<int> labels;
    for (const auto& item : items) {
        feats.push_back(spectral::features(item.image));
        labels.push_back(item.class_id);
    }
    std::vector<std::string> names;
    for (int c = 0; c < 18; ++c) names.emplace_back(heightmap::texture_class_name(c));
    const auto model = spectral::fit_classifier(feats, labels, names);

    // per-class spread (mean distance to own centroid) in normalized space
    auto z_of = [&](const std::array<double, spectral::feature_dim>& f) {
        std::array<double, spectral::feature_dim> z{};
        for (int d = 0; d < spectral::feature_dim; ++d)
            z[size_t(d)] = (f[size_t(d)] - model.norm_mean[size_t(d)]) / model.norm_std[size_t(d)];
        return z;
    };
    std::vector<double> spread(18, 0.0);
    std::vector<int> count(18, 0);
    for (size_t i = 0; i < feats.size(); ++i) {
        const auto z = z_of(feats[i]);
        double d2 = 0.0;
        for (int d = 0; d < spectral::feature_dim; ++d) {
            const double diff = z[size_t(d)] - model.centroids[size_t(labels[i])][size_t(d)];
            d2 += diff * diff;
        }
        spread[size_t(labels[i])] += std::sqrt(d2);
        ++count[size_t(labels[i])];
    }
    for (int c = 0; c < 18; ++c) spread[size_t(c)] /= count[size_t(c)];

    for (int i = 0; i < 18; ++i) {
        for (int j = i + 1; j < 18; ++j) {
            double d2 = 0.0;
            for (int d = 0; d < spectral::feature_dim; ++d) {
                const double diff =
                    model.centroids[size_t(i)][size_t(d)] - model.centroids[size_t(j)][size_t(d)];
                d2 += diff * diff;
            }
            const double dist = std::sqrt(d2);
            CHECK(dist >= 2.0 * std::max(spread[size_t(i)], spread[size_t(j)]));
        }
    }
}
