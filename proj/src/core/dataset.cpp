#include "dataset.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "csv.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace sucktac::dataset {

namespace fs = std::filesystem;

std::vector<Item> generate(const Options& opts) {
    if (opts.per_class < 1) throw std::invalid_argument("dataset: per_class must be >= 1");
    std::vector<Item> items;
    items.reserve(size_t(heightmap::texture_class_count) * opts.per_class);
    for (int cls = 0; cls < heightmap::texture_class_count; ++cls) {
        for (int i = 0; i < opts.per_class; ++i) {
            const uint64_t item_index = uint64_t(cls) * uint64_t(opts.per_class) + uint64_t(i);
            Item item;
            item.class_id = cls;
            item.seed = rng::derive(opts.seed, item_index);
            item.capture = tactile::sample_capture(rng::derive(item.seed, 1));
            const auto map = heightmap::texture(cls, rng::derive(item.seed, 2));
            auto img = tactile::render_tactile(map, item.capture, rng::derive(item.seed, 3));
            img = tactile::apply_center_mask(img, opts.mask_radius_fraction);
            tactile::quantize_8bit(img);
            img.class_label = cls;
            item.image = std::move(img);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "images/class_%02d/img_%04d.pgm", cls, i);
            item.rel_path = buf;
            items.push_back(std::move(item));
        }
    }
    return items;
}

std::string manifest_csv(const std::vector<Item>& items) {
    std::string out = "path,class_id,press_force_n,pressure_kpa,seed\n";
    for (const auto& item : items) {
        char buf[64];
        out += item.rel_path;
        out += ',' + std::to_string(item.class_id);
        out += ',' + csv::fixed(item.capture.press_force_n, 6);
        out += ',' + csv::fixed(item.capture.pressure_kpa, 6);
        std::snprintf(buf, sizeof(buf), ",%" PRIu64, item.seed);
        out += buf;
        out += '\n';
    }
    return out;
}

void write(const std::vector<Item>& items, const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw io_error("dataset: cannot create output directory " + out_dir);
    for (const auto& item : items) {
        const fs::path path = fs::path(out_dir) / item.rel_path;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw io_error("dataset: cannot create " + path.parent_path().string());
        tactile::write_pgm_file(item.image, path.string());
    }
    std::ofstream manifest(fs::path(out_dir) / "manifest.csv", std::ios::binary);
    if (!manifest) throw io_error("dataset: cannot write manifest under " + out_dir);
    const std::string text = manifest_csv(items);
    manifest.write(text.data(), std::streamsize(text.size()));
}

std::vector<Item> load(const std::string& dir) {
    std::ifstream in(fs::path(dir) / "manifest.csv", std::ios::binary);
    if (!in) throw io_error("dataset: missing manifest.csv under " + dir);
    std::string line;
    if (!std::getline(in, line) || line != "path,class_id,press_force_n,pressure_kpa,seed")
        throw parse_error("dataset: bad manifest header");
    std::vector<Item> items;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = csv::split(line);
        if (cells.size() != 5)
            throw parse_error("manifest: line " + std::to_string(lineno) + ": expected 5 columns");
        Item item;
        item.rel_path = cells[0];
        try {
            item.class_id = std::stoi(cells[1]);
            item.capture.press_force_n = std::stod(cells[2]);
            item.capture.pressure_kpa = std::stod(cells[3]);
            item.seed = std::stoull(cells[4]);
        } catch (const std::exception&) {
            throw parse_error("manifest: line " + std::to_string(lineno) + ": bad value");
        }
        item.image = tactile::read_pgm_file((fs::path(dir) / item.rel_path).string());
        // persisted images were masked before writing; restore the flags
        item.image.mask_applied = true;
        item.image.mask_radius_fraction = tactile::default_mask_radius_fraction;
        item.image.class_label = item.class_id;
        item.image.press_force_n = item.capture.press_force_n;
        item.image.pressure_kpa = item.capture.pressure_kpa;
        items.push_back(std::move(item));
    }
    return items;
}

ExperimentResult run_classification(const std::vector<Item>& items, uint64_t split_seed) {
    if (items.empty()) throw std::invalid_argument("run_classification: empty dataset");
    std::vector<std::array<double, spectral::feature_dim>> feats;
    std::vector<int> labels;
    feats.reserve(items.size());
    labels.reserve(items.size());
    for (const auto& item : items) {
        feats.push_back(spectral::features(item.image));
        labels.push_back(item.class_id);
    }
    const auto is_test = spectral::stratified_split(labels, 0.2, split_seed);

    std::vector<std::array<double, spectral::feature_dim>> train_f, test_f;
    std::vector<int> train_l, test_l;
    for (size_t i = 0; i < items.size(); ++i) {
        if (is_test[i]) {
            test_f.push_back(feats[i]);
            test_l.push_back(labels[i]);
        } else {
            train_f.push_back(feats[i]);
            train_l.push_back(labels[i]);
        }
    }
    std::vector<std::string> names;
    for (int c = 0; c < heightmap::texture_class_count; ++c)
        names.emplace_back(heightmap::texture_class_name(c));

    ExperimentResult result;
    result.model = spectral::fit_classifier(train_f, train_l, names);
    result.confusion = spectral::evaluate(result.model, test_f, test_l);
    return result;
}

}  // namespace sucktac::dataset
