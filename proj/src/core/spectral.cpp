#include "spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace sucktac::spectral {

namespace {

// plan creation guarded because FFTW's planner is not reentrant
struct FftBuffers {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
    int w = 0, h = 0;

    ~FftBuffers() {
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
    void ensure(int width, int height) {
        if (w == width && h == height) return;
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
        w = width;
        h = height;
        in = fftw_alloc_complex(size_t(w) * h);
        out = fftw_alloc_complex(size_t(w) * h);
        plan = fftw_plan_dft_2d(h, w, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    }
};

thread_local FftBuffers g_fft;

}  // namespace

Spectrum fft2_log_spectrum(const TactileImage& img) {
    if (img.width != tactile::image_width || img.height != tactile::image_height)
        throw std::invalid_argument("fft2_log_spectrum: expected a 640x480 frame");
    g_fft.ensure(img.width, img.height);
    for (size_t i = 0; i < img.pixels.size(); ++i) {
        g_fft.in[i][0] = img.pixels[i];
        g_fft.in[i][1] = 0.0;
    }
    fftw_execute(g_fft.plan);

    Spectrum spec;
    spec.width = img.width;
    spec.height = img.height;
    spec.values.resize(img.pixels.size());
    const int cx = img.width / 2, cy = img.height / 2;
    for (int y = 0; y < img.height; ++y) {
        const int sy = (y + cy) % img.height;  // shift zero frequency to center
        for (int x = 0; x < img.width; ++x) {
            const int sx = (x + cx) % img.width;
            const double re = g_fft.out[size_t(y) * img.width + x][0];
            const double im = g_fft.out[size_t(y) * img.width + x][1];
            spec.values[size_t(sy) * img.width + sx] = std::log1p(std::hypot(re, im));
        }
    }
    return spec;
}

std::vector<double> radial_band_energies(const Spectrum& spec, int bands) {
    if (!spec.centered) throw std::invalid_argument("radial_band_energies: spectrum must be centered");
    if (bands < 1) throw std::invalid_argument("radial_band_energies: bands must be >= 1");
    const int cx = spec.width / 2, cy = spec.height / 2;
    std::vector<double> energy(size_t(bands), 0.0);
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            if (x == cx && y == cy) continue;  // DC excluded
            const double nx = double(x - cx) / (spec.width / 2.0);
            const double ny = double(y - cy) / (spec.height / 2.0);
            const double rn = std::sqrt(nx * nx + ny * ny);
            const int band = std::min(int(rn * bands), bands - 1);
            const double mag = std::expm1(spec.at(x, y));
            energy[size_t(band)] += mag * mag;
        }
    }
    double total = 0.0;
    for (double e : energy) total += e;
    if (total <= 0.0) return energy;  // all-zero spectrum
    for (double& e : energy) e /= total;
    return energy;
}

double roughness_index(const TactileImage& masked_diff) {
    if (!masked_diff.mask_applied)
        throw std::invalid_argument("roughness_index: image must be masked");
    const Spectrum spec = fft2_log_spectrum(masked_diff);
    bool any = false;
    for (double v : spec.values) {
        if (v > 0.0) {
            any = true;
            break;
        }
    }
    const auto bands = radial_band_energies(spec, band_count);
    double total = 0.0, upper = 0.0;
    for (int k = 0; k < band_count; ++k) {
        total += bands[size_t(k)];
        if (k >= band_count / 2) upper += bands[size_t(k)];
    }
    if (!any || total <= 0.0)
        throw zero_energy_error("roughness_index: image carries no spectral energy");
    return upper / total;
}

std::array<double, feature_dim> features(const TactileImage& masked) {
    if (!masked.mask_applied) throw std::invalid_argument("features: image must be masked");
    const double radius = masked.mask_radius_fraction * std::min(masked.width, masked.height);
    const double cx = masked.width / 2.0, cy = masked.height / 2.0;

    // moments over the disk interior
    double sum = 0.0;
    long n = 0;
    for (int y = 0; y < masked.height; ++y) {
        for (int x = 0; x < masked.width; ++x) {
            const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            if (dx * dx + dy * dy > radius * radius) continue;
            sum += masked.at(x, y);
            ++n;
        }
    }
    const double mean = n ? sum / double(n) : 0.0;
    double m2 = 0.0, m3 = 0.0;
    TactileImage demeaned = masked;
    for (int y = 0; y < masked.height; ++y) {
        for (int x = 0; x < masked.width; ++x) {
            const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            if (dx * dx + dy * dy > radius * radius) {
                demeaned.at(x, y) = 0.f;
                continue;
            }
            const double d = masked.at(x, y) - mean;
            m2 += d * d;
            m3 += d * d * d;
            demeaned.at(x, y) = float(d);
        }
    }
    const double variance = n ? m2 / double(n) : 0.0;
    const double sd = std::sqrt(variance);
    const double skewness = (n && sd > 1e-12) ? (m3 / double(n)) / (sd * sd * sd) : 0.0;

    const auto bands = radial_band_energies(fft2_log_spectrum(demeaned), band_count);
    std::array<double, feature_dim> f{};
    for (int k = 0; k < band_count; ++k) f[size_t(k)] = bands[size_t(k)];
    f[band_count] = mean;
    f[band_count + 1] = variance;
    f[band_count + 2] = skewness;
    return f;
}

CentroidModel fit_classifier(const std::vector<std::array<double, feature_dim>>& feats,
                             const std::vector<int>& labels,
                             const std::vector<std::string>& class_names) {
    if (feats.size() != labels.size())
        throw std::invalid_argument("fit_classifier: feature/label count mismatch");
    std::map<int, long> per_class;
    for (int l : labels) {
        if (l < 0 || size_t(l) >= class_names.size())
            throw std::invalid_argument("fit_classifier: label outside class list");
        ++per_class[l];
    }
    if (per_class.size() < 2) throw std::invalid_argument("fit_classifier: need at least 2 classes");
    if (per_class.size() != class_names.size())
        throw std::invalid_argument("fit_classifier: every named class needs samples");
    for (auto& [cls, count] : per_class) {
        if (count < 5)
            throw std::invalid_argument("fit_classifier: class " + std::to_string(cls) +
                                        " has fewer than 5 samples");
    }

    CentroidModel model;
    model.classes = int(class_names.size());
    model.labels = class_names;

    const double n = double(feats.size());
    for (int d = 0; d < feature_dim; ++d) {
        double s = 0.0;
        for (const auto& f : feats) s += f[size_t(d)];
        model.norm_mean[size_t(d)] = s / n;
        double v = 0.0;
        for (const auto& f : feats) {
            const double diff = f[size_t(d)] - model.norm_mean[size_t(d)];
            v += diff * diff;
        }
        const double sd = std::sqrt(v / n);
        model.norm_std[size_t(d)] = sd > 1e-12 ? sd : 1.0;  // degenerate dim: unit scale
    }

    model.centroids.assign(size_t(model.classes), {});
    std::vector<long> counts(size_t(model.classes), 0);
    for (size_t i = 0; i < feats.size(); ++i) {
        auto& c = model.centroids[size_t(labels[i])];
        for (int d = 0; d < feature_dim; ++d)
            c[size_t(d)] += (feats[i][size_t(d)] - model.norm_mean[size_t(d)]) /
                            model.norm_std[size_t(d)];
        ++counts[size_t(labels[i])];
    }
    for (int cls = 0; cls < model.classes; ++cls)
        for (int d = 0; d < feature_dim; ++d)
            model.centroids[size_t(cls)][size_t(d)] /= double(counts[size_t(cls)]);
    return model;
}

Classification classify(const CentroidModel& model, const std::array<double, feature_dim>& feat) {
    if (!model.trained()) throw std::invalid_argument("classify: model is not trained");
    std::array<double, feature_dim> z{};
    for (int d = 0; d < feature_dim; ++d)
        z[size_t(d)] = (feat[size_t(d)] - model.norm_mean[size_t(d)]) / model.norm_std[size_t(d)];

    double best = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    int best_cls = -1;
    for (int cls = 0; cls < model.classes; ++cls) {
        double d2 = 0.0;
        for (int d = 0; d < feature_dim; ++d) {
            const double diff = z[size_t(d)] - model.centroids[size_t(cls)][size_t(d)];
            d2 += diff * diff;
        }
        const double dist = std::sqrt(d2);
        if (dist < best) {  // strict <, so ties keep the lowest class index
            second = best;
            best = dist;
            best_cls = cls;
        } else if (dist < second) {
            second = dist;
        }
    }
    Classification out;
    out.label = best_cls;
    out.margin = model.classes > 1 ? second - best : 0.0;
    return out;
}

Classification classify(const CentroidModel& model, const TactileImage& masked) {
    return classify(model, features(masked));
}

ConfusionMatrix evaluate(const CentroidModel& model,
                         const std::vector<std::array<double, feature_dim>>& feats,
                         const std::vector<int>& labels) {
    if (!model.trained()) throw std::invalid_argument("evaluate: model is not trained");
    if (feats.empty()) throw std::invalid_argument("evaluate: empty test set");
    if (feats.size() != labels.size())
        throw std::invalid_argument("evaluate: feature/label count mismatch");
    ConfusionMatrix cm;
    cm.classes = model.classes;
    cm.counts.assign(size_t(cm.classes) * cm.classes, 0);
    long correct = 0;
    for (size_t i = 0; i < feats.size(); ++i) {
        const int truth = labels[i];
        if (truth < 0 || truth >= cm.classes)
            throw std::invalid_argument("evaluate: label outside model classes");
        const int pred = classify(model, feats[i]).label;
        ++cm.counts[size_t(truth) * cm.classes + pred];
        if (pred == truth) ++correct;
    }
    cm.accuracy = double(correct) / double(feats.size());
    cm.per_class_recall.assign(size_t(cm.classes), 0.0);
    for (int t = 0; t < cm.classes; ++t) {
        long row = 0;
        for (int p = 0; p < cm.classes; ++p) row += cm.at(t, p);
        cm.per_class_recall[size_t(t)] = row ? double(cm.at(t, t)) / double(row) : 0.0;
    }
    return cm;
}

std::string confusion_csv(const ConfusionMatrix& cm) {
    std::string out = "true_class";
    for (int p = 0; p < cm.classes; ++p) out += ",pred_" + std::to_string(p);
    out += '\n';
    for (int t = 0; t < cm.classes; ++t) {
        out += std::to_string(t);
        for (int p = 0; p < cm.classes; ++p) out += ',' + std::to_string(cm.at(t, p));
        out += '\n';
    }
    return out;
}

std::vector<uint8_t> stratified_split(const std::vector<int>& labels, double test_fraction,
                                      uint64_t seed) {
    if (!(test_fraction > 0.0) || !(test_fraction < 1.0))
        throw std::invalid_argument("stratified_split: fraction must be in (0, 1)");
    std::map<int, std::vector<size_t>> per_class;
    for (size_t i = 0; i < labels.size(); ++i) per_class[labels[i]].push_back(i);
    std::vector<uint8_t> is_test(labels.size(), 0);
    for (auto& [cls, idx] : per_class) {
        rng::Stream rs(rng::derive(seed, uint64_t(cls)));
        rng::shuffle(idx, rs);
        const size_t n_test = size_t(std::lround(test_fraction * double(idx.size())));
        for (size_t k = 0; k < n_test; ++k) is_test[idx[k]] = 1;
    }
    return is_test;
}

std::string model_text(const CentroidModel& model) {
    std::string out = "sucktac-centroid-model v1\n";
    out += "classes " + std::to_string(model.classes) + " features " +
           std::to_string(feature_dim) + "\n";
    auto row = [](const std::array<double, feature_dim>& v) {
        std::string s;
        for (int d = 0; d < feature_dim; ++d) {
            if (d) s += ' ';
            s += csv::sci(v[size_t(d)], 12);
        }
        return s;
    };
    out += "norm_mean " + row(model.norm_mean) + "\n";
    out += "norm_std " + row(model.norm_std) + "\n";
    for (int cls = 0; cls < model.classes; ++cls) {
        out += "centroid " + std::to_string(cls) + " " + model.labels[size_t(cls)] + " " +
               row(model.centroids[size_t(cls)]) + "\n";
    }
    return out;
}

CentroidModel parse_model_text(std::istream& in) {
    CentroidModel model;
    std::string line;
    if (!std::getline(in, line) || line != "sucktac-centroid-model v1")
        throw parse_error("model: bad signature line");
    int features_n = 0;
    {
        std::string kw1, kw2;
        std::getline(in, line);
        std::istringstream ls(line);
        if (!(ls >> kw1 >> model.classes >> kw2 >> features_n) || kw1 != "classes" ||
            kw2 != "features" || features_n != feature_dim || model.classes < 2)
            throw parse_error("model: bad header line");
    }
    auto read_row = [&](std::istringstream& ls, std::array<double, feature_dim>& v) {
        for (int d = 0; d < feature_dim; ++d)
            if (!(ls >> v[size_t(d)])) throw parse_error("model: truncated vector");
    };
    {
        std::getline(in, line);
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "norm_mean") throw parse_error("model: expected norm_mean");
        read_row(ls, model.norm_mean);
    }
    {
        std::getline(in, line);
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "norm_std") throw parse_error("model: expected norm_std");
        read_row(ls, model.norm_std);
        for (double s : model.norm_std)
            if (!(s > 0.0)) throw parse_error("model: normalization scale must be positive");
    }
    model.centroids.resize(size_t(model.classes));
    model.labels.resize(size_t(model.classes));
    for (int cls = 0; cls < model.classes; ++cls) {
        std::getline(in, line);
        std::istringstream ls(line);
        std::string kw, name;
        int idx = -1;
        ls >> kw >> idx >> name;
        if (kw != "centroid" || idx != cls || name.empty())
            throw parse_error("model: bad centroid line " + std::to_string(cls));
        model.labels[size_t(cls)] = name;
        read_row(ls, model.centroids[size_t(cls)]);
    }
    return model;
}

void save_model(const CentroidModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("model: cannot open for writing: " + path);
    const std::string text = model_text(model);
    out.write(text.data(), std::streamsize(text.size()));
    if (!out) throw io_error("model: write failed: " + path);
}

CentroidModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("model: cannot open: " + path);
    return parse_model_text(in);
}

TactileImage spectrum_to_image(const Spectrum& spec) {
    TactileImage img;
    img.width = spec.width;
    img.height = spec.height;
    img.pixels.resize(spec.values.size());
    double vmax = 0.0;
    for (double v : spec.values) vmax = std::max(vmax, v);
    for (size_t i = 0; i < spec.values.size(); ++i)
        img.pixels[i] = vmax > 0.0 ? float(spec.values[i] / vmax) : 0.f;
    return img;
}

}  // namespace sucktac::spectral
