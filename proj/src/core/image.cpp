#include "image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "errors.hpp"
#include "rng.hpp"

namespace sucktac::tactile {

void CaptureParams::validate() const {
    if (press_force_n < 3.0 || press_force_n > 5.0)
        throw std::invalid_argument("capture: press force must be in [3, 5] N");
    if (pressure_kpa < 5.0 || pressure_kpa > 8.0)
        throw std::invalid_argument("capture: pressure must be in [5, 8] kPa");
    if (std::abs(offset_x_um) > 2000.0 || std::abs(offset_y_um) > 2000.0)
        throw std::invalid_argument("capture: offset jitter must be within +-2000 um");
}

CaptureParams sample_capture(uint64_t seed) {
    rng::Stream rs(rng::mix(seed ^ 0xCAF7ull));
    CaptureParams p;
    p.press_force_n = rs.uniform(3.0, 5.0);
    p.pressure_kpa = rs.uniform(5.0, 8.0);
    p.offset_x_um = rs.uniform(-1000.0, 1000.0);
    p.offset_y_um = rs.uniform(-1000.0, 1000.0);
    return p;
}

namespace {

void add_noise_and_clamp(TactileImage& img, uint64_t seed) {
    const uint64_t lf_seed = rng::mix(seed ^ 0x10F5ull);
    const uint64_t wh_seed = rng::mix(seed ^ 0x3417Eull);

    // smooth lattice noise at the sensor grid; lattice hashed once
    const double cell = noise_lowfreq_cell_px;
    const int gw = int(img.width / cell) + 2;
    const int gh = int(img.height / cell) + 2;
    std::vector<double> lattice(size_t(gw) * gh);
    for (int j = 0; j < gh; ++j)
        for (int i = 0; i < gw; ++i)
            lattice[size_t(j) * gw + i] = rng::hash_normal(i, j, lf_seed);

    for (int y = 0; y < img.height; ++y) {
        const double fy = y / cell;
        const int iy = int(fy);
        double ty = fy - iy;
        ty = ty * ty * (3.0 - 2.0 * ty);
        for (int x = 0; x < img.width; ++x) {
            const double fx = x / cell;
            const int ix = int(fx);
            double tx = fx - ix;
            tx = tx * tx * (3.0 - 2.0 * tx);
            const double a = lattice[size_t(iy) * gw + ix];
            const double b = lattice[size_t(iy) * gw + ix + 1];
            const double cc = lattice[size_t(iy + 1) * gw + ix];
            const double d = lattice[size_t(iy + 1) * gw + ix + 1];
            const double lf = a * (1 - tx) * (1 - ty) + b * tx * (1 - ty) +
                              cc * (1 - tx) * ty + d * tx * ty;
            double v = img.at(x, y);
            v += noise_lowfreq_sigma * lf;
            v += noise_white_sigma * rng::hash_normal(x, y, wh_seed);
            img.at(x, y) = float(std::clamp(v, 0.0, 1.0));
        }
    }
}

float bilinear(const std::vector<float>& grid, int w, int h, double x, double y) {
    x = std::clamp(x, 0.0, double(w - 1));
    y = std::clamp(y, 0.0, double(h - 1));
    const int x0 = int(x), y0 = int(y);
    const int x1 = std::min(x0 + 1, w - 1), y1 = std::min(y0 + 1, h - 1);
    const double tx = x - x0, ty = y - y0;
    const double a = grid[size_t(y0) * w + x0], b = grid[size_t(y0) * w + x1];
    const double c = grid[size_t(y1) * w + x0], d = grid[size_t(y1) * w + x1];
    return float(a * (1 - tx) * (1 - ty) + b * tx * (1 - ty) + c * (1 - tx) * ty + d * tx * ty);
}

}  // namespace

TactileImage render_tactile(const heightmap::HeightMap& map, const CaptureParams& params,
                            uint64_t seed) {
    params.validate();
    if (map.width < 2 || map.height < 2)
        throw std::invalid_argument("render: height map too small");

    heightmap::HeightMap smooth = map;
    heightmap::gaussian_blur(smooth, membrane_blur_um / map.pitch_um);

    // dimensionless slope magnitude on the map grid (central differences)
    std::vector<float> slope(size_t(map.width) * map.height);
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            const int xm = std::max(0, x - 1), xp = std::min(map.width - 1, x + 1);
            const int ym = std::max(0, y - 1), yp = std::min(map.height - 1, y + 1);
            const double gx = (smooth.at(xp, y) - smooth.at(xm, y)) / ((xp - xm) * map.pitch_um);
            const double gy = (smooth.at(x, yp) - smooth.at(x, ym)) / ((yp - ym) * map.pitch_um);
            slope[size_t(y) * map.width + x] = float(std::sqrt(gx * gx + gy * gy));
        }
    }

    TactileImage img;
    img.pixels.assign(size_t(image_width) * image_height, 0.f);
    img.press_force_n = params.press_force_n;
    img.pressure_kpa = params.pressure_kpa;

    const int ss = std::max(1, int(std::lround(double(map.width) / image_width)));
    // contact-position jitter lands on whole source pixels; sub-pixel
    // sampling would attenuate high frequencies by a phase-dependent factor
    const double ox = std::round(params.offset_x_um / map.pitch_um);
    const double oy = std::round(params.offset_y_um / map.pitch_um);
    const double gain = 1.0 + shade_pressure_gain * (params.pressure_kpa - 6.5);
    const double depth = contact_depth_term(params.press_force_n);

    for (int y = 0; y < image_height; ++y) {
        for (int x = 0; x < image_width; ++x) {
            double acc = 0.0;
            for (int j = 0; j < ss; ++j)
                for (int i = 0; i < ss; ++i)
                    acc += bilinear(slope, map.width, map.height, x * ss + i + ox, y * ss + j + oy);
            const double s = acc / (ss * ss);
            img.at(x, y) = float(shade_base + shade_k_slope * gain * s + depth);
        }
    }
    add_noise_and_clamp(img, seed);
    return img;
}

TactileImage render_resting(uint64_t seed) {
    TactileImage img;
    img.pixels.assign(size_t(image_width) * image_height, float(shade_base));
    add_noise_and_clamp(img, seed);
    return img;
}

TactileImage difference_image(const TactileImage& img, const TactileImage& ref) {
    if (img.width != ref.width || img.height != ref.height)
        throw std::invalid_argument("difference_image: dimension mismatch");
    TactileImage out = img;
    out.signed_values = true;
    for (size_t i = 0; i < out.pixels.size(); ++i)
        out.pixels[i] = img.pixels[i] - ref.pixels[i];
    return out;
}

TactileImage apply_center_mask(const TactileImage& img, double radius_fraction) {
    if (!(radius_fraction > 0.0) || radius_fraction > 0.5)
        throw std::invalid_argument("apply_center_mask: radius fraction must be in (0, 0.5]");
    TactileImage out = img;
    const double radius = radius_fraction * std::min(img.width, img.height);
    const double cx = img.width / 2.0, cy = img.height / 2.0;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            if (dx * dx + dy * dy > radius * radius) out.at(x, y) = 0.f;
        }
    }
    out.mask_applied = true;
    out.mask_radius_fraction = radius_fraction;
    return out;
}

void quantize_8bit(TactileImage& img) {
    for (auto& p : img.pixels) {
        const double v = img.signed_values ? (p + 1.0) / 2.0 : p;
        const int q = int(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
        p = img.signed_values ? float(q / 255.0 * 2.0 - 1.0) : float(q / 255.0);
    }
}

std::string write_pgm(const TactileImage& img) {
    std::string out = "P2\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                      "\n255\n";
    out.reserve(out.size() + size_t(img.width) * img.height * 4);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const double v = img.signed_values ? (img.at(x, y) + 1.0) / 2.0 : img.at(x, y);
            const int q = int(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
            if (x) out += ' ';
            out += std::to_string(q);
        }
        out += '\n';
    }
    return out;
}

namespace {

// whitespace/comment-tolerant token scanner for the PGM header and body
struct PgmScanner {
    std::istream& in;
    long value() {
        skip();
        long v = 0;
        bool any = false;
        int c;
        while ((c = in.peek()) != EOF && c >= '0' && c <= '9') {
            v = v * 10 + (c - '0');
            in.get();
            any = true;
        }
        if (!any) throw parse_error("pgm: expected a number");
        return v;
    }
    void skip() {
        int c;
        while ((c = in.peek()) != EOF) {
            if (c == '#') {
                while ((c = in.get()) != EOF && c != '\n') {}
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
    }
};

}  // namespace

TactileImage read_pgm(std::istream& in) {
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '2') throw parse_error("pgm: not an ASCII P2 file");
    PgmScanner sc{in};
    const long w = sc.value();
    const long h = sc.value();
    const long maxval = sc.value();
    if (w < 1 || h < 1) throw parse_error("pgm: bad dimensions");
    if (maxval != 255) throw parse_error("pgm: maxval must be 255");
    TactileImage img;
    img.width = int(w);
    img.height = int(h);
    img.pixels.resize(size_t(w) * h);
    for (size_t i = 0; i < img.pixels.size(); ++i) {
        const long v = sc.value();
        if (v < 0 || v > 255) throw parse_error("pgm: sample out of range");
        img.pixels[i] = float(v / 255.0);
    }
    return img;
}

void write_pgm_file(const TactileImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("pgm: cannot open for writing: " + path);
    const std::string data = write_pgm(img);
    out.write(data.data(), std::streamsize(data.size()));
    if (!out) throw io_error("pgm: write failed: " + path);
}

TactileImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("pgm: cannot open: " + path);
    return read_pgm(in);
}

}  // namespace sucktac::tactile
