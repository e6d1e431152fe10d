#include "heightmap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rng.hpp"

namespace sucktac::heightmap {

namespace {

constexpr double pi = std::numbers::pi;

void splat_grain(HeightMap& map, double cx, double cy, double r_px, double h_um) {
    if (r_px < 0.5) {
        // sub-pixel grain: deposit the pixel-area average (paraboloid volume)
        const int x = int(cx), y = int(cy);
        if (x >= 0 && x < map.width && y >= 0 && y < map.height) {
            const float v = float(h_um * 0.5 * pi * r_px * r_px);
            map.at(x, y) = std::max(map.at(x, y), v);
        }
        return;
    }
    const int x0 = std::max(0, int(cx - r_px - 1.0));
    const int x1 = std::min(map.width - 1, int(cx + r_px + 1.0));
    const int y0 = std::max(0, int(cy - r_px - 1.0));
    const int y1 = std::min(map.height - 1, int(cy + r_px + 1.0));
    const double r2 = r_px * r_px;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            // 2x2 subsample area average of the paraboloid cap
            double acc = 0.0;
            for (double sy : {-0.25, 0.25}) {
                for (double sx : {-0.25, 0.25}) {
                    const double dx = (x + 0.5 + sx) - cx;
                    const double dy = (y + 0.5 + sy) - cy;
                    const double d2 = dx * dx + dy * dy;
                    if (d2 < r2) acc += h_um * (1.0 - d2 / r2);
                }
            }
            const float v = float(acc * 0.25);
            if (v > map.at(x, y)) map.at(x, y) = v;
        }
    }
}

// grid hash holding recent grain centers for the spacing-rejection test
struct PlacementGrid {
    static constexpr int capacity = 10;
    int gw, gh;
    double cell;
    std::vector<float> xs, ys, rs;
    std::vector<int> count;

    PlacementGrid(int width, int height, double cell_px) : cell(cell_px) {
        gw = int(width / cell) + 2;
        gh = int(height / cell) + 2;
        xs.assign(size_t(gw) * gh * capacity, 0.f);
        ys.assign(size_t(gw) * gh * capacity, 0.f);
        rs.assign(size_t(gw) * gh * capacity, 0.f);
        count.assign(size_t(gw) * gh, 0);
    }
    bool too_close(double x, double y, double r, double bias) const {
        const int ci = int(x / cell), cj = int(y / cell);
        for (int j = std::max(0, cj - 1); j <= std::min(gh - 1, cj + 1); ++j) {
            for (int i = std::max(0, ci - 1); i <= std::min(gw - 1, ci + 1); ++i) {
                const size_t base = (size_t(j) * gw + i) * capacity;
                for (int k = 0; k < count[size_t(j) * gw + i]; ++k) {
                    const double dx = xs[base + k] - x;
                    const double dy = ys[base + k] - y;
                    const double lim = bias * (rs[base + k] + r);
                    if (dx * dx + dy * dy < lim * lim) return true;
                }
            }
        }
        return false;
    }
    void insert(double x, double y, double r) {
        const int ci = int(x / cell), cj = int(y / cell);
        const size_t idx = size_t(cj) * gw + ci;
        if (count[idx] < capacity) {
            const size_t base = idx * capacity;
            xs[base + count[idx]] = float(x);
            ys[base + count[idx]] = float(y);
            rs[base + count[idx]] = float(r);
            ++count[idx];
        }
    }
};

}  // namespace

HeightMap flat(int width, int height, double pitch_um) {
    if (width < 1 || height < 1) throw std::invalid_argument("heightmap: empty dimensions");
    if (!(pitch_um > 0.0)) throw std::invalid_argument("heightmap: pitch must be > 0");
    HeightMap map;
    map.width = width;
    map.height = height;
    map.pitch_um = pitch_um;
    map.values_um.assign(size_t(width) * height, 0.f);
    return map;
}

HeightMap sandpaper(int mesh, uint64_t seed, int width, int height, double pitch_um) {
    if (mesh < 36 || mesh > 600)
        throw std::invalid_argument("sandpaper: mesh must be in [36, 600]");
    HeightMap map = flat(width, height, pitch_um);

    const double d_mean_px = grit_mean_diameter_um(mesh) / pitch_um;
    const double grain_area = std::max(pi * d_mean_px * d_mean_px / 4.0, 0.25);
    const long target = std::min<long>(
        long(std::lround(sandpaper_fill * double(width) * double(height) / grain_area)),
        4000000L);

    PlacementGrid grid(width, height, std::max(d_mean_px, 1.0));
    rng::Stream rs(seed);
    long placed = 0;
    long attempts = 0;
    const long max_attempts = target * 6;
    while (placed < target && attempts < max_attempts) {
        ++attempts;
        const double cx = rs.uniform() * width;
        const double cy = rs.uniform() * height;
        const double d = d_mean_px * (1.0 - grain_diameter_spread +
                                      2.0 * grain_diameter_spread * rs.uniform());
        const double r = 0.5 * d;
        if (grid.too_close(cx, cy, r, grain_spacing_bias)) continue;
        grid.insert(cx, cy, r);
        splat_grain(map, cx, cy, r, grain_height_ratio * d * pitch_um);
        ++placed;
    }
    map.grains_placed = int(placed);
    return map;
}

namespace {

// one smoothstep value-noise octave accumulated over the whole map;
// the lattice is hashed once, values in [-1, 1]
void add_value_noise_octave(std::vector<double>& field, int width, int height, double cell,
                            uint64_t seed, double amp, bool ridged) {
    const int gw = int(width / cell) + 2;
    const int gh = int(height / cell) + 2;
    std::vector<double> lattice(size_t(gw) * gh);
    for (int j = 0; j < gh; ++j)
        for (int i = 0; i < gw; ++i)
            lattice[size_t(j) * gw + i] = 2.0 * rng::hash01(i, j, seed) - 1.0;
    for (int y = 0; y < height; ++y) {
        const double fy = y / cell;
        const int iy = int(fy);
        double ty = fy - iy;
        ty = ty * ty * (3.0 - 2.0 * ty);
        for (int x = 0; x < width; ++x) {
            const double fx = x / cell;
            const int ix = int(fx);
            double tx = fx - ix;
            tx = tx * tx * (3.0 - 2.0 * tx);
            const double a = lattice[size_t(iy) * gw + ix];
            const double b = lattice[size_t(iy) * gw + ix + 1];
            const double c = lattice[size_t(iy + 1) * gw + ix];
            const double d = lattice[size_t(iy + 1) * gw + ix + 1];
            double v = a * (1 - tx) * (1 - ty) + b * tx * (1 - ty) + c * (1 - tx) * ty +
                       d * tx * ty;
            if (ridged) v = 1.0 - std::abs(v);
            field[size_t(y) * width + x] += amp * v;
        }
    }
}

void fill_ridged(HeightMap& m, double base_cell, int octaves, double amp_um, uint64_t seed) {
    std::vector<double> field(size_t(m.width) * m.height, 0.0);
    double amp = 1.0, tot = 0.0, cell = base_cell;
    for (int o = 0; o < octaves; ++o) {
        add_value_noise_octave(field, m.width, m.height, cell, rng::mix(seed + o), amp, true);
        tot += amp;
        amp *= 0.5;
        cell = std::max(cell / 2.0, 2.0);
    }
    for (size_t i = 0; i < field.size(); ++i) m.values_um[i] = float(amp_um * field[i] / tot);
}

struct GratingSpec {
    int cycles_h;  // cycles across width for the horizontal variant
    int cycles_v;  // cycles across height (same physical frequency)
    double amp_h_um;
};

// Same-frequency pairs: vertical variant amplitude is 1.4x the horizontal,
// which is what keeps them apart in the rotation-blind feature space.
constexpr GratingSpec gratings[3] = {
    {8, 6, 120.0},  // coarse
    {28, 21, 75.0}, // mid
    {48, 36, 60.0}, // fine (amplitudes keep the shaded peaks out of clipping)
};

void gen_grating(HeightMap& m, int level, bool vertical, rng::Stream& rs) {
    const GratingSpec& g = gratings[level];
    const double amp = vertical ? 1.4 * g.amp_h_um : g.amp_h_um;
    const double phase = rs.uniform(0.0, 2.0 * pi);
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            const double arg = vertical ? 2.0 * pi * g.cycles_v * y / m.height + phase
                                        : 2.0 * pi * g.cycles_h * x / m.width + phase;
            m.at(x, y) = float(amp * (0.5 + 0.5 * std::sin(arg)));
        }
    }
}

void gen_dots(HeightMap& m, double spacing, double radius, double h_um, uint64_t seed,
              rng::Stream& rs) {
    const double ox = rs.uniform(0.0, spacing);
    const double oy = rs.uniform(0.0, spacing);
    for (int gy = -1; gy <= int(m.height / spacing) + 1; ++gy) {
        for (int gx = -1; gx <= int(m.width / spacing) + 1; ++gx) {
            const double jx = 6.0 * rng::hash01(gx, gy, seed) - 3.0;
            const double jy = 6.0 * rng::hash01(gx, gy, rng::mix(seed ^ 0x51ull)) - 3.0;
            const double cx = gx * spacing + ox + jx;
            const double cy = gy * spacing + oy + jy;
            const int x0 = std::max(0, int(cx - radius)), x1 = std::min(m.width - 1, int(cx + radius));
            const int y0 = std::max(0, int(cy - radius)), y1 = std::min(m.height - 1, int(cy + radius));
            for (int y = y0; y <= y1; ++y) {
                for (int x = x0; x <= x1; ++x) {
                    const double d2 = ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (radius * radius);
                    if (d2 < 1.0) m.at(x, y) = std::max(m.at(x, y), float(h_um * (1.0 - d2)));
                }
            }
        }
    }
}

void gen_cells(HeightMap& m, double cell, double depth_um, uint64_t seed) {
    // jittered-grid Voronoi F1 distance
    const int gw = int(m.width / cell) + 3;
    const int gh = int(m.height / cell) + 3;
    std::vector<double> sx(size_t(gw) * gh), sy(size_t(gw) * gh);
    for (int j = 0; j < gh; ++j) {
        for (int i = 0; i < gw; ++i) {
            sx[size_t(j) * gw + i] = (i - 1) * cell + cell * rng::hash01(i, j, seed);
            sy[size_t(j) * gw + i] = (j - 1) * cell + cell * rng::hash01(i, j, rng::mix(seed ^ 0xC3ull));
        }
    }
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            const int ci = int(x / cell) + 1, cj = int(y / cell) + 1;
            double best = 1e30;
            for (int j = cj - 1; j <= cj + 1; ++j) {
                for (int i = ci - 1; i <= ci + 1; ++i) {
                    const double dx = x - sx[size_t(j) * gw + i];
                    const double dy = y - sy[size_t(j) * gw + i];
                    best = std::min(best, dx * dx + dy * dy);
                }
            }
            m.at(x, y) = float(depth_um * std::sqrt(best) / cell);
        }
    }
}

void gen_blobs(HeightMap& m, int n, double s_lo, double s_hi, double h_lo, double h_hi,
               uint64_t seed) {
    for (int i = 0; i < n; ++i) {
        const double cx = rng::hash01(i, 0, seed) * m.width;
        const double cy = rng::hash01(i, 1, seed) * m.height;
        const double s = s_lo + (s_hi - s_lo) * rng::hash01(i, 2, seed);
        const double h = h_lo + (h_hi - h_lo) * rng::hash01(i, 3, seed);
        const double reach = 3.0 * s;
        const int x0 = std::max(0, int(cx - reach)), x1 = std::min(m.width - 1, int(cx + reach));
        const int y0 = std::max(0, int(cy - reach)), y1 = std::min(m.height - 1, int(cy + reach));
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const double d2 = ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (2.0 * s * s);
                m.at(x, y) += float(h * std::exp(-d2));
            }
        }
    }
}

void gen_weave(HeightMap& m, double period, double amp_um, rng::Stream& rs) {
    const double ph1 = rs.uniform(0.0, 2.0 * pi);
    const double ph2 = rs.uniform(0.0, 2.0 * pi);
    for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
            const bool warp = ((int(x / period) + int(y / period)) % 2) == 0;
            const double arg = warp ? 2.0 * pi * x / period + ph1 : 2.0 * pi * y / period + ph2;
            m.at(x, y) = float(amp_um * (0.5 + 0.5 * std::sin(arg)));
        }
    }
}

constexpr const char* class_names[texture_class_count] = {
    "grating_coarse_h", "grating_coarse_v", "grating_mid_h", "grating_mid_v",
    "grating_fine_h",   "grating_fine_v",   "dots_coarse",   "dots_fine",
    "crosshatch",       "cells_coarse",     "cells_fine",    "blobs_coarse",
    "blobs_fine",       "ridged_coarse",    "ridged_fine",   "smooth",
    "weave_coarse",     "weave_fine",
};

}  // namespace

const char* texture_class_name(int class_id) {
    if (class_id < 0 || class_id >= texture_class_count)
        throw std::invalid_argument("texture_class_name: class id out of range");
    return class_names[class_id];
}

HeightMap texture(int class_id, uint64_t seed) {
    if (class_id < 0 || class_id >= texture_class_count)
        throw std::invalid_argument("texture: class id out of range");
    HeightMap m = flat(texture_width, texture_height, texture_pitch_um);
    rng::Stream rs(rng::mix(seed ^ 0xA11CEull));
    switch (class_id) {
        case 0: gen_grating(m, 0, false, rs); break;
        case 1: gen_grating(m, 0, true, rs); break;
        case 2: gen_grating(m, 1, false, rs); break;
        case 3: gen_grating(m, 1, true, rs); break;
        case 4: gen_grating(m, 2, false, rs); break;
        case 5: gen_grating(m, 2, true, rs); break;
        case 6: gen_dots(m, 56.0, 14.0, 150.0, seed, rs); break;
        case 7: gen_dots(m, 26.0, 7.0, 90.0, seed, rs); break;
        case 8: {
            const double ph1 = rs.uniform(0.0, 2.0 * pi);
            const double ph2 = rs.uniform(0.0, 2.0 * pi);
            for (int y = 0; y < m.height; ++y)
                for (int x = 0; x < m.width; ++x)
                    m.at(x, y) = float(
                        60.0 * (0.5 + 0.5 * std::sin(2.0 * pi * 40.0 * x / m.width + ph1)) +
                        60.0 * (0.5 + 0.5 * std::sin(2.0 * pi * 30.0 * y / m.height + ph2)));
            break;
        }
        case 9: gen_cells(m, 64.0, 140.0, seed); break;
        case 10: gen_cells(m, 30.0, 90.0, seed); break;
        case 11: gen_blobs(m, 45, 20.0, 30.0, 110.0, 150.0, seed); break;
        case 12: gen_blobs(m, 380, 4.0, 6.5, 70.0, 95.0, seed); break;
        case 13: fill_ridged(m, 96.0, 3, 130.0, seed); break;
        case 14: fill_ridged(m, 28.0, 3, 80.0, seed); break;
        case 15: break;  // smooth
        case 16: gen_weave(m, 40.0, 110.0, rs); break;
        case 17: gen_weave(m, 20.0, 80.0, rs); break;
        default: break;
    }
    return m;
}

void gaussian_blur(HeightMap& map, double sigma_px) {
    if (!(sigma_px > 0.0)) return;
    const int radius = std::max(1, int(std::ceil(3.0 * sigma_px)));
    std::vector<double> kernel(size_t(radius) + 1);
    double norm = 0.0;
    for (int i = 0; i <= radius; ++i) {
        kernel[i] = std::exp(-0.5 * (i * i) / (sigma_px * sigma_px));
        norm += (i == 0) ? kernel[i] : 2.0 * kernel[i];
    }
    for (auto& k : kernel) k /= norm;

    const int w = map.width, h = map.height;
    std::vector<float> tmp(size_t(w) * h);
    // horizontal pass, edge-clamped
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = kernel[0] * map.at(x, y);
            for (int i = 1; i <= radius; ++i) {
                acc += kernel[i] * (map.at(std::max(0, x - i), y) +
                                    map.at(std::min(w - 1, x + i), y));
            }
            tmp[size_t(y) * w + x] = float(acc);
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = kernel[0] * tmp[size_t(y) * w + x];
            for (int i = 1; i <= radius; ++i) {
                acc += kernel[i] * (tmp[size_t(std::max(0, y - i)) * w + x] +
                                    tmp[size_t(std::min(h - 1, y + i)) * w + x]);
            }
            map.at(x, y) = float(acc);
        }
    }
}

}  // namespace sucktac::heightmap
