#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sucktac::heightmap {

/// Rectangular height field standing in for a physical surface.
struct HeightMap {
    int width = 0;
    int height = 0;
    double pitch_um = 60.0;        // sample spacing
    std::vector<float> values_um;  // row-major heights
    int grains_placed = 0;         // generation stat (sandpaper only)

    float at(int x, int y) const { return values_um[size_t(y) * width + x]; }
    float& at(int x, int y) { return values_um[size_t(y) * width + x]; }
};

HeightMap flat(int width, int height, double pitch_um);

// Sandpaper generation constants (calibrated so the spectral roughness
// ordering over the 36..600 mesh range is monotone with wide margins).
inline constexpr double grit_mean_diameter_um(int mesh) { return 19000.0 / mesh; }
inline constexpr double sandpaper_pitch_um = 75.0;   // generate 2x finer than the sensor grid
inline constexpr double sandpaper_fill = 0.55;       // target splat-area fill
inline constexpr double grain_height_ratio = 0.30;   // grain height / diameter
inline constexpr double grain_diameter_spread = 0.12;
inline constexpr double grain_spacing_bias = 0.8;    // reject closer than bias*(r1+r2)

/// Random rounded-grain field with blue-noise (non-overlap-biased)
/// placement; mean grain diameter follows the 19000/mesh law.
/// Deterministic for a fixed (mesh, seed, size). mesh in [36, 600].
HeightMap sandpaper(int mesh, uint64_t seed, int width, int height,
                    double pitch_um = sandpaper_pitch_um);

inline constexpr int texture_class_count = 18;
inline constexpr int texture_width = 640;
inline constexpr int texture_height = 480;
inline constexpr double texture_pitch_um = 60.0;

/// Stable class names for ids 0..17.
const char* texture_class_name(int class_id);

/// One of 18 procedural surface families (gratings at three frequencies x
/// two orientations, dot lattices at two spacings, cross-hatch, cellular
/// at two scales, random blobs at two scales, ridged noise at two scales,
/// smooth, and two weaves). Same-frequency orientation pairs carry a 1.4x
/// amplitude ratio so the rotation-blind spectral features separate them.
/// Deterministic for a fixed (class_id, seed).
HeightMap texture(int class_id, uint64_t seed);

/// Separable gaussian blur (kernel truncated at 3 sigma), used by the
/// renderer as the membrane-conformity low-pass.
void gaussian_blur(HeightMap& map, double sigma_px);

}  // namespace sucktac::heightmap
