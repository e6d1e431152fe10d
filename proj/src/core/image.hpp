#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heightmap.hpp"

namespace sucktac::tactile {

inline constexpr int image_width = 640;
inline constexpr int image_height = 480;
inline constexpr double default_mask_radius_fraction = 0.45;

/// Press parameters for one capture. Ranges are enforced: preload 3-5 N,
/// pressure 5-8 kPa, offsets up to +-2 mm.
struct CaptureParams {
    double press_force_n = 4.0;
    double pressure_kpa = 6.5;
    double offset_x_um = 0.0;
    double offset_y_um = 0.0;

    void validate() const;
};

CaptureParams sample_capture(uint64_t seed);

/// 640x480 grayscale tactile frame. Pixels are in [0,1] for captures and
/// in [-1,1] for difference images (signed_values set).
struct TactileImage {
    int width = image_width;
    int height = image_height;
    std::vector<float> pixels;
    bool signed_values = false;

    // capture metadata
    double press_force_n = 0.0;
    double pressure_kpa = 0.0;
    bool mask_applied = false;
    double mask_radius_fraction = 0.0;
    int class_label = -1;  // -1 = none

    float at(int x, int y) const { return pixels[size_t(y) * width + x]; }
    float& at(int x, int y) { return pixels[size_t(y) * width + x]; }
};

// Shading model constants. base + slope and depth terms put a mesh-36
// sandpaper render at roughly 80% of the dynamic range; the membrane
// blur is the conformity low-pass that makes fine grit fade out.
inline constexpr double shade_base = 0.5;
inline constexpr double shade_k_slope = 0.8;
inline constexpr double shade_k_depth = 0.016;        // per newton
inline constexpr double shade_pressure_gain = 0.03;   // per kPa about 6.5
inline constexpr double membrane_blur_um = 120.0;
inline constexpr double noise_lowfreq_sigma = 0.012;  // smooth illumination/membrane noise
inline constexpr double noise_lowfreq_cell_px = 12.0;
inline constexpr double noise_white_sigma = 0.0005;   // sensor noise

/// Contact-depth brightening term for a given preload.
inline double contact_depth_term(double press_force_n) {
    return shade_k_depth * press_force_n;
}

/// Render a height map into a tactile frame: membrane blur, slope-magnitude
/// shading plus the contact-depth term, resampling to 640x480 (box average
/// when the map is an integer multiple of the frame), then seeded additive
/// noise. Pixels stay in [0,1]; quantization happens only on export.
TactileImage render_tactile(const heightmap::HeightMap& map, const CaptureParams& params,
                            uint64_t seed);

/// Frame with no contact at all (membrane at rest): base intensity plus
/// noise. Reference for hole sensing.
TactileImage render_resting(uint64_t seed);

/// Pixelwise img - ref; result is signed in [-1,1]. Dimensions must match.
TactileImage difference_image(const TactileImage& img, const TactileImage& ref);

/// Zero every pixel outside the centered disk of radius
/// fraction * min(width, height); requires 0 < fraction <= 0.5.
/// Pixel centers at (x+0.5, y+0.5) against the geometric image center.
TactileImage apply_center_mask(const TactileImage& img, double radius_fraction);

/// Snap pixels to the 8-bit grid used by the P2 format.
void quantize_8bit(TactileImage& img);

// ASCII portable graymap, maxval 255, row-major, one image row per line.
// write(read(f)) is byte-identical. Signed images are offset-encoded as
// (v+1)/2 and read back unsigned.
std::string write_pgm(const TactileImage& img);
TactileImage read_pgm(std::istream& in);
void write_pgm_file(const TactileImage& img, const std::string& path);
TactileImage read_pgm_file(const std::string& path);

}  // namespace sucktac::tactile
