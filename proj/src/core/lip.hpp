#pragma once

#include <string>
#include <vector>

namespace sucktac::lip {

/// Corrugated lip contour r(s) = R0 + A sin(N s). All lengths in mm.
struct LipSpec {
    int cycles = 8;               // N; 0 = plain circle
    double base_radius_mm = 28.5; // R0
    double amplitude_mm = 1.5;    // A
    double inner_diameter_mm = 40.0;

    void validate() const;  // throws std::invalid_argument
    double outer_diameter_mm() const { return 2.0 * (base_radius_mm + amplitude_mm); }
};

/// Sinusoidal substrate y(x) = amplitude * cos(2 pi x / wavelength);
/// wavelength <= 0 marks a flat substrate (D/T = 0).
struct SubstrateSpec {
    double wavelength_mm = 30.0;
    double amplitude_mm = 0.5;

    bool flat() const { return !(wavelength_mm > 0.0); }
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Closed contour sampled at uniform s in [0, 2pi); samples >= 64.
std::vector<Point2> lip_contour(const LipSpec& spec, int samples);

double substrate_height(const SubstrateSpec& spec, double x_mm);

/// Sealing-difficulty proxy: the worst substrate-height range any single
/// corrugation must absorb. Heights are sampled along the baseline R0
/// circle (lip centered over a crest at x = 0); for N >= 1 the range is
/// maximized over every arc spanning half a corrugation period, for N = 0
/// over the whole contour. Window nesting makes the result nonincreasing
/// in N by construction. Not a force prediction.
double conformity_demand(const LipSpec& lip, const SubstrateSpec& substrate, int samples);

struct HoleLayout {
    double hole_diameter_mm = 0.5;
    double hole_depth_mm = 0.3;
    std::vector<double> ring_radii_mm;
    int holes_per_ring = 0;
    std::vector<Point2> centers;
};

// Ring radii start just outside the 20 mm inner radius of the default lip
// annulus (20-30 mm), so three rings at the 0.6 mm interval fit every
// supported density.
inline constexpr double default_ring_base_radius_mm = 21.0;
inline constexpr double default_annulus_inner_mm = 20.0;
inline constexpr double default_annulus_outer_mm = 30.0;

/// Concentric-ring microhole array; validates that no two hole disks
/// overlap and that every hole disk stays inside the lip annulus.
/// Throws std::invalid_argument naming the violated constraint.
HoleLayout hole_layout(int holes_per_ring, int rings, double hole_diameter_mm,
                       double ring_interval_mm, double base_radius_mm,
                       double annulus_inner_mm = default_annulus_inner_mm,
                       double annulus_outer_mm = default_annulus_outer_mm);

/// CSV with header `x_mm,y_mm`, 6 decimals.
std::string points_csv(const std::vector<Point2>& pts);
/// Minimal SVG: a single polygon for the contour plus one circle per hole.
std::string layout_svg(const std::vector<Point2>& contour, const HoleLayout* holes);

}  // namespace sucktac::lip
