#include "lip.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "csv.hpp"

namespace sucktac::lip {

namespace {
constexpr double pi = std::numbers::pi;
}

void LipSpec::validate() const {
    if (cycles < 0) throw std::invalid_argument("lip: N must be >= 0");
    if (!(amplitude_mm >= 0.0)) throw std::invalid_argument("lip: amplitude must be >= 0");
    if (!(base_radius_mm > amplitude_mm))
        throw std::invalid_argument("lip: base radius must exceed amplitude");
    if (!(inner_diameter_mm > 0.0) ||
        inner_diameter_mm >= 2.0 * (base_radius_mm - amplitude_mm))
        throw std::invalid_argument("lip: inner diameter must fit inside the corrugation valleys");
}

std::vector<Point2> lip_contour(const LipSpec& spec, int samples) {
    spec.validate();
    if (samples < 64) throw std::invalid_argument("lip_contour: samples must be >= 64");
    std::vector<Point2> pts(samples);
    for (int i = 0; i < samples; ++i) {
        const double s = 2.0 * pi * i / samples;
        const double r = spec.base_radius_mm + spec.amplitude_mm * std::sin(spec.cycles * s);
        pts[i] = {r * std::cos(s), r * std::sin(s)};
    }
    return pts;
}

double substrate_height(const SubstrateSpec& spec, double x_mm) {
    if (spec.flat()) return 0.0;
    return spec.amplitude_mm * std::cos(2.0 * pi * x_mm / spec.wavelength_mm);
}

double conformity_demand(const LipSpec& lip, const SubstrateSpec& substrate, int samples) {
    lip.validate();
    if (samples < 64) throw std::invalid_argument("conformity_demand: samples must be >= 64");
    if (substrate.flat()) return 0.0;

    std::vector<double> h(samples);
    for (int i = 0; i < samples; ++i) {
        const double s = 2.0 * pi * i / samples;
        h[i] = substrate_height(substrate, lip.base_radius_mm * std::cos(s));
    }
    if (lip.cycles == 0)
        return *std::max_element(h.begin(), h.end()) - *std::min_element(h.begin(), h.end());

    // max over all half-period windows; window length in samples
    const int w = int(std::ceil(double(samples) / (2.0 * lip.cycles)));
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double lo = h[i], hi = h[i];
        for (int j = 1; j <= w; ++j) {
            const double v = h[(i + j) % samples];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        worst = std::max(worst, hi - lo);
    }
    return worst;
}

HoleLayout hole_layout(int holes_per_ring, int rings, double hole_diameter_mm,
                       double ring_interval_mm, double base_radius_mm,
                       double annulus_inner_mm, double annulus_outer_mm) {
    if (holes_per_ring < 1) throw std::invalid_argument("hole_layout: holes_per_ring must be >= 1");
    if (rings < 1) throw std::invalid_argument("hole_layout: rings must be >= 1");
    if (!(hole_diameter_mm > 0.0)) throw std::invalid_argument("hole_layout: hole diameter must be > 0");
    if (!(ring_interval_mm > 0.0)) throw std::invalid_argument("hole_layout: ring interval must be > 0");
    if (!(base_radius_mm > hole_diameter_mm))
        throw std::invalid_argument("hole_layout: base radius too small");
    const double r_in = base_radius_mm - hole_diameter_mm / 2.0;
    const double r_out = base_radius_mm + (rings - 1) * ring_interval_mm + hole_diameter_mm / 2.0;
    if (r_in < annulus_inner_mm || r_out > annulus_outer_mm)
        throw std::invalid_argument(
            "hole_layout: holes leave the lip annulus [" + csv::fixed(annulus_inner_mm, 2) +
            ", " + csv::fixed(annulus_outer_mm, 2) + "] mm (occupied [" + csv::fixed(r_in, 2) +
            ", " + csv::fixed(r_out, 2) + "])");

    // intra-ring spacing: chord between neighbours on the innermost ring
    const double chord = 2.0 * base_radius_mm * std::sin(pi / holes_per_ring);
    if (!(chord > hole_diameter_mm))
        throw std::invalid_argument(
            "hole_layout: intra-ring overlap (neighbour spacing " + csv::fixed(chord, 4) +
            " mm <= hole diameter " + csv::fixed(hole_diameter_mm, 4) + " mm)");
    if (!(ring_interval_mm > hole_diameter_mm))
        throw std::invalid_argument(
            "hole_layout: inter-ring overlap (ring interval " + csv::fixed(ring_interval_mm, 4) +
            " mm <= hole diameter " + csv::fixed(hole_diameter_mm, 4) + " mm)");

    HoleLayout layout;
    layout.hole_diameter_mm = hole_diameter_mm;
    layout.holes_per_ring = holes_per_ring;
    for (int ring = 0; ring < rings; ++ring) {
        const double radius = base_radius_mm + ring * ring_interval_mm;
        layout.ring_radii_mm.push_back(radius);
        for (int k = 0; k < holes_per_ring; ++k) {
            const double a = 2.0 * pi * k / holes_per_ring;
            layout.centers.push_back({radius * std::cos(a), radius * std::sin(a)});
        }
    }
    return layout;
}

std::string points_csv(const std::vector<Point2>& pts) {
    std::string out = "x_mm,y_mm\n";
    for (const auto& p : pts) {
        out += csv::fixed(p.x, 6);
        out += ',';
        out += csv::fixed(p.y, 6);
        out += '\n';
    }
    return out;
}

std::string layout_svg(const std::vector<Point2>& contour, const HoleLayout* holes) {
    double extent = 1.0;
    for (const auto& p : contour)
        extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    extent *= 1.05;
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + csv::fixed(-extent, 3) + " " +
           csv::fixed(-extent, 3) + " " + csv::fixed(2 * extent, 3) + " " +
           csv::fixed(2 * extent, 3) + "\">\n";
    svg += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"0.2\" points=\"";
    for (size_t i = 0; i < contour.size(); ++i) {
        if (i) svg += ' ';
        svg += csv::fixed(contour[i].x, 3) + "," + csv::fixed(contour[i].y, 3);
    }
    svg += "\"/>\n";
    if (holes) {
        for (const auto& c : holes->centers) {
            svg += "<circle cx=\"" + csv::fixed(c.x, 3) + "\" cy=\"" + csv::fixed(c.y, 3) +
                   "\" r=\"" + csv::fixed(holes->hole_diameter_mm / 2.0, 3) +
                   "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace sucktac::lip
