#include "membrane.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "errors.hpp"
#include "units.hpp"

namespace sucktac::membrane {

namespace {
constexpr double pi = std::numbers::pi;
}

MembraneParams MembraneParams::from_mm_mpa(double r_mm, double t_mm, double c_mpa,
                                           double p_atm_mpa, double h_mm) {
    MembraneParams p;
    p.radius_m = r_mm * units::mm_to_m;
    p.thickness_m = t_mm * units::mm_to_m;
    p.shear_c_pa = c_mpa * units::mpa_to_pa;
    p.p_atm_pa = p_atm_mpa * units::mpa_to_pa;
    p.standoff_m = h_mm * units::mm_to_m;
    p.validate();
    return p;
}

void MembraneParams::validate() const {
    if (!(radius_m > 0.0)) throw std::invalid_argument("membrane: radius must be > 0");
    if (!(thickness_m > 0.0)) throw std::invalid_argument("membrane: thickness must be > 0");
    if (thickness_m / radius_m > 0.2)
        throw std::invalid_argument("membrane: thin-film assumption requires t/R <= 0.2");
    if (!(shear_c_pa > 0.0)) throw std::invalid_argument("membrane: C must be > 0");
    if (!(p_atm_pa > 0.0)) throw std::invalid_argument("membrane: P_atm must be > 0");
    if (!(standoff_m > 0.0)) throw std::invalid_argument("membrane: standoff h must be > 0");
}

double deflection_at(double r, double w, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("deflection_at: radius must be > 0");
    if (r < 0.0 || r > radius)
        throw std::invalid_argument("deflection_at: r outside [0, R]");
    return w * (1.0 - (r * r) / (radius * radius));
}

double arc_length(double w, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("arc_length: radius must be > 0");
    if (w < 0.0) throw std::invalid_argument("arc_length: w must be >= 0");
    const double u = 2.0 * w / radius;  // slope magnitude at the rim
    if (u < 1e-8) {
        // asinh(u)/u series keeps the w->0 limit exact
        return radius * (std::sqrt(1.0 + u * u) + 1.0 - u * u / 6.0);
    }
    return radius * std::sqrt(1.0 + u * u) + (radius / u) * std::asinh(u);
}

double arc_length_derivative(double w, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("arc_length_derivative: radius must be > 0");
    if (w < 0.0) throw std::invalid_argument("arc_length_derivative: w must be >= 0");
    const double u = 2.0 * w / radius;
    if (u < 1e-6) return 8.0 * w / (3.0 * radius);  // series limit
    const double s = std::sqrt(1.0 + u * u);
    // dL/dw = 2 [ u/s + (u/s - asinh u)/u^2 ]
    return 2.0 * (u / s + (u / s - std::asinh(u)) / (u * u));
}

double radial_stress(double arc_len, double radius, double shear_c) {
    if (!(radius > 0.0)) throw std::invalid_argument("radial_stress: radius must be > 0");
    if (arc_len < 2.0 * radius)
        throw std::invalid_argument("radial_stress: L < 2R is outside the tensile regime");
    const double stretch = arc_len / (2.0 * radius);
    const double inv2 = 1.0 / (stretch * stretch);
    return 2.0 * shear_c * (stretch * stretch - inv2 * inv2);
}

double gap_pressure(double w, double standoff, double p_atm) {
    if (!(standoff > 0.0)) throw std::invalid_argument("gap_pressure: h must be > 0");
    if (w < 0.0) throw std::invalid_argument("gap_pressure: w must be >= 0");
    return p_atm * standoff / (standoff + 0.5 * w);
}

double force_balance_residual(double w, const MembraneParams& params, double p_cavity_pa) {
    params.validate();
    if (w < 0.0) throw std::invalid_argument("force_balance_residual: w must be >= 0");
    const double r = params.radius_m;
    const double gap = gap_pressure(w, params.standoff_m, params.p_atm_pa);
    const double sigma = radial_stress(arc_length(w, r), r, params.shear_c_pa);
    const double tension = 4.0 * params.thickness_m * sigma * w / (r * r);
    return (gap - p_cavity_pa) - tension;
}

double force_balance_residual_derivative(double w, const MembraneParams& params,
                                         double p_cavity_pa) {
    (void)p_cavity_pa;  // residual slope does not depend on the cavity term
    params.validate();
    if (w < 0.0) throw std::invalid_argument("force_balance_residual_derivative: w must be >= 0");
    const double r = params.radius_m;
    const double h = params.standoff_m;
    const double denom = h + 0.5 * w;
    const double dgap = -0.5 * params.p_atm_pa * h / (denom * denom);

    const double len = arc_length(w, r);
    const double stretch = len / (2.0 * r);
    const double sigma = radial_stress(len, r, params.shear_c_pa);
    // dsigma/dL = (2C/R) (stretch + 2 stretch^-5)
    const double dsigma_dl =
        (2.0 * params.shear_c_pa / r) * (stretch + 2.0 / std::pow(stretch, 5));
    const double dsigma = dsigma_dl * arc_length_derivative(w, r);
    const double k = 4.0 * params.thickness_m / (r * r);
    return dgap - k * (sigma + w * dsigma);
}

SuctionSolution solve_deflection(const MembraneParams& params, double p_cavity_pa) {
    params.validate();
    const double suction = params.p_atm_pa - p_cavity_pa;
    if (suction < 0.0)
        throw validity_error("solve_deflection: cavity pressure above atmospheric is not modeled");
    if (suction > max_suction_pa)
        throw validity_error("solve_deflection: suction beyond 15 kPa violates the rigid-cap assumption");

    auto build = [&](double w, double residual) {
        SuctionSolution s;
        s.deflection_m = w;
        s.arc_length_m = arc_length(w, params.radius_m);
        s.radial_stress_pa = radial_stress(s.arc_length_m, params.radius_m, params.shear_c_pa);
        s.edge_angle_rad = 2.0 * w / params.radius_m;
        s.gap_pressure_pa = gap_pressure(w, params.standoff_m, params.p_atm_pa);
        s.pressure_difference_pa = s.gap_pressure_pa - p_cavity_pa;
        s.force_n = pi * params.radius_m * params.radius_m *
                    (params.p_atm_pa - s.gap_pressure_pa);
        s.residual_pa = residual;
        return s;
    };

    if (suction == 0.0) return build(0.0, 0.0);

    double lo = 0.0;
    double hi = 2.0 * params.standoff_m;
    double flo = force_balance_residual(lo, params, p_cavity_pa);
    double fhi = force_balance_residual(hi, params, p_cavity_pa);
    if (flo < 0.0 || fhi > 0.0)
        throw no_bracket_error("solve_deflection: residual does not change sign on [0, 2h]");

    int iter = 0;
    while (hi - lo > solve_tol_m) {
        if (++iter > solve_max_iter)
            throw convergence_error("solve_deflection: bisection iteration cap exceeded");
        const double mid = 0.5 * (lo + hi);
        const double fm = force_balance_residual(mid, params, p_cavity_pa);
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }

    // Newton polish; the residual is smooth and monotone, stay in bracket.
    double w = 0.5 * (lo + hi);
    double f = force_balance_residual(w, params, p_cavity_pa);
    for (int i = 0; i < 4 && std::abs(f) > 0.0; ++i) {
        const double df = force_balance_residual_derivative(w, params, p_cavity_pa);
        if (df == 0.0) break;
        double next = w - f / df;
        if (next < lo || next > hi) break;
        w = next;
        f = force_balance_residual(w, params, p_cavity_pa);
    }
    if (std::abs(f) > residual_tol_pa)
        throw convergence_error("solve_deflection: residual above tolerance after polish");
    return build(w, f);
}

double attachment_force(const MembraneParams& params, double p_cavity_pa) {
    return solve_deflection(params, p_cavity_pa).force_n;
}

ForceCurve force_curve(const MembraneParams& params, const std::vector<double>& sweep_kpa_gauge) {
    params.validate();
    for (size_t i = 1; i < sweep_kpa_gauge.size(); ++i) {
        if (!(sweep_kpa_gauge[i] < sweep_kpa_gauge[i - 1]))
            throw std::invalid_argument("force_curve: sweep must be strictly decreasing");
    }
    ForceCurve curve;
    curve.samples.reserve(sweep_kpa_gauge.size());
    for (double gauge : sweep_kpa_gauge) {
        ForceCurvePoint pt;
        pt.p_cavity_kpa_gauge = gauge;
        if (gauge > 0.0) {
            pt.error = "positive gauge pressure is not modeled";
            curve.samples.push_back(std::move(pt));
            continue;
        }
        const double p_cavity = params.p_atm_pa + gauge * units::kpa_to_pa;
        try {
            pt.force_n = solve_deflection(params, p_cavity).force_n;
            pt.ok = true;
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
        curve.samples.push_back(std::move(pt));
    }
    return curve;
}

std::string force_curve_csv(const ForceCurve& curve) {
    std::string out = "p_cavity_kpa,force_n\n";
    for (const auto& pt : curve.samples) {
        if (!pt.ok) continue;
        out += csv::fixed(pt.p_cavity_kpa_gauge, 6);
        out += ',';
        out += csv::fixed(pt.force_n, 6);
        out += '\n';
    }
    return out;
}

ForceCurve read_force_curve_csv(std::istream& in) {
    auto rows = csv::read_rows(in, "p_cavity_kpa,force_n", 2);
    ForceCurve curve;
    for (const auto& row : rows) {
        ForceCurvePoint pt;
        pt.p_cavity_kpa_gauge = row[0];
        pt.force_n = row[1];
        pt.ok = true;
        if (!curve.samples.empty() &&
            !(pt.p_cavity_kpa_gauge < curve.samples.back().p_cavity_kpa_gauge))
            throw parse_error("force curve: cavity pressures must be strictly decreasing");
        curve.samples.push_back(pt);
    }
    return curve;
}

double detachment_work_mj(const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 2)
        throw std::invalid_argument("detachment_work: need at least 2 points");
    double work = 0.0;
    for (size_t i = 1; i < series.size(); ++i) {
        const double dx = series[i].first - series[i - 1].first;
        if (!(dx > 0.0))
            throw std::invalid_argument("detachment_work: displacements must be strictly increasing");
        work += 0.5 * (series[i].second + series[i - 1].second) * dx;  // N*mm = mJ
    }
    return work;
}

DetachmentRecord read_detachment_csv(std::istream& in, std::string label) {
    auto rows = csv::read_rows(in, "displacement_mm,force_n", 2);
    DetachmentRecord rec;
    rec.label = std::move(label);
    for (const auto& row : rows) rec.series.emplace_back(row[0], row[1]);
    rec.work_mj = detachment_work_mj(rec.series);
    return rec;
}

}  // namespace sucktac::membrane
