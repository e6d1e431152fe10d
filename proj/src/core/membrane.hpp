#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sucktac::membrane {

/// Geometric and material constants of the thin-film suction model (SI).
struct MembraneParams {
    double radius_m = 0.020;      // membrane radius R
    double thickness_m = 0.002;   // film thickness t
    double shear_c_pa = 98000.0;  // neo-Hookean constant C
    double p_atm_pa = 101000.0;   // atmospheric pressure
    double standoff_m = 0.002;    // initial membrane-substrate height h

    static MembraneParams from_mm_mpa(double r_mm, double t_mm, double c_mpa,
                                      double p_atm_mpa, double h_mm);

    // throws std::invalid_argument; thin-film assumption enforced as t/R <= 0.2
    void validate() const;
};

/// Solved membrane state at one cavity pressure. Sign convention: w >= 0 is
/// deflection into the cavity (gap volume grows), which keeps sigma_r >= 0,
/// gap pressure <= atmospheric and the attachment force >= 0.
struct SuctionSolution {
    double deflection_m = 0.0;           // central deflection w
    double arc_length_m = 0.0;           // deformed arc length L
    double radial_stress_pa = 0.0;       // edge radial stress sigma_r
    double edge_angle_rad = 0.0;         // small-deformation edge angle 2w/R
    double gap_pressure_pa = 0.0;        // pressure in the membrane-substrate gap
    double pressure_difference_pa = 0.0; // gap pressure minus cavity pressure
    double force_n = 0.0;                // attachment force
    double residual_pa = 0.0;            // force-balance residual at convergence
};

// Pure pieces of the model. These are ratio formulas: any consistent unit
// system works (tests exercise them directly in mm / MPa).

/// Parabolic deflection profile z(r); requires 0 <= r <= R.
double deflection_at(double r, double w, double radius);

/// Arc length of the deformed profile, closed form for the parabola.
/// Matches the adaptive-quadrature oracle to ~1e-12 relative.
double arc_length(double w, double radius);
double arc_length_derivative(double w, double radius);

/// Neo-Hookean radial stress from stretch L/2R; rejects L < 2R.
double radial_stress(double arc_len, double radius, double shear_c);

/// Isothermal gap pressure from the displaced volume (parabola mean w/2).
double gap_pressure(double w, double standoff, double p_atm);

/// Signed force balance: (gap - cavity) pressure minus the edge-tension
/// pull-back, in pressure units. Positive means the membrane is
/// under-deflected. Strictly decreasing in w, so it has one root.
double force_balance_residual(double w, const MembraneParams& params, double p_cavity_pa);
double force_balance_residual_derivative(double w, const MembraneParams& params,
                                         double p_cavity_pa);

inline constexpr double max_suction_pa = 15000.0;  // model validity cap
inline constexpr double solve_tol_m = 1e-12;       // 1e-9 mm
inline constexpr double residual_tol_pa = 1e-3;    // 1e-9 MPa
inline constexpr int solve_max_iter = 200;

/// Bracketed bisection on w in [0, 2h] followed by a Newton polish.
/// p_cavity is absolute; requires 0 <= p_atm - p_cavity <= max_suction_pa.
/// Throws validity_error outside that range, no_bracket_error /
/// convergence_error on solver failure.
SuctionSolution solve_deflection(const MembraneParams& params, double p_cavity_pa);

/// Attachment force pi R^2 (P_atm - P_gap) of the solved state, newtons.
double attachment_force(const MembraneParams& params, double p_cavity_pa);

struct ForceCurvePoint {
    double p_cavity_kpa_gauge = 0.0;  // <= 0, more negative = more suction
    double force_n = 0.0;
    bool ok = false;
    std::string error;
};

struct ForceCurve {
    std::vector<ForceCurvePoint> samples;
};

/// Sweep of gauge cavity pressures (kPa, <= 0, strictly decreasing).
/// Per-point failures are annotated; valid points are still returned.
ForceCurve force_curve(const MembraneParams& params, const std::vector<double>& sweep_kpa_gauge);

/// CSV: header `p_cavity_kpa,force_n`, fixed 6 decimals, valid points only.
std::string force_curve_csv(const ForceCurve& curve);
ForceCurve read_force_curve_csv(std::istream& in);

struct DetachmentRecord {
    std::string label;
    std::vector<std::pair<double, double>> series;  // (displacement mm, force N)
    double work_mj = 0.0;
};

/// Trapezoidal integral of a force-displacement series (mm x N -> mJ).
/// Requires >= 2 points with strictly increasing displacements.
double detachment_work_mj(const std::vector<std::pair<double, double>>& series);

/// CSV with header `displacement_mm,force_n`.
DetachmentRecord read_detachment_csv(std::istream& in, std::string label);

}  // namespace sucktac::membrane
