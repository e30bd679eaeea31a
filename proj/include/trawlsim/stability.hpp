#pragma once

#include <array>

namespace trawlsim::stability {

// Water-force curve: force normal to the trawl face (N) as a quintic in the
// tilt angle (degrees; 90 = face vertical), regressed from drag simulations
// of the worst-case closed-net model moving at 2 m/s.
//
// The polynomial is only meaningful on [theta_min, theta_max]; below ~12 deg
// it goes negative. Note that even inside the default domain it is not
// monotone: there is a shallow local maximum near 22.9 deg (~56.3 N) and a
// local minimum near 31.1 deg (~49.7 N) before the steep rise to ~860 N at
// 90 deg. The equilibrium solver accounts for this.
struct ForceCurve {
    std::array<double, 6> coeff{-967.5956,    144.257,      -7.648865,
                                0.1886765,    -0.002154494, 0.000009248496};
    double theta_min_deg = 15.0;
    double theta_max_deg = 90.0;

    void validate() const;
};

// Lever geometry for the tipping-torque balance: the mouth's center of
// pressure sits lever_arm below the surface in trim.
struct BallastProblem {
    double lever_arm_m = 0.25;
    double gravity_mps2 = 9.8;
};

enum class DisplacementMode { PaperConstant, FromCircumference };

// Component masses hung on the buoys. The published budget rounds the total
// to 15 kg; the frame/printed/panel figures are printed and the remainder is
// bucketed under ballast here.
struct MassBudget {
    double frame_kg = 3.2;
    double printed_kg = 4.0;
    double panel_kg = 3.5;
    double ballast_kg = 4.3;
    double misc_kg = 0.0;
    int buoy_count = 4;
    double per_buoy_displacement_kg = 16.98;  // published constant
    double buoy_circumference_m = 1.0;
    DisplacementMode mode = DisplacementMode::PaperConstant;

    double total_mass_kg() const {
        return frame_kg + printed_kg + panel_kg + ballast_kg + misc_kg;
    }
};

// Horner evaluation of the quintic. Angles outside the valid domain raise a
// ModelError quoting the domain bounds.
double water_force_n(const ForceCurve& curve, double theta_deg);

// Tipping moment lever * F(theta) * sin(theta).
double trawl_torque_nm(const ForceCurve& curve, double theta_deg,
                       double lever_arm_m);

// Ballast mass holding equilibrium at theta. The balance is
// lever * F(theta) * sin(theta) = g * m * sin(theta); the sin factors cancel,
// leaving m = lever * F(theta) / g.
double ballast_for_angle_kg(const ForceCurve& curve, double theta_deg,
                            double lever_arm_m = 0.25,
                            double gravity_mps2 = 9.8);

// Inverse of ballast_for_angle_kg: the tilt at which `ballast_kg` balances
// the water force. Solved by bisection to |d theta| <= 1e-6 deg. Because the
// curve dips between ~23 and ~31 deg, a force target can have up to three
// crossings; this returns the largest angle, which is the first equilibrium
// reached as the trawl tips away from vertical. No crossing in the domain
// raises a no-equilibrium ModelError.
double equilibrium_angle_deg(const ForceCurve& curve, double ballast_kg,
                             double lever_arm_m = 0.25,
                             double gravity_mps2 = 9.8);

// Ballast mass w placing the assembly's center of mass at target_cm:
//   target = (body_mass*body_cm + w*ballast_depth) / (body_mass + w).
// Requires ballast_depth < target_cm <= body_cm; target == body_cm needs no
// ballast at all.
double ballast_for_center_of_mass_kg(double target_cm_m, double body_mass_kg,
                                     double body_cm_m, double ballast_depth_m);

double per_buoy_displacement_kg(const MassBudget& budget);

// Spare lift: total buoy displacement minus carried mass. Negative means the
// rig sinks; the value is returned as-is.
double buoyancy_margin_kg(const MassBudget& budget);

}  // namespace trawlsim::stability
