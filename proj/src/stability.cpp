#include "trawlsim/stability.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "trawlsim/errors.hpp"

namespace trawlsim::stability {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
// Scan resolution for bracketing equilibrium roots before bisection.
constexpr double kScanStepDeg = 0.05;
constexpr double kBisectTolDeg = 1e-6;

double horner(const std::array<double, 6>& c, double x) {
    double acc = c[5];
    for (int i = 4; i >= 0; --i) {
        acc = acc * x + c[i];
    }
    return acc;
}

[[noreturn]] void throw_out_of_domain(const ForceCurve& curve,
                                      double theta_deg) {
    std::ostringstream msg;
    msg << "stability: angle " << theta_deg
        << " deg outside force-curve domain [" << curve.theta_min_deg << ", "
        << curve.theta_max_deg << "] deg";
    throw ModelError(msg.str());
}

}  // namespace

void ForceCurve::validate() const {
    if (!(theta_min_deg < theta_max_deg)) {
        throw ModelError("stability: force-curve domain is empty");
    }
}

double water_force_n(const ForceCurve& curve, double theta_deg) {
    curve.validate();
    if (theta_deg < curve.theta_min_deg || theta_deg > curve.theta_max_deg) {
        throw_out_of_domain(curve, theta_deg);
    }
    return horner(curve.coeff, theta_deg);
}

double trawl_torque_nm(const ForceCurve& curve, double theta_deg,
                       double lever_arm_m) {
    return lever_arm_m * water_force_n(curve, theta_deg) *
           std::sin(theta_deg * kDegToRad);
}

double ballast_for_angle_kg(const ForceCurve& curve, double theta_deg,
                            double lever_arm_m, double gravity_mps2) {
    if (gravity_mps2 <= 0.0) {
        throw ModelError("stability: gravity must be positive");
    }
    return lever_arm_m * water_force_n(curve, theta_deg) / gravity_mps2;
}

double equilibrium_angle_deg(const ForceCurve& curve, double ballast_kg,
                             double lever_arm_m, double gravity_mps2) {
    curve.validate();
    if (lever_arm_m <= 0.0) {
        throw ModelError("stability: lever arm must be positive");
    }
    const double target = gravity_mps2 * ballast_kg / lever_arm_m;

    // Walk down from theta_max looking for the rightmost sign change of
    // F - target; the curve is not monotone below ~31 deg, so the first
    // bracket from the top is the physically reached equilibrium.
    double hi = curve.theta_max_deg;
    double f_hi = horner(curve.coeff, hi);
    if (f_hi == target) {
        return hi;
    }
    double lo = hi;
    double f_lo = f_hi;
    bool bracketed = false;
    while (lo > curve.theta_min_deg) {
        hi = lo;
        f_hi = f_lo;
        lo = std::max(curve.theta_min_deg, lo - kScanStepDeg);
        f_lo = horner(curve.coeff, lo);
        if ((f_lo - target) * (f_hi - target) <= 0.0) {
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        std::ostringstream msg;
        msg << "stability: no equilibrium; required force " << target
            << " N outside the curve's reach on [" << curve.theta_min_deg
            << ", " << curve.theta_max_deg << "] deg";
        throw ModelError(msg.str());
    }
    while (hi - lo > kBisectTolDeg) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = horner(curve.coeff, mid);
        if ((f_lo - target) * (f_mid - target) <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ballast_for_center_of_mass_kg(double target_cm_m, double body_mass_kg,
                                     double body_cm_m, double ballast_depth_m) {
    if (body_mass_kg <= 0.0) {
        throw ModelError("stability: body mass must be positive");
    }
    if (target_cm_m == body_cm_m) {
        return 0.0;  // already there
    }
    if (!(ballast_depth_m < target_cm_m && target_cm_m < body_cm_m)) {
        std::ostringstream msg;
        msg << "stability: target center of mass " << target_cm_m
            << " m not between ballast depth " << ballast_depth_m
            << " m and body center " << body_cm_m
            << " m; no positive ballast solves it";
        throw ModelError(msg.str());
    }
    return body_mass_kg * (body_cm_m - target_cm_m) /
           (target_cm_m - ballast_depth_m);
}

double per_buoy_displacement_kg(const MassBudget& budget) {
    if (budget.mode == DisplacementMode::PaperConstant) {
        return budget.per_buoy_displacement_kg;
    }
    // Fresh water at 1000 kg/m3; sphere radius from circumference.
    const double r = budget.buoy_circumference_m / (2.0 * std::numbers::pi);
    return 1000.0 * (4.0 / 3.0) * std::numbers::pi * r * r * r;
}

double buoyancy_margin_kg(const MassBudget& budget) {
    if (budget.buoy_count < 1) {
        throw ModelError("stability: buoyancy margin needs at least one buoy");
    }
    return budget.buoy_count * per_buoy_displacement_kg(budget) -
           budget.total_mass_kg();
}

}  // namespace trawlsim::stability
