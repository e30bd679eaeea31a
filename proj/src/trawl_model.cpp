#include "trawlsim/trawl_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "trawlsim/errors.hpp"

namespace trawlsim::trawl {

void TrawlSpec::validate() const {
    if (mouth_width_m <= 0.0 || mouth_height_m <= 0.0 || net_length_m <= 0.0 ||
        pore_diameter_um <= 0.0 || buoy_circumference_m <= 0.0) {
        throw ModelError("trawl: all dimensions must be strictly positive");
    }
    const double pore_m = pore_diameter_um * 1e-6;
    if (pore_m >= mouth_width_m || pore_m >= mouth_height_m) {
        throw ModelError("trawl: pore diameter must be smaller than the mouth");
    }
    if (frame_mass_kg < 0.0 || printed_mass_kg < 0.0 || panel_mass_kg < 0.0 ||
        ballast_mass_kg < 0.0) {
        throw ModelError("trawl: component masses must be non-negative");
    }
    if (buoy_count < 1) {
        throw ModelError("trawl: at least one buoy required");
    }
}

void ParticleSpec::validate() const {
    if (!(diameter_mm > 0.0) || diameter_mm > 5.0) {
        std::ostringstream msg;
        msg << "trawl: particle diameter " << diameter_mm
            << " mm outside the microplastic range (0, 5] mm";
        throw ModelError(msg.str());
    }
}

double trawl_volume_m3(const TrawlSpec& spec) {
    spec.validate();
    return spec.net_length_m * spec.mouth_width_m * spec.mouth_height_m / 3.0;
}

std::int64_t particle_capacity(double volume_m3, const ParticleSpec& particle,
                               RoundMode mode) {
    if (volume_m3 <= 0.0) {
        throw ModelError("trawl: capacity needs a positive volume");
    }
    particle.validate();
    const double r_mm = particle.diameter_mm / 2.0;
    double particle_mm3 = (4.0 / 3.0) * std::numbers::pi * r_mm * r_mm * r_mm;
    if (mode == RoundMode::Paper) {
        // Snap up to the 0.1 mm^3 grid; 65.44985 -> the published 65.5.
        particle_mm3 = std::ceil(particle_mm3 * 10.0) / 10.0;
    }
    const double ratio = volume_m3 * 1e9 / particle_mm3;
    // 1e-9 guard: unit round-trips (65.5e-9 m3 for one particle) can land a
    // hair under the integer they represent.
    return static_cast<std::int64_t>(std::floor(ratio + 1e-9));
}

double fill_time_days(std::int64_t capacity, double rate_per_hour,
                      double duty_hours_per_day) {
    if (rate_per_hour <= 0.0) {
        throw ModelError("trawl: collection rate must be positive");
    }
    if (!(duty_hours_per_day > 0.0) || duty_hours_per_day > 24.0) {
        throw ModelError("trawl: duty cycle must be in (0, 24] hours/day");
    }
    if (capacity < 0) {
        throw ModelError("trawl: capacity must be non-negative");
    }
    return static_cast<double>(capacity) /
           (rate_per_hour * duty_hours_per_day);
}

}  // namespace trawlsim::trawl
