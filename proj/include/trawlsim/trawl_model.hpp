#pragma once

#include <cstdint>

#include "trawlsim/rounding.hpp"

namespace trawlsim::trawl {

// Physical description of the modified manta trawl. Defaults match the
// as-built unit: 1 m x 0.5 m mouth, 1.5 m net, 300 um pores, four spherical
// buoys of 1 m circumference.
struct TrawlSpec {
    double mouth_width_m = 1.0;
    double mouth_height_m = 0.5;
    double net_length_m = 1.5;
    double pore_diameter_um = 300.0;
    double frame_mass_kg = 3.2;
    double printed_mass_kg = 4.0;
    double panel_mass_kg = 3.5;
    double ballast_mass_kg = 4.3;
    double buoy_circumference_m = 1.0;
    int buoy_count = 4;

    double mouth_area_m2() const { return mouth_width_m * mouth_height_m; }
    void validate() const;  // throws ModelError
};

// Worst-case collected particle: a sphere at the 5 mm upper bound of the
// microplastic size definition.
struct ParticleSpec {
    double diameter_mm = 5.0;
    void validate() const;
};

// Net volume under the rectangular-pyramid model, L*W*H/3.
double trawl_volume_m3(const TrawlSpec& spec);

// How many worst-case particles fit in `volume` by naive volume division
// (no packing correction, so a deliberate over-estimate). Paper rounding
// snaps the per-particle sphere volume up to the next 0.1 mm^3 -- 65.5 for
// the 5 mm particle, which is the constant behind the published capacity.
std::int64_t particle_capacity(double volume_m3, const ParticleSpec& particle,
                               RoundMode mode);

// Days to fill `capacity` collecting `rate_per_hour` for `duty_hours_per_day`.
double fill_time_days(std::int64_t capacity, double rate_per_hour,
                      double duty_hours_per_day);

}  // namespace trawlsim::trawl
