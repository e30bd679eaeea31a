#pragma once

#include <string_view>

namespace trawlsim::units {

// Only the units this project actually exchanges at its boundaries.
// Everything internal runs in SI.
enum class Unit {
    Meter,
    Foot,
    CubicMeterPerSec,
    CubicFootPerSec,
    MeterPerSec,
    Knot,
    Kilogram,
    Newton,
    NewtonMeter,
    Watt,
    WattHour,
    ParticlesPerCubicMeter,
    Particles,
};

enum class Dimension {
    Length,
    Flow,
    Speed,
    Mass,
    Force,
    Torque,
    Power,
    Energy,
    Concentration,
    Count,
};

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::Meter;
};

std::string_view unit_name(Unit u);
std::string_view dimension_name(Dimension d);
Dimension dimension_of(Unit u);

// Scale factor from `u` to the SI base unit of its dimension. The constants
// are fixed data (1 ft = 0.3048 m, 1 ft3 = 0.0283168 m3, 1 kn = 0.514444 m/s),
// never derived from one another.
double si_factor(Unit u);

// Converts between dimensionally compatible units; round-tripping a->b->a
// returns the original value to within 1 part in 1e12. Incompatible
// dimensions raise a ModelError naming both units.
Quantity convert(const Quantity& q, Unit target);

// Trawling-protocol speed cap: true iff v is strictly under 3 knots.
// Negative speeds are rejected.
bool speed_cap_check(const Quantity& v);

inline Quantity meters(double v) { return {v, Unit::Meter}; }
inline Quantity feet(double v) { return {v, Unit::Foot}; }
inline Quantity knots(double v) { return {v, Unit::Knot}; }
inline Quantity meters_per_sec(double v) { return {v, Unit::MeterPerSec}; }
inline Quantity cubic_feet_per_sec(double v) { return {v, Unit::CubicFootPerSec}; }
inline Quantity cubic_meters_per_sec(double v) { return {v, Unit::CubicMeterPerSec}; }

}  // namespace trawlsim::units
