#include "trawlsim/units.hpp"

#include <sstream>

#include "trawlsim/errors.hpp"

namespace trawlsim::units {

namespace {

constexpr double kFootM = 0.3048;
constexpr double kCubicFootM3 = 0.0283168;
constexpr double kKnotMps = 0.514444;

}  // namespace

std::string_view unit_name(Unit u) {
    switch (u) {
        case Unit::Meter: return "m";
        case Unit::Foot: return "ft";
        case Unit::CubicMeterPerSec: return "m3/s";
        case Unit::CubicFootPerSec: return "ft3/s";
        case Unit::MeterPerSec: return "m/s";
        case Unit::Knot: return "kn";
        case Unit::Kilogram: return "kg";
        case Unit::Newton: return "N";
        case Unit::NewtonMeter: return "N*m";
        case Unit::Watt: return "W";
        case Unit::WattHour: return "Wh";
        case Unit::ParticlesPerCubicMeter: return "particles/m3";
        case Unit::Particles: return "particles";
    }
    return "?";
}

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Length: return "length";
        case Dimension::Flow: return "flow";
        case Dimension::Speed: return "speed";
        case Dimension::Mass: return "mass";
        case Dimension::Force: return "force";
        case Dimension::Torque: return "torque";
        case Dimension::Power: return "power";
        case Dimension::Energy: return "energy";
        case Dimension::Concentration: return "concentration";
        case Dimension::Count: return "count";
    }
    return "?";
}

Dimension dimension_of(Unit u) {
    switch (u) {
        case Unit::Meter:
        case Unit::Foot: return Dimension::Length;
        case Unit::CubicMeterPerSec:
        case Unit::CubicFootPerSec: return Dimension::Flow;
        case Unit::MeterPerSec:
        case Unit::Knot: return Dimension::Speed;
        case Unit::Kilogram: return Dimension::Mass;
        case Unit::Newton: return Dimension::Force;
        case Unit::NewtonMeter: return Dimension::Torque;
        case Unit::Watt: return Dimension::Power;
        case Unit::WattHour: return Dimension::Energy;
        case Unit::ParticlesPerCubicMeter: return Dimension::Concentration;
        case Unit::Particles: return Dimension::Count;
    }
    return Dimension::Count;
}

double si_factor(Unit u) {
    switch (u) {
        case Unit::Foot: return kFootM;
        case Unit::CubicFootPerSec: return kCubicFootM3;
        case Unit::Knot: return kKnotMps;
        default: return 1.0;
    }
}

Quantity convert(const Quantity& q, Unit target) {
    if (q.unit == target) {
        return q;
    }
    if (dimension_of(q.unit) != dimension_of(target)) {
        std::ostringstream msg;
        msg << "units: cannot convert " << unit_name(q.unit) << " ("
            << dimension_name(dimension_of(q.unit)) << ") to "
            << unit_name(target) << " ("
            << dimension_name(dimension_of(target)) << ")";
        throw ModelError(msg.str());
    }
    return {q.value * si_factor(q.unit) / si_factor(target), target};
}

bool speed_cap_check(const Quantity& v) {
    const Quantity kn = convert(v, Unit::Knot);
    if (kn.value < 0.0) {
        std::ostringstream msg;
        msg << "units: negative speed " << v.value << " " << unit_name(v.unit);
        throw ModelError(msg.str());
    }
    return kn.value < 3.0;
}

}  // namespace trawlsim::units
