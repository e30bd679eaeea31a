#include "trawlsim/collection.hpp"

#include <cmath>
#include <sstream>

#include "trawlsim/errors.hpp"

namespace trawlsim::collection {

namespace {

using units::Quantity;
using units::Unit;

constexpr double kFt2PerM2 = 1.0 / (0.3048 * 0.3048);

double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

void RiverSite::validate(double mouth_area_m2) const {
    const double depth_m = units::convert(mean_depth, Unit::Meter).value;
    const double width_m = units::convert(width, Unit::Meter).value;
    const double discharge_m3s =
        units::convert(discharge, Unit::CubicMeterPerSec).value;
    if (depth_m <= 0.0 || width_m <= 0.0 || discharge_m3s <= 0.0 ||
        concentration_per_m3 <= 0.0) {
        throw ModelError("collection: river site values must be positive");
    }
    if (depth_m * width_m <= mouth_area_m2) {
        std::ostringstream msg;
        msg << "collection: river cross-section " << depth_m * width_m
            << " m2 does not exceed the trawl mouth " << mouth_area_m2
            << " m2";
        throw ModelError(msg.str());
    }
}

double cross_section(double depth, double width) {
    if (depth <= 0.0 || width <= 0.0) {
        throw ModelError("collection: cross-section needs positive depth and width");
    }
    return depth * width;
}

Quantity throughput(const Quantity& discharge, double divisor_area,
                    double mouth_area) {
    if (divisor_area <= 0.0 || mouth_area <= 0.0) {
        throw ModelError("collection: throughput areas must be positive");
    }
    const Quantity scaled{discharge.value * mouth_area / divisor_area,
                          discharge.unit};
    return units::convert(scaled, Unit::CubicMeterPerSec);
}

YieldEstimate expected_yield(const RiverSite& site, double mouth_area_m2,
                             double duration_h, RoundMode mode,
                             double band_fraction) {
    if (mouth_area_m2 <= 0.0) {
        throw ModelError("collection: mouth area must be positive");
    }
    if (duration_h <= 0.0) {
        throw ModelError("collection: duration must be positive");
    }
    if (band_fraction < 0.0 || band_fraction >= 1.0) {
        throw ModelError("collection: band fraction must be in [0, 1)");
    }
    site.validate(mouth_area_m2);

    const double discharge_ft3s =
        units::convert(site.discharge, Unit::CubicFootPerSec).value;
    const double width_ft = units::convert(site.width, Unit::Foot).value;
    const double unit_flux_fts = discharge_ft3s / width_ft;  // ft3/ft2/s

    YieldEstimate est;
    est.band_fraction = band_fraction;
    if (mode == RoundMode::Paper) {
        // Printed chain: 5.38 ft2 mouth -> 21.47 ft3/s -> 0.61 m3/s -> 2196 m3.
        const double mouth_ft2 = round2(mouth_area_m2 * kFt2PerM2);
        const double thr_ft3s = round2(mouth_ft2 * unit_flux_fts);
        est.throughput_m3s = round2(
            units::convert(units::cubic_feet_per_sec(thr_ft3s),
                           Unit::CubicMeterPerSec)
                .value);
    } else {
        const double unit_flux_mps = unit_flux_fts * 0.3048;
        est.throughput_m3s = unit_flux_mps * mouth_area_m2;
    }
    est.volume_m3 = est.throughput_m3s * 3600.0 * duration_h;
    est.expected = static_cast<std::int64_t>(
        std::floor(est.volume_m3 * site.concentration_per_m3));
    const double expected = static_cast<double>(est.expected);
    est.band_lo = static_cast<std::int64_t>(
        std::floor(expected * (1.0 - band_fraction)));
    est.band_hi = static_cast<std::int64_t>(
        std::ceil(expected * (1.0 + band_fraction)));
    return est;
}

ObservedAnalysis observed_vs_expected(std::int64_t observed,
                                      std::int64_t expected,
                                      double visual_error) {
    if (expected <= 0) {
        throw ModelError("collection: expected count must be positive");
    }
    if (visual_error < 0.0 || visual_error >= 1.0) {
        throw ModelError("collection: visual error rate must be in [0, 1)");
    }
    ObservedAnalysis out;
    out.ratio = static_cast<double>(observed) / static_cast<double>(expected);
    const double obs = static_cast<double>(observed);
    out.observed_lo = std::llround(obs * (1.0 - visual_error));
    out.observed_hi = std::llround(obs * (1.0 + visual_error));
    return out;
}

}  // namespace trawlsim::collection
