#pragma once

#include <cstdint>

#include "trawlsim/rounding.hpp"
#include "trawlsim/units.hpp"

namespace trawlsim::collection {

// River deployment site. Defaults are the documented field test: 423 ft3/s
// discharge, 1.2 ft mean depth, 106 ft width, 1.58 particles/m3.
struct RiverSite {
    units::Quantity discharge = units::cubic_feet_per_sec(423.0);
    units::Quantity mean_depth = units::feet(1.2);
    units::Quantity width = units::feet(106.0);
    double concentration_per_m3 = 1.58;

    // throws ModelError; the river cross-section must exceed the trawl mouth
    void validate(double mouth_area_m2) const;
};

struct YieldEstimate {
    double throughput_m3s = 0.0;
    double volume_m3 = 0.0;
    std::int64_t expected = 0;
    std::int64_t band_lo = 0;  // expected*(1-f), rounded down
    std::int64_t band_hi = 0;  // expected*(1+f), rounded up
    double band_fraction = 0.10;
};

struct ObservedAnalysis {
    double ratio = 0.0;  // observed / expected
    std::int64_t observed_lo = 0;
    std::int64_t observed_hi = 0;
};

// Plain product; unit-agnostic (ft*ft -> ft2, m*m -> m2).
double cross_section(double depth, double width);

// Flow through the trawl mouth: discharge scaled by mouth_area/divisor_area,
// converted to m3/s. Both areas must be in the squared length unit matching
// the discharge. Zero/negative areas are rejected.
units::Quantity throughput(const units::Quantity& discharge,
                           double divisor_area, double mouth_area);

// Expected catch over `duration_h` at the site, following the published
// estimate chain. That chain divides discharge by the river *width* taken as
// an area (yielding ft3/ft2/s), not by the true depth*width cross-section;
// both modes keep that divisor so the estimate matches the field procedure.
// Paper mode additionally reproduces the printed rounding steps
// (5.38 ft2 mouth, 21.47 ft3/s, 0.61 m3/s, 2196 m3/h); exact mode carries
// full precision. Use throughput() directly with depth*width to see the
// dimensionally consistent variant.
YieldEstimate expected_yield(const RiverSite& site, double mouth_area_m2,
                             double duration_h, RoundMode mode,
                             double band_fraction = 0.10);

// Compares a hand count against the estimate; visual_error is the counting
// error rate, so the observed range is observed*(1 -+ e) rounded to nearest.
ObservedAnalysis observed_vs_expected(std::int64_t observed,
                                      std::int64_t expected,
                                      double visual_error);

}  // namespace trawlsim::collection
