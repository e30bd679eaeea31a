#include "trawlsim/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trawlsim/errors.hpp"

namespace trawlsim::energy {

namespace {

constexpr double kMinutesPerDay = 1440.0;

// A daily window as up to two [start, end) minute segments (wrap at
// midnight), each tagged with the in-window offset where the segment begins.
struct Segment {
    double start_min = 0.0;
    double end_min = 0.0;
    double offset_h = 0.0;  // hours into the window at start_min
};

std::vector<Segment> window_segments(double start_hour, double length_hours) {
    std::vector<Segment> segs;
    if (length_hours <= 0.0) {
        return segs;
    }
    const double start = start_hour * 60.0;
    const double end = start + length_hours * 60.0;
    if (end <= kMinutesPerDay) {
        segs.push_back({start, end, 0.0});
    } else {
        segs.push_back({start, kMinutesPerDay, 0.0});
        segs.push_back({0.0, end - kMinutesPerDay,
                        (kMinutesPerDay - start) / 60.0});
    }
    return segs;
}

double overlap_minutes(double a0, double a1, double b0, double b1) {
    return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

// Raw panel energy (Wh) between `from_h` and `to_h` hours into the charge
// window. Integrated in closed form so each day delivers exactly
// rating * peak_sun_hours no matter the step size or shape.
double panel_energy_wh(const PowerPlant& plant, const IrradianceProfile& irr,
                       double from_h, double to_h) {
    const double window = plant.charge_window_hours;
    const double daily = plant.panel_rating_w * irr.peak_sun_hours;
    if (irr.shape == IrradianceShape::FlatWindow) {
        return daily * (to_h - from_h) / window;
    }
    const double scale = daily / 2.0;  // A*W/pi with A = pi*daily/(2W)
    const double pi_over_w = std::numbers::pi / window;
    return scale *
           (std::cos(pi_over_w * from_h) - std::cos(pi_over_w * to_h));
}

}  // namespace

void PowerPlant::validate() const {
    if (battery_capacity_wh < 0.0) {
        throw ModelError("energy: battery capacity must be non-negative");
    }
    if (!(charge_efficiency > 0.0) || charge_efficiency > 1.0) {
        throw ModelError("energy: charge efficiency must be in (0, 1]");
    }
    if (load_draw_w < 0.0) {
        throw ModelError("energy: load draw must be non-negative");
    }
    if (operate_hours < 0.0 || operate_hours > 24.0 ||
        charge_window_hours < 0.0 || charge_window_hours > 24.0) {
        throw ModelError("energy: daily windows must be within 0-24 h");
    }
    if (charge_start_hour < 0.0 || charge_start_hour >= 24.0 ||
        operate_start_hour < 0.0 || operate_start_hour >= 24.0) {
        throw ModelError("energy: window start hours must be in [0, 24)");
    }
    for (const auto& c : window_segments(charge_start_hour,
                                         charge_window_hours)) {
        for (const auto& o : window_segments(operate_start_hour,
                                             operate_hours)) {
            if (overlap_minutes(c.start_min, c.end_min, o.start_min,
                                o.end_min) > 0.0) {
                throw ModelError(
                    "energy: charge and operate windows overlap; charging is "
                    "daytime, operation is nighttime");
            }
        }
    }
}

double recharge_time_h(const PowerPlant& plant) {
    plant.validate();
    if (plant.panel_rating_w <= 0.0) {
        throw ModelError("energy: recharge time needs a positive panel rating");
    }
    return plant.battery_capacity_wh /
           (plant.panel_rating_w * plant.charge_efficiency);
}

double runtime_to_cutoff_h(double capacity_wh, double load_w) {
    if (load_w <= 0.0) {
        throw ModelError("energy: runtime needs a positive load");
    }
    if (capacity_wh < 0.0) {
        throw ModelError("energy: capacity must be non-negative");
    }
    return capacity_wh / load_w;
}

const char* soc_mode_name(SocMode m) {
    switch (m) {
        case SocMode::Idle: return "idle";
        case SocMode::Charge: return "charge";
        case SocMode::Operate: return "operate";
    }
    return "?";
}

SocSeries simulate_soc(const PowerPlant& plant, const IrradianceProfile& irr,
                       int days, int step_minutes,
                       std::optional<double> initial_soc_wh) {
    plant.validate();
    if (irr.peak_sun_hours < 0.0) {
        throw ModelError("energy: peak sun hours must be non-negative");
    }
    if (irr.peak_sun_hours > 0.0 && plant.charge_window_hours <= 0.0) {
        throw ModelError(
            "energy: sun energy with a zero-length charge window");
    }
    if (days < 1) {
        throw ModelError("energy: need at least one day");
    }
    if (step_minutes < 1 || 1440 % step_minutes != 0) {
        std::ostringstream msg;
        msg << "energy: step of " << step_minutes
            << " minutes does not divide 24 h";
        throw ModelError(msg.str());
    }

    const double cap = plant.battery_capacity_wh;
    double soc = std::clamp(initial_soc_wh.value_or(cap), 0.0, cap);
    const auto charge_segs =
        window_segments(plant.charge_start_hour, plant.charge_window_hours);
    const auto operate_segs =
        window_segments(plant.operate_start_hour, plant.operate_hours);

    SocSeries out;
    const int steps_per_day = 1440 / step_minutes;
    out.samples.reserve(static_cast<std::size_t>(days) * steps_per_day + 1);
    out.samples.push_back({0, soc, SocMode::Idle});

    for (int day = 0; day < days; ++day) {
        for (int k = 0; k < steps_per_day; ++k) {
            const double m0 = k * static_cast<double>(step_minutes);
            const double m1 = m0 + step_minutes;

            double charge_min = 0.0;
            double raw_wh = 0.0;
            for (const auto& seg : charge_segs) {
                const double ov = overlap_minutes(m0, m1, seg.start_min,
                                                  seg.end_min);
                if (ov > 0.0) {
                    charge_min += ov;
                    const double from_h =
                        seg.offset_h +
                        (std::max(m0, seg.start_min) - seg.start_min) / 60.0;
                    raw_wh += panel_energy_wh(plant, irr, from_h,
                                              from_h + ov / 60.0);
                }
            }
            double operate_min = 0.0;
            for (const auto& seg : operate_segs) {
                operate_min +=
                    overlap_minutes(m0, m1, seg.start_min, seg.end_min);
            }

            if (raw_wh > 0.0) {
                const double stored = raw_wh * plant.charge_efficiency;
                const double accepted = std::min(stored, cap - soc);
                out.delivered_wh += raw_wh;
                out.stored_wh += stored;
                out.clamp_loss_wh += stored - accepted;
                soc += accepted;
            }
            if (operate_min > 0.0 && plant.load_draw_w > 0.0) {
                const double wanted =
                    plant.load_draw_w * operate_min / 60.0;
                const double served = std::min(wanted, soc);
                out.load_served_wh += served;
                out.deficit_wh += wanted - served;
                soc -= served;
            }

            SocMode mode = SocMode::Idle;
            if (charge_min >= operate_min && charge_min > 0.0) {
                mode = SocMode::Charge;
            } else if (operate_min > 0.0) {
                mode = SocMode::Operate;
            }
            const int minute = day * 1440 + static_cast<int>(m1);
            out.samples.push_back({minute, soc, mode});
        }
    }
    return out;
}

}  // namespace trawlsim::energy
