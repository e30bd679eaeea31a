#pragma once

#include <optional>
#include <vector>

namespace trawlsim::energy {

// Battery, panel, and load ratings plus the daily schedule. Charging runs in
// a daytime window, the motors run overnight; the two windows must not
// overlap. Defaults: 15 Ah x 11.1 V pack (166.5 Wh), 50 W panel at 85%
// charge efficiency, 11.5 W load for 12 h starting 18:00, 10 h charge window
// starting 08:00.
struct PowerPlant {
    double battery_capacity_wh = 15.0 * 11.1;
    double panel_rating_w = 50.0;
    double charge_efficiency = 0.85;
    double load_draw_w = 11.5;
    double operate_hours = 12.0;
    double charge_window_hours = 10.0;
    double charge_start_hour = 8.0;
    double operate_start_hour = 18.0;  // wraps past midnight

    void validate() const;  // throws ModelError, incl. window overlap
};

enum class IrradianceShape { FlatWindow, HalfSine };

// Panel input over the charge window. Both shapes deliver exactly
// panel_rating * peak_sun_hours per day; the shape only redistributes it.
struct IrradianceProfile {
    double peak_sun_hours = 4.0;
    IrradianceShape shape = IrradianceShape::FlatWindow;
};

// Peak-sun-hours needed for a full recharge: capacity / (rating * efficiency).
double recharge_time_h(const PowerPlant& plant);

// Hours until cutoff under a constant load.
double runtime_to_cutoff_h(double capacity_wh, double load_w);

enum class SocMode { Idle, Charge, Operate };
const char* soc_mode_name(SocMode m);

struct SocSample {
    int minute = 0;
    double soc_wh = 0.0;
    SocMode mode = SocMode::Idle;
};

struct SocSeries {
    std::vector<SocSample> samples;  // samples[0] is the initial state
    double delivered_wh = 0.0;       // raw panel energy over the run
    double stored_wh = 0.0;          // after charge efficiency
    double load_served_wh = 0.0;
    double clamp_loss_wh = 0.0;      // refused at full battery
    double deficit_wh = 0.0;         // unserved load at empty battery
};

// Steps the state of charge in `step_minutes` increments for `days` days.
// Panel energy is integrated analytically per step, so the per-day delivered
// energy is exact for either irradiance shape. SoC is clamped to
// [0, capacity]; both clamp losses are tracked so energy balances exactly.
// step_minutes must divide 24 h. Starts full unless initial_soc_wh is given.
SocSeries simulate_soc(const PowerPlant& plant, const IrradianceProfile& irr,
                       int days, int step_minutes,
                       std::optional<double> initial_soc_wh = {});

}  // namespace trawlsim::energy
