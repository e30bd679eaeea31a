#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace trawlsim::guidance {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Axis-aligned region used by the piecewise-constant fields.
struct Rect {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    bool contains(Vec2 p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

struct ScalarPatch {
    Rect rect;
    double value = 0.0;
};
struct VectorPatch {
    Rect rect;
    Vec2 value;
};

// Base value everywhere, overridden inside patches (last patch wins).
struct ScalarField {
    double base = 0.0;
    std::vector<ScalarPatch> patches;
    double at(Vec2 p) const;
};

struct VectorField {
    Vec2 base;
    std::vector<VectorPatch> patches;
    Vec2 at(Vec2 p) const;
};

// Simple polygon boundary in meters. Construction rejects self-intersecting
// or degenerate rings.
class Polygon {
  public:
    explicit Polygon(std::vector<Vec2> vertices);
    bool contains(Vec2 p) const;
    // Distance along `dir` (unit not required) to the first edge hit.
    std::optional<double> raycast(Vec2 origin, Vec2 dir) const;
    const std::vector<Vec2>& vertices() const { return verts_; }
    Vec2 centroid() const;

  private:
    std::vector<Vec2> verts_;
};

struct LakeWorld {
    Polygon boundary;
    VectorField current;       // m/s
    ScalarField concentration; // particles/m3
};

// Single forward range sensor, modeled as a ray cast to the boundary with
// Gaussian noise and occasional dropouts. Deterministic for a given seed.
struct SensorModel {
    double max_range_m = 30.0;
    double noise_sigma_m = 0.05;
    double dropout_probability = 0.02;
    std::uint64_t seed = 1;

    void validate() const;
};

// Moving average over the last `window` valid readings. Dropouts leave the
// buffer untouched and repeat the previous output; with fewer than `window`
// samples the mean of what exists is returned.
class RangeFilter {
  public:
    explicit RangeFilter(int window = 5, double initial_output = 0.0);
    double update(std::optional<double> reading);
    double output() const { return output_; }
    int window() const { return window_; }

  private:
    int window_;
    double output_;
    std::vector<double> buf_;  // most recent last
};

// Differential thruster command; 1000-2000 us pulse range, 1500 neutral.
struct ThrusterCommand {
    int left_us = 1500;
    int right_us = 1500;
};

// 1500 + 500 * fraction, rounded; fraction must be in [-1, 1].
int pulse_from_thrust(double fraction);
double thrust_from_pulse(int pulse_us);

enum class Mode { Cruise, Avoid };
const char* mode_name(Mode m);

inline ThrusterCommand cruise_command() { return {2000, 2000}; }
inline ThrusterCommand avoid_command() { return {1000, 2000}; }

struct PolicyResult {
    Mode mode = Mode::Cruise;
    ThrusterCommand command;
};

// Bank-avoidance state machine. Cruise -> Avoid when the filtered range
// drops under `threshold` (full differential turn); Avoid -> Cruise once it
// clears threshold + hysteresis (symmetric cruise pulses); inside the
// hysteresis band the mode holds. Requires threshold > hysteresis > 0.
PolicyResult avoidance_policy(double filtered_m, Mode mode, double threshold_m,
                              double hysteresis_m);

// First-order surge model calibrated so full symmetric thrust settles at the
// 2-knot protocol operating speed. No reverse: the commanded speed is
// clamped at zero.
struct AgentParams {
    double max_speed_mps = 2.0 * 0.514444;
    double speed_tau_s = 2.0;
    double yaw_rate_rps = 1.0;  // at full differential thrust
    double mouth_area_m2 = 0.5;
};

struct AgentState {
    Vec2 position;
    double heading_rad = 0.0;
    double speed_mps = 0.0;
    Mode mode = Mode::Cruise;
    RangeFilter filter{5, 0.0};
};

struct StepResult {
    AgentState state;
    bool collided = false;
};

// Advances kinematics by dt: thrust -> speed (first-order lag) and yaw rate,
// then advection by the local current. A step that would cross the boundary
// is a collision; the agent is reflected back inside, heading mirrored.
StepResult step_agent(const LakeWorld& world, const AgentState& agent,
                      ThrusterCommand cmd, double dt_s,
                      const AgentParams& params);

struct MissionParams {
    double duration_s = 600.0;
    double dt_s = 0.1;
    double threshold_m = 3.0;
    double hysteresis_m = 1.0;
    int filter_window = 5;
    AgentParams agent;
};

struct TrajectoryRow {
    double t = 0.0;
    double x = 0.0, y = 0.0;
    double heading = 0.0;
    double speed = 0.0;
    Mode mode = Mode::Cruise;
    double filtered_range = 0.0;
    int left_us = 1500, right_us = 1500;
    double collected_cum = 0.0;
};

struct MissionResult {
    std::vector<TrajectoryRow> rows;
    double collected = 0.0;
    int collisions = 0;
};

// Sense -> filter -> policy -> step loop. Collection is the concentration
// swept through the mouth: sum of C(x) * mouth_area * speed * dt. Bit-exact
// replayable for fixed seed and config; the agent must start inside the
// boundary.
MissionResult run_mission(const LakeWorld& world, AgentState agent,
                          const SensorModel& sensor,
                          const MissionParams& params);

// Order-sensitive digest of every row, for replay comparisons.
std::uint64_t trajectory_hash(const MissionResult& result);

// splitmix64 with Box-Muller normals: fixed algorithm, so sequences are
// reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform01();  // [0, 1)
    double normal();

  private:
    std::uint64_t state_;
};

}  // namespace trawlsim::guidance
