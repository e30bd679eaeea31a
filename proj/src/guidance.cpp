#include "trawlsim/guidance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "trawlsim/errors.hpp"

namespace trawlsim::guidance {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinReading = 1e-3;  // readings live in (0, max_range]

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

// Proper segment intersection for the self-intersection check; shared
// endpoints of neighboring edges are excluded by the caller.
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

double ScalarField::at(Vec2 p) const {
    double v = base;
    for (const auto& patch : patches) {
        if (patch.rect.contains(p)) {
            v = patch.value;
        }
    }
    return v;
}

Vec2 VectorField::at(Vec2 p) const {
    Vec2 v = base;
    for (const auto& patch : patches) {
        if (patch.rect.contains(p)) {
            v = patch.value;
        }
    }
    return v;
}

Polygon::Polygon(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3) {
        throw ModelError("guidance: boundary polygon needs >= 3 vertices");
    }
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) {
                continue;  // neighbors share a vertex
            }
            if (segments_cross(verts_[i], verts_[(i + 1) % n], verts_[j],
                               verts_[(j + 1) % n])) {
                throw ModelError(
                    "guidance: boundary polygon self-intersects");
            }
        }
    }
}

bool Polygon::contains(Vec2 p) const {
    // Even-odd crossing count.
    bool inside = false;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_at =
                a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_at) {
                inside = !inside;
            }
        }
    }
    return inside;
}

std::optional<double> Polygon::raycast(Vec2 origin, Vec2 dir) const {
    const double norm = std::hypot(dir.x, dir.y);
    if (norm <= 0.0) {
        throw ModelError("guidance: raycast direction must be non-zero");
    }
    const Vec2 d{dir.x / norm, dir.y / norm};
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = verts_[i];
        const Vec2 b = verts_[(i + 1) % n];
        const Vec2 e = b - a;
        const double denom = cross(d, e);
        if (denom == 0.0) {
            continue;  // parallel
        }
        const Vec2 ao = a - origin;
        const double t = cross(ao, e) / denom;
        const double s = cross(ao, d) / denom;
        if (t > 1e-9 && s >= 0.0 && s <= 1.0) {
            best = std::min(best, t);
        }
    }
    if (std::isinf(best)) {
        return std::nullopt;
    }
    return best;
}

Vec2 Polygon::centroid() const {
    Vec2 c;
    for (const auto& v : verts_) {
        c.x += v.x;
        c.y += v.y;
    }
    c.x /= static_cast<double>(verts_.size());
    c.y /= static_cast<double>(verts_.size());
    return c;
}

void SensorModel::validate() const {
    if (max_range_m <= 0.0) {
        throw ModelError("guidance: sensor max range must be positive");
    }
    if (noise_sigma_m < 0.0) {
        throw ModelError("guidance: sensor noise sigma must be non-negative");
    }
    if (dropout_probability < 0.0 || dropout_probability >= 1.0) {
        throw ModelError("guidance: dropout probability must be in [0, 1)");
    }
}

RangeFilter::RangeFilter(int window, double initial_output)
    : window_(window), output_(initial_output) {
    if (window < 1) {
        throw ModelError("guidance: filter window must be >= 1");
    }
    buf_.reserve(static_cast<std::size_t>(window));
}

double RangeFilter::update(std::optional<double> reading) {
    if (!reading) {
        return output_;  // sensor hold
    }
    if (buf_.size() == static_cast<std::size_t>(window_)) {
        buf_.erase(buf_.begin());
    }
    buf_.push_back(*reading);
    double sum = 0.0;
    for (double v : buf_) {
        sum += v;
    }
    output_ = sum / static_cast<double>(buf_.size());
    return output_;
}

int pulse_from_thrust(double fraction) {
    if (fraction < -1.0 || fraction > 1.0) {
        std::ostringstream msg;
        msg << "guidance: thrust fraction " << fraction << " outside [-1, 1]";
        throw ModelError(msg.str());
    }
    return static_cast<int>(std::lround(1500.0 + 500.0 * fraction));
}

double thrust_from_pulse(int pulse_us) {
    if (pulse_us < 1000 || pulse_us > 2000) {
        std::ostringstream msg;
        msg << "guidance: pulse " << pulse_us << " us outside [1000, 2000]";
        throw ModelError(msg.str());
    }
    return (pulse_us - 1500) / 500.0;
}

const char* mode_name(Mode m) {
    return m == Mode::Cruise ? "cruise" : "avoid";
}

PolicyResult avoidance_policy(double filtered_m, Mode mode, double threshold_m,
                              double hysteresis_m) {
    if (!(threshold_m > hysteresis_m && hysteresis_m > 0.0)) {
        throw ModelError(
            "guidance: need threshold > hysteresis > 0 for the avoidance "
            "policy");
    }
    Mode next = mode;
    if (mode == Mode::Cruise && filtered_m < threshold_m) {
        next = Mode::Avoid;
    } else if (mode == Mode::Avoid &&
               filtered_m > threshold_m + hysteresis_m) {
        next = Mode::Cruise;
    }
    return {next, next == Mode::Avoid ? avoid_command() : cruise_command()};
}

StepResult step_agent(const LakeWorld& world, const AgentState& agent,
                      ThrusterCommand cmd, double dt_s,
                      const AgentParams& params) {
    if (dt_s <= 0.0) {
        throw ModelError("guidance: step dt must be positive");
    }
    const double fl = thrust_from_pulse(cmd.left_us);
    const double fr = thrust_from_pulse(cmd.right_us);
    const double forward = 0.5 * (fl + fr);
    const double turn = 0.5 * (fr - fl);

    StepResult result{agent, false};
    AgentState& next = result.state;

    const double target =
        std::clamp(forward, 0.0, 1.0) * params.max_speed_mps;
    const double decay = std::exp(-dt_s / params.speed_tau_s);
    next.speed_mps = target + (agent.speed_mps - target) * decay;
    next.heading_rad =
        wrap_angle(agent.heading_rad + turn * params.yaw_rate_rps * dt_s);

    const Vec2 current = world.current.at(agent.position);
    const Vec2 velocity{
        next.speed_mps * std::cos(next.heading_rad) + current.x,
        next.speed_mps * std::sin(next.heading_rad) + current.y};
    Vec2 pos = agent.position + dt_s * velocity;

    if (!world.boundary.contains(pos)) {
        result.collided = true;
        // Mirror the overshoot across the crossed edge and flip the heading
        // off it; if the mirror is still outside (corner), stay put and turn
        // around.
        const Vec2 travel = pos - agent.position;
        const auto hit = world.boundary.raycast(agent.position, travel);
        bool resolved = false;
        if (hit) {
            const double travel_len = std::hypot(travel.x, travel.y);
            if (travel_len > 0.0 && *hit <= travel_len) {
                // Locate the crossed edge to get its direction.
                const auto& verts = world.boundary.vertices();
                const std::size_t n = verts.size();
                const Vec2 hp =
                    agent.position + (*hit / travel_len) * travel;
                double best_d = std::numeric_limits<double>::infinity();
                Vec2 edge_dir{1.0, 0.0};
                Vec2 edge_a;
                for (std::size_t i = 0; i < n; ++i) {
                    const Vec2 a = verts[i];
                    const Vec2 b = verts[(i + 1) % n];
                    const Vec2 e = b - a;
                    const double len2 = dot(e, e);
                    if (len2 == 0.0) continue;
                    const double s =
                        std::clamp(dot(hp - a, e) / len2, 0.0, 1.0);
                    const Vec2 proj = a + s * e;
                    const double d2 = dot(hp - proj, hp - proj);
                    if (d2 < best_d) {
                        best_d = d2;
                        edge_dir = e;
                        edge_a = a;
                    }
                }
                const double elen = std::hypot(edge_dir.x, edge_dir.y);
                const Vec2 nrm{-edge_dir.y / elen, edge_dir.x / elen};
                const Vec2 mirrored = pos - 2.0 * dot(pos - edge_a, nrm) * nrm;
                if (world.boundary.contains(mirrored)) {
                    pos = mirrored;
                    const Vec2 h{std::cos(next.heading_rad),
                                 std::sin(next.heading_rad)};
                    const Vec2 hm = h - 2.0 * dot(h, nrm) * nrm;
                    next.heading_rad = std::atan2(hm.y, hm.x);
                    resolved = true;
                }
            }
        }
        if (!resolved) {
            pos = agent.position;
            next.heading_rad = wrap_angle(next.heading_rad + kPi);
        }
    }
    next.position = pos;
    return result;
}

std::uint64_t Rng::next_u64() {
    // splitmix64
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    // Box-Muller; u1 shifted into (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

MissionResult run_mission(const LakeWorld& world, AgentState agent,
                          const SensorModel& sensor,
                          const MissionParams& params) {
    sensor.validate();
    if (params.dt_s <= 0.0 || params.duration_s <= 0.0) {
        throw ModelError("guidance: mission needs positive dt and duration");
    }
    if (!world.boundary.contains(agent.position)) {
        throw ModelError("guidance: agent must start inside the boundary");
    }

    Rng rng(sensor.seed);
    agent.filter = RangeFilter(params.filter_window, sensor.max_range_m);

    MissionResult result;
    const auto steps =
        static_cast<std::int64_t>(std::llround(params.duration_s / params.dt_s));
    result.rows.reserve(static_cast<std::size_t>(steps));

    for (std::int64_t i = 0; i < steps; ++i) {
        const Vec2 look{std::cos(agent.heading_rad),
                        std::sin(agent.heading_rad)};
        const auto dist = world.boundary.raycast(agent.position, look);
        const double true_range =
            std::min(dist.value_or(sensor.max_range_m), sensor.max_range_m);

        std::optional<double> reading;
        if (rng.uniform01() >= sensor.dropout_probability) {
            reading = std::clamp(
                true_range + sensor.noise_sigma_m * rng.normal(), kMinReading,
                sensor.max_range_m);
        }
        const double filtered = agent.filter.update(reading);
        const PolicyResult policy = avoidance_policy(
            filtered, agent.mode, params.threshold_m, params.hysteresis_m);
        agent.mode = policy.mode;

        const StepResult step =
            step_agent(world, agent, policy.command, params.dt_s, params.agent);
        agent.position = step.state.position;
        agent.heading_rad = step.state.heading_rad;
        agent.speed_mps = step.state.speed_mps;
        if (step.collided) {
            ++result.collisions;
        }

        result.collected += world.concentration.at(agent.position) *
                            params.agent.mouth_area_m2 * agent.speed_mps *
                            params.dt_s;

        result.rows.push_back({(i + 1) * params.dt_s, agent.position.x,
                               agent.position.y, agent.heading_rad,
                               agent.speed_mps, agent.mode, filtered,
                               policy.command.left_us, policy.command.right_us,
                               result.collected});
    }
    return result;
}

namespace {

void hash_mix(std::uint64_t& h, std::uint64_t v) {
    // FNV-1a over the 8 bytes of v.
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFFu;
        h *= 0x100000001B3ull;
    }
}

}  // namespace

std::uint64_t trajectory_hash(const MissionResult& result) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const auto& row : result.rows) {
        hash_mix(h, std::bit_cast<std::uint64_t>(row.t));
        hash_mix(h, std::bit_cast<std::uint64_t>(row.x));
        hash_mix(h, std::bit_cast<std::uint64_t>(row.y));
        hash_mix(h, std::bit_cast<std::uint64_t>(row.heading));
        hash_mix(h, std::bit_cast<std::uint64_t>(row.speed));
        hash_mix(h, static_cast<std::uint64_t>(row.mode));
        hash_mix(h, std::bit_cast<std::uint64_t>(row.filtered_range));
        hash_mix(h, static_cast<std::uint64_t>(row.left_us));
        hash_mix(h, static_cast<std::uint64_t>(row.right_us));
        hash_mix(h, std::bit_cast<std::uint64_t>(row.collected_cum));
    }
    hash_mix(h, std::bit_cast<std::uint64_t>(result.collected));
    hash_mix(h, static_cast<std::uint64_t>(result.collisions));
    return h;
}

}  // namespace trawlsim::guidance
