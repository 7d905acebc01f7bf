#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grpoplan/grammar.hpp"
#include "grpoplan/types.hpp"

namespace grpoplan {

// Thresholds for reading a meta action off a trajectory. The defaults make
// the kinematic templates unambiguous; everything is overridable.
struct MetaThresholds {
    double heading_deg = 5.0;    // |net heading change| below this is STRAIGHT
    double stop_speed = 0.1;     // m/s, terminal speed below this is STOP
    double accel_ratio = 1.1;    // v_end / ego_speed above this is ACCELERATE
    double decel_ratio = 0.9;    // below this is DECELERATE
};

MetaAction derive_meta(const Trajectory& gt, double ego_speed,
                       const MetaThresholds& th = MetaThresholds{});

// Kinematic templates, exposed for direct testing. All run at the 0.5 s
// waypoint cadence in the ego frame.
Trajectory cruise_trajectory(double v0);
Trajectory stop_trajectory(double v0, double t_stop);       // uniform deceleration, v=0 at t_stop
Trajectory turn_trajectory(double v0, double theta_signed);  // constant-speed arc, +theta = left
Trajectory lane_change_trajectory(double v0, double offset_signed);

// Continuous parameters drawn per (seed, maneuver); recorded so the feature
// map can condition on the same quantities a route command would carry.
struct ScenarioParams {
    double v0 = 10.0;
    double magnitude = 0.0;  // t_stop, |theta|, |offset| or t_cross depending on maneuver
};

Scene generate_scene(uint64_t seed, Maneuver maneuver);
ScenarioParams scenario_params(const Scene& scene);  // recovered from the scene's kinematics

enum class CotLength : uint8_t { short_, long_ };
std::string_view to_string(CotLength l);

// Template CoT. Long fills all five reasoning domains in order; short only
// the ego decision slot. Both close with the meta-action sentence.
std::vector<int> build_think_tokens(const Scene& scene, CotLength length);
std::string emit_cot(const Scene& scene, CotLength length);

// JSON-Lines dataset, one scene per line, "v"-versioned.
inline constexpr int kSceneSchemaVersion = 1;
size_t write_dataset(const std::vector<Scene>& scenes, const std::string& path);
std::vector<Scene> read_dataset(const std::string& path);

std::string scene_to_json_line(const Scene& s);
Scene scene_from_json_line(const std::string& line);

}  // namespace grpoplan
