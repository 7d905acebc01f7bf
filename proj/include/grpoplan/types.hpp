#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grpoplan/geometry.hpp"

namespace grpoplan {

// Ego frame: x forward, y leftward, origin and zero heading at t = 0.
inline constexpr double kWaypointDt = 0.5;   // seconds between waypoints
inline constexpr int kNumWaypoints = 6;      // 0.5 .. 3.0 s
inline constexpr int kNumAgentSteps = 7;     // 0.0 .. 3.0 s
inline constexpr int kHistoryPoints = 4;     // -1.5 .. 0.0 s
inline constexpr double kMaxSpeed = 20.0;    // m/s, reachability bound

enum class Lateral : uint8_t { LEFT, STRAIGHT, RIGHT };
enum class Longitudinal : uint8_t { ACCELERATE, KEEP, DECELERATE, STOP };

struct MetaAction {
    Lateral lateral = Lateral::STRAIGHT;
    Longitudinal longitudinal = Longitudinal::KEEP;
    bool operator==(const MetaAction&) const = default;
};

std::string_view to_string(Lateral l);
std::string_view to_string(Longitudinal l);
bool lateral_from_string(std::string_view s, Lateral& out);
bool longitudinal_from_string(std::string_view s, Longitudinal& out);

struct Trajectory {
    std::array<Vec2, kNumWaypoints> waypoints{};  // ego frame, t = 0.5..3.0 s

    bool operator==(const Trajectory&) const = default;
    double time_at(int k) const { return (k + 1) * kWaypointDt; }
};

struct AgentTrack {
    std::array<Vec2, kNumAgentSteps> positions{};   // t = 0..3 s
    std::array<double, kNumAgentSteps> headings{};  // radians
    double length = 4.5;
    double width = 2.0;

    OrientedRect footprint(int step) const {
        return {positions[static_cast<size_t>(step)],
                headings[static_cast<size_t>(step)], length, width};
    }
};

enum class Maneuver : uint8_t {
    cruise,
    stop,
    turn_left,
    turn_right,
    lane_change_left,
    lane_change_right,
    yield_to_agent,
};
inline constexpr int kNumManeuvers = 7;

std::string_view to_string(Maneuver m);
bool maneuver_from_string(std::string_view s, Maneuver& out);

enum class Difficulty : uint8_t { simple, complex_ };

std::string_view to_string(Difficulty d);
bool difficulty_from_string(std::string_view s, Difficulty& out);

struct Scene {
    std::string id;
    std::array<Vec2, kHistoryPoints> ego_history{};  // ends at the origin
    double ego_speed = 0.0;                          // m/s at t = 0
    double ego_heading = 0.0;                        // radians, 0 in ego frame
    std::vector<AgentTrack> agents;
    Trajectory gt_trajectory;
    MetaAction gt_meta;
    Difficulty difficulty = Difficulty::simple;
    Maneuver maneuver = Maneuver::cruise;
};

}  // namespace grpoplan
