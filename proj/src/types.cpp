#include "grpoplan/types.hpp"

namespace grpoplan {

std::string_view to_string(Lateral l) {
    switch (l) {
        case Lateral::LEFT: return "LEFT";
        case Lateral::STRAIGHT: return "STRAIGHT";
        case Lateral::RIGHT: return "RIGHT";
    }
    return "STRAIGHT";
}

std::string_view to_string(Longitudinal l) {
    switch (l) {
        case Longitudinal::ACCELERATE: return "ACCELERATE";
        case Longitudinal::KEEP: return "KEEP";
        case Longitudinal::DECELERATE: return "DECELERATE";
        case Longitudinal::STOP: return "STOP";
    }
    return "KEEP";
}

bool lateral_from_string(std::string_view s, Lateral& out) {
    if (s == "LEFT") out = Lateral::LEFT;
    else if (s == "STRAIGHT") out = Lateral::STRAIGHT;
    else if (s == "RIGHT") out = Lateral::RIGHT;
    else return false;
    return true;
}

bool longitudinal_from_string(std::string_view s, Longitudinal& out) {
    if (s == "ACCELERATE") out = Longitudinal::ACCELERATE;
    else if (s == "KEEP") out = Longitudinal::KEEP;
    else if (s == "DECELERATE") out = Longitudinal::DECELERATE;
    else if (s == "STOP") out = Longitudinal::STOP;
    else return false;
    return true;
}

std::string_view to_string(Maneuver m) {
    switch (m) {
        case Maneuver::cruise: return "cruise";
        case Maneuver::stop: return "stop";
        case Maneuver::turn_left: return "turn_left";
        case Maneuver::turn_right: return "turn_right";
        case Maneuver::lane_change_left: return "lane_change_left";
        case Maneuver::lane_change_right: return "lane_change_right";
        case Maneuver::yield_to_agent: return "yield_to_agent";
    }
    return "cruise";
}

bool maneuver_from_string(std::string_view s, Maneuver& out) {
    for (int i = 0; i < kNumManeuvers; ++i) {
        const auto m = static_cast<Maneuver>(i);
        if (s == to_string(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

std::string_view to_string(Difficulty d) {
    return d == Difficulty::simple ? "simple" : "complex";
}

bool difficulty_from_string(std::string_view s, Difficulty& out) {
    if (s == "simple") out = Difficulty::simple;
    else if (s == "complex") out = Difficulty::complex_;
    else return false;
    return true;
}

}  // namespace grpoplan
