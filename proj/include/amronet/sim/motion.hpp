#pragma once

// Kinematics shared by agents and relocating routers: a constant-speed random
// walk with forward wall sensing, and goal-seeking with bounded obstacle
// dodging.

#include <cmath>
#include <numbers>

#include "amronet/geometry.hpp"
#include "amronet/sim/config.hpp"
#include "amronet/sim/rng.hpp"

namespace amronet {

struct Pose {
    Point2 position;
    double heading = 0.0;
};

enum class WalkResult { Advanced, Turned, HeldBlocked };

// One random-walk step. A fresh uniform draw decides a spontaneous turn
// (p_turn); a wall within five step-lengths ahead also forces one. Turning
// holds position and resamples the heading; otherwise the entity advances one
// step-length, or, if that move is blocked anyway (e.g. clipping a corner the
// forward ray missed), holds and resamples.
inline WalkResult step_random_walk(Pose& pose, RngStream& rng, const WorldMap& map,
                                   double speed, const SimConfig& cfg) {
    const double step_len = speed * cfg.dt;
    const double lookahead = 5.0 * step_len;
    const double u = rng.uniform();
    const bool wall_ahead =
        map.sense_range(pose.position, pose.heading, std::min(lookahead, cfg.sonar_range)) <
        lookahead;
    if (u < cfg.p_turn || wall_ahead) {
        pose.heading = rng.angle();
        return WalkResult::Turned;
    }
    const Point2 next = pose.position + step_len * unit_from_angle(pose.heading);
    if (map.motion_blocked(pose.position, next)) {
        pose.heading = rng.angle();
        return WalkResult::HeldBlocked;
    }
    pose.position = next;
    return WalkResult::Advanced;
}

enum class GotoResult { Moving, Reached, Blocked };

struct GotoState {
    int avoid_count = 0;
};

// One goal-seeking step. Within a step-length of the goal the entity snaps to
// it (if the hop is clear). Otherwise it tries the direct bearing, demanding
// ir_range of forward clearance; when that fails it sweeps rotations of
// +-k*pi/8 (left first) and takes the first clear one as a dodge. Dodges are
// counted; max_avoid_steps consecutive dodges without a clean direct step
// yield Blocked (the caller decides what to do with the stranded entity).
inline GotoResult step_goto(Pose& pose, GotoState& state, const Point2& goal,
                            const WorldMap& map, double speed, const SimConfig& cfg) {
    const double step_len = speed * cfg.dt;
    const Vec2 to_goal = goal - pose.position;
    const double dist = norm(to_goal);
    if (dist <= step_len && !map.motion_blocked(pose.position, goal)) {
        if (dist > 0.0) pose.heading = std::atan2(to_goal.y, to_goal.x);
        pose.position = goal;
        state.avoid_count = 0;
        return GotoResult::Reached;
    }
    const double bearing = std::atan2(to_goal.y, to_goal.x);
    auto clear = [&](double ang) {
        if (map.sense_range(pose.position, ang, cfg.ir_range) < cfg.ir_range) return false;
        return !map.motion_blocked(pose.position,
                                   pose.position + step_len * unit_from_angle(ang));
    };
    if (clear(bearing)) {
        pose.position += step_len * unit_from_angle(bearing);
        pose.heading = bearing;
        state.avoid_count = 0;
        return GotoResult::Moving;
    }
    for (int k = 1; k <= 8; ++k) {
        for (int s : {+1, -1}) {
            if (k == 8 && s < 0) break;  // +-pi are the same bearing
            const double ang = bearing + s * k * std::numbers::pi / 8.0;
            if (!clear(ang)) continue;
            pose.position += step_len * unit_from_angle(ang);
            pose.heading = ang;
            if (++state.avoid_count >= cfg.max_avoid_steps) return GotoResult::Blocked;
            return GotoResult::Moving;
        }
    }
    // Boxed in: hold position, still an avoidance step.
    if (++state.avoid_count >= cfg.max_avoid_steps) return GotoResult::Blocked;
    return GotoResult::Moving;
}

}  // namespace amronet
