#pragma once

// Force-based spreading baselines: inverse-square coverage repulsion plus
// critical-connectivity attraction (potential field), and the
// density-weighted spring toward spacing r_c (DSSA). Shared damped integrator
// with displacement clamping and a stillness-based freeze rule.

#include <cmath>

#include "amronet/geometry.hpp"
#include "amronet/sim/rng.hpp"
#include "amronet/sim/scenario.hpp"

namespace amronet {

namespace detail {

inline Vec2 cap_magnitude(const Vec2& f, double cap) {
    const double m = norm(f);
    if (m <= cap || m == 0.0) return f;
    return (cap / m) * f;
}

// Direction away from j, or a seeded random direction when the points
// coincide (the caller's own stream keeps this deterministic per entity).
inline Vec2 away_dir(const Point2& p_i, const Point2& p_j, RngStream& tie_rng, bool& coincident) {
    const Vec2 d = p_i - p_j;
    const double m = norm(d);
    coincident = (m == 0.0);
    if (coincident) return unit_from_angle(tie_rng.angle());
    return (1.0 / m) * d;
}

}  // namespace detail

// Coverage force: push i away from neighbor j with magnitude k_cover/d^2,
// capped. literal_signs flips to the attracting printed-sign variant.
inline Vec2 force_cover(const Point2& p_i, const Point2& p_j, const ForceParams& par,
                        RngStream& tie_rng) {
    bool coincident = false;
    const Vec2 dir = detail::away_dir(p_i, p_j, tie_rng, coincident);
    const double sign = par.literal_signs ? -1.0 : 1.0;
    if (coincident) return sign * par.force_cap * dir;
    const double d2 = distance2(p_i, p_j);
    return detail::cap_magnitude((sign * par.k_cover / d2) * dir, par.force_cap);
}

// Connectivity force: while i's degree is critical (<= critical_degree), pull
// i toward j with magnitude k_degree/(d - r_c)^2, capped at the pole.
inline Vec2 force_connect(const Point2& p_i, const Point2& p_j, int degree_i,
                          const ForceParams& par, double r_c, RngStream& tie_rng) {
    if (degree_i > par.critical_degree) return {};
    bool coincident = false;
    const Vec2 toward = -1.0 * detail::away_dir(p_i, p_j, tie_rng, coincident);
    const double sign = par.literal_signs ? -1.0 : 1.0;
    if (coincident) return sign * par.force_cap * toward;
    const double gap = distance(p_i, p_j) - r_c;
    if (gap == 0.0) return sign * par.force_cap * toward;
    return detail::cap_magnitude((sign * par.k_degree / (gap * gap)) * toward, par.force_cap);
}

// DSSA force: magnitude (D_i/mu2)*|r_c - d|, away from j when too close,
// toward j when too far (equilibrium at spacing r_c).
inline Vec2 force_dssa(const Point2& p_i, const Point2& p_j, int density_i, double mu2,
                       double r_c, const ForceParams& par, RngStream& tie_rng) {
    bool coincident = false;
    const Vec2 away = detail::away_dir(p_i, p_j, tie_rng, coincident);
    const double sign = par.literal_signs ? -1.0 : 1.0;
    if (coincident) return sign * par.force_cap * away;
    const double d = distance(p_i, p_j);
    return detail::cap_magnitude((sign * density_i / mu2 * (r_c - d)) * away, par.force_cap);
}

// Repulsion from every obstacle whose nearest point is within the sensing
// radius r_s: inverse-square from that nearest point, k_cover scale. The
// outer walls are not force sources (motion clamping handles them).
inline Vec2 obstacle_force(const WorldMap& map, const Point2& p, double r_s,
                           const ForceParams& par, RngStream& tie_rng) {
    Vec2 f;
    for (const Rect& o : map.obstacles()) {
        const Point2 q = o.clamp(p);
        const double d = distance(p, q);
        if (d > r_s) continue;
        if (d == 0.0) {
            f += par.force_cap * unit_from_angle(tie_rng.angle());
            continue;
        }
        f += detail::cap_magnitude((par.k_cover / (d * d) / d) * (p - q), par.force_cap);
    }
    return f;
}

// Damped integration of one node under `force`; returns the displacement
// actually applied. Velocity is state; a blocked move is rejected and zeroes
// it (prevents grinding against walls). Displacement is clamped to what the
// router could physically travel in dt.
inline double step_force(Point2& pos, Vec2& vel, const Vec2& force, const WorldMap& map,
                         const ForceParams& par, double router_speed, double dt) {
    vel = par.damping * (vel + dt * force);
    Vec2 disp = par.safety * dt * vel;
    const double limit = router_speed * dt;
    const double m = norm(disp);
    if (m > limit) disp = (limit / m) * disp;
    if (disp.x == 0.0 && disp.y == 0.0) return 0.0;
    const Point2 cand = pos + disp;
    if (map.motion_blocked(pos, cand)) {
        vel = {};
        return 0.0;
    }
    pos = cand;
    return norm(disp);
}

}  // namespace amronet
