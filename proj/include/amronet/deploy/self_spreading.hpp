#pragma once

// Self-spreading deployment: the routers themselves wander out of the base
// station, freeze into references when about to lose their last reference,
// and bridge foreign networks triangularly.

#include <cstdint>
#include <vector>

#include "amronet/deploy/core.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/config.hpp"
#include "amronet/sim/motion.hpp"
#include "amronet/sim/rng.hpp"

namespace amronet {

enum class SpreadMode : std::uint8_t { Explore, Reference, Triangle };

struct SpreadRouter {
    int id = 0;
    int status = -1;  // unattached until a reference is in range
    SpreadMode mode = SpreadMode::Explore;
    Pose pose;
    Point2 goal;       // Triangle mode target
    GotoState goto_state;
    bool disabled_flag = false;  // carried into the net when it settles (Local)
    RngStream rng;
};

struct SpreadTickOutcome {
    bool froze = false;             // rule (3): became Reference in place
    TriangleDecision triangle;      // .deploy when it turned toward a bridge goal
    bool triangle_resolved = false; // bridge transit finished this tick
    bool resolved_blocked = false;  // ... by giving up rather than arriving
};

// One router step against a fixed snapshot. Explore: adopt the nearest
// reference's status, bridge on a cross-status encounter, freeze when every
// in-range reference sits beyond theta*r_c, otherwise wander. Triangle: head
// for the goal; arriving or giving up both settle it as a Reference there.
// Reference is terminal. Mutates only the router; the engine commits net
// insertions and disabled marks afterwards.
inline SpreadTickOutcome tick_spread_router(SpreadRouter& r, const StationaryNet& net,
                                            const WorldMap& map, const SimConfig& cfg,
                                            double r_c, TriangularStrategy strategy) {
    SpreadTickOutcome out;
    if (r.mode == SpreadMode::Reference) return out;

    if (r.mode == SpreadMode::Triangle) {
        const GotoResult res = step_goto(r.pose, r.goto_state, r.goal, map, cfg.router_speed, cfg);
        if (res != GotoResult::Moving) {
            r.mode = SpreadMode::Reference;
            out.triangle_resolved = true;
            out.resolved_blocked = (res == GotoResult::Blocked);
        }
        return out;
    }

    const std::vector<RangedReference> refs = net.references_near(r.pose.position);
    if (!refs.empty()) {
        r.status = refs[0].status;  // provisional attachment to the nearest
        const RangedReference* diff = nullptr;
        for (const RangedReference& q : refs) {
            if (q.status != r.status) {
                diff = &q;
                break;
            }
        }
        if (diff) {
            const TriangleDecision dec =
                on_new_reference(net, strategy, refs[0].id, diff->id, r.pose.position);
            if (dec.deploy) {
                r.mode = SpreadMode::Triangle;
                r.goal = dec.goal;
                r.goto_state = {};
                out.triangle = dec;
                return out;
            }
        }
        if (should_release(refs, cfg.release_factor, r_c)) {
            r.mode = SpreadMode::Reference;
            out.froze = true;
            return out;
        }
    }
    step_random_walk(r.pose, r.rng, map, cfg.router_speed, cfg);
    return out;
}

// Uniform spawn positions inside the box base +- half_extent, one draw pair
// per router from its own stream (placement is independent of router count).
inline Point2 spawn_in_box(RngStream& rng, const Point2& base, double half_extent) {
    const double x = rng.uniform(base.x - half_extent, base.x + half_extent);
    const double y = rng.uniform(base.y - half_extent, base.y + half_extent);
    return {x, y};
}

}  // namespace amronet
