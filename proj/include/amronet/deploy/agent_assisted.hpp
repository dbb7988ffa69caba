#pragma once

// Agent-assisted router deployment: exploring agents drop routers greedily as
// they are about to lose their last reference, and launch triangular bridge
// routers when they encounter a reference of another base station's network.

#include <algorithm>
#include <vector>

#include "amronet/deploy/core.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/config.hpp"
#include "amronet/sim/motion.hpp"
#include "amronet/sim/rng.hpp"

namespace amronet {

struct ArdAgent {
    int id = 0;
    int status = 0;                 // base-station label the agent belongs to
    int current_reference = -1;     // node id it is anchored on (-1 = none yet)
    long routers_remaining = 0;
    bool depletion_logged = false;
    Pose pose;
    RngStream rng;
    // Reference ids that were in range at the previous tick; encounters are
    // edge-triggered (a reference must *enter* range to count as met anew).
    std::vector<int> in_range_prev;
};

// What one agent tick decided; the engine commits spawns and events after all
// entities have read the same snapshot.
struct AgentTickOutcome {
    bool switched_reference = false;
    int previous_reference = -1;
    bool adopted_status = false;
    int previous_status = -1;
    bool greedy = false;
    Point2 greedy_position;
    int greedy_reference = -1;      // reference the placement backed toward
    TriangleDecision triangle;      // .deploy set when a bridge router launches
    Point2 triangle_release;        // where the bridge router starts
    bool depleted = false;          // wanted to place but the budget is empty
};

// One agent step against a fixed snapshot of the stationary net:
// (1) re-anchor on the nearest in-range reference, (2) handle a cross-network
// encounter: a reference with another status that just entered range may
// trigger a triangular bridge, and the agent joins that network, (3) greedy-
// release if the last reference is about to go out of range, (4) random-walk.
// Mutates only the agent itself.
inline AgentTickOutcome tick_agent(ArdAgent& agent, const StationaryNet& net,
                                   const WorldMap& map, const SimConfig& cfg, double r_c,
                                   TriangularStrategy strategy) {
    AgentTickOutcome out;
    const std::vector<RangedReference> refs = net.references_near(agent.pose.position);

    auto anchor_on = [&](int ref_id) {
        if (agent.current_reference == ref_id) return;
        if (!out.switched_reference) {
            out.switched_reference = true;
            out.previous_reference = agent.current_reference;
        }
        agent.current_reference = ref_id;
    };
    auto adopt = [&](int status) {
        if (agent.status == status) return;
        if (!out.adopted_status) {
            out.adopted_status = true;
            out.previous_status = agent.status;
        }
        agent.status = status;
    };

    // (1) The nearest in-range reference (ties to lowest id) is the current
    // reference; with none in range the stale anchor is kept as last-known.
    if (!refs.empty()) anchor_on(refs[0].id);

    // (2) Cross-network encounter: the nearest reference of another status
    // that entered range this tick. Bridging needs an own-status endpoint in
    // range too; either way the agent joins the encountered network.
    const RangedReference* entered = nullptr;
    const RangedReference* own = nullptr;
    for (const RangedReference& r : refs) {
        if (r.status == agent.status) {
            if (!own) own = &r;
        } else if (!entered &&
                   !std::binary_search(agent.in_range_prev.begin(),
                                       agent.in_range_prev.end(), r.id)) {
            entered = &r;
        }
    }
    if (entered) {
        if (own) {
            const TriangleDecision dec =
                on_new_reference(net, strategy, own->id, entered->id, agent.pose.position);
            if (dec.deploy) {
                if (agent.routers_remaining > 0) {
                    --agent.routers_remaining;
                    out.triangle = dec;
                    out.triangle_release = agent.pose.position;
                } else {
                    out.depleted = true;
                }
            }
        }
        adopt(entered->status);
        anchor_on(entered->id);
    } else if (agent.current_reference >= 0 && !refs.empty()) {
        // Keep the agent on its anchor's network even when the anchor changed
        // without an encounter (the anchor is nearest regardless of status).
        adopt(net.node(agent.current_reference).status);
    }

    // (3) About to lose the last reference: drop a stationary router slightly
    // back toward the anchor so the new node is connected to the network.
    if (should_release(refs, cfg.release_factor, r_c)) {
        if (agent.routers_remaining > 0) {
            --agent.routers_remaining;
            out.greedy = true;
            out.greedy_reference = agent.current_reference;
            Point2 p = greedy_place(agent.pose.position,
                                    net.node(agent.current_reference).position,
                                    cfg.place_back_off);
            // The back-off could graze an obstacle edge case; never place in a wall.
            if (!map.in_free_space(p)) p = agent.pose.position;
            out.greedy_position = p;
        } else {
            out.depleted = true;
        }
    }

    agent.in_range_prev.clear();
    for (const RangedReference& r : refs) agent.in_range_prev.push_back(r.id);
    std::sort(agent.in_range_prev.begin(), agent.in_range_prev.end());

    // (4) Explore.
    step_random_walk(agent.pose, agent.rng, map, cfg.agent_speed, cfg);
    return out;
}

}  // namespace amronet
