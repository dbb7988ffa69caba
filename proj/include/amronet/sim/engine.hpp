#pragma once

// The run loop: builds the world from a scenario, advances entities in id
// order against per-step snapshots, commits placements and mode changes
// between steps, samples metrics, and terminates on coverage target,
// quiescence, or the step cap. Bitwise deterministic for a given seed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "amronet/baselines/forces.hpp"
#include "amronet/comm_graph.hpp"
#include "amronet/coverage.hpp"
#include "amronet/deploy/agent_assisted.hpp"
#include "amronet/deploy/core.hpp"
#include "amronet/deploy/self_spreading.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/config.hpp"
#include "amronet/sim/events.hpp"
#include "amronet/sim/motion.hpp"
#include "amronet/sim/record.hpp"
#include "amronet/sim/rng.hpp"
#include "amronet/sim/scenario.hpp"

namespace amronet {

namespace detail {

// Cell size of the engine's coverage grid relative to r_c. r_c/50 keeps the
// grid metric within ~1e-3 of exact disk areas.
inline constexpr double kEngineCoverageCell = 1.0 / 50.0;

struct SimWorld {
    WorldMap map;
    CoverageGrid grid;       // stationary disks only; monotone
    StationaryNet net;
    EventLog events;
    double r_c;
    int n_bases = 0;
    long routers_spawned = 0;

    SimWorld(const ScenarioSpec& spec)
        : map(spec.bounds, spec.obstacles),
          grid(map, spec.r_c * kEngineCoverageCell),
          net(spec.r_c),
          r_c(spec.r_c) {
        n_bases = static_cast<int>(spec.base_positions.size());
        for (int b = 0; b < n_bases; ++b) {
            net.add(b, NodeKind::BaseStation, spec.base_positions[b], b);
            grid.mark_disk(spec.base_positions[b], r_c);
        }
    }

    // Settle a router into the stationary net, with event bookkeeping.
    void settle(long step, int id, const Point2& pos, int status, bool disabled,
                EventKind kind, int ref_a, int ref_b, const std::string& note) {
        const int linked = net.add(id, NodeKind::Router, pos, status);
        grid.mark_disk(pos, r_c);
        if (disabled) net.set_disabled(id);
        events.push_back({step, kind, id, ref_a, ref_b, note});
        if (linked >= 2)
            events.push_back({step, EventKind::ComponentsMerged, id, ref_a, ref_b, ""});
    }
};

// Shared metrics sampler. Mover coverage is overlaid on the stationary grid
// without mutating it; components are counted over network nodes (agents are
// not part of the network).
class MetricsRecorder {
  public:
    MetricsRecorder(RunRecord& rec, const SimWorld& world, const SimConfig& cfg)
        : rec_(rec), world_(world), cfg_(cfg) {}

    bool due(long step) const { return step % cfg_.sample_interval == 0; }

    void sample(long step, const std::vector<NodeRecord>& mover_nodes) {
        if (!rec_.samples.empty() && rec_.samples.back().step == step) return;
        RunSample s;
        s.step = step;
        s.time_s = static_cast<double>(step) * cfg_.dt;
        s.stationary_coverage = world_.grid.fraction();
        std::vector<Point2> mover_pos;
        mover_pos.reserve(mover_nodes.size());
        for (const NodeRecord& n : mover_nodes) mover_pos.push_back(n.position);
        s.coverage = world_.grid.fraction_with(mover_pos, world_.r_c);
        s.n_routers = world_.net.size();
        s.n_deployed = world_.n_bases + static_cast<int>(world_.routers_spawned);
        const std::vector<NodeRecord>& stationary = world_.net.nodes();
        for (int b = 0; b < world_.n_bases; ++b) {
            std::vector<NodeRecord> group;
            for (const NodeRecord& n : stationary)
                if (n.status == b) group.push_back(n);
            s.per_status_components =
                std::max(s.per_status_components,
                         CommGraph(std::move(group), world_.r_c).component_count());
        }
        std::vector<NodeRecord> network = stationary;
        network.insert(network.end(), mover_nodes.begin(), mover_nodes.end());
        s.n_components = CommGraph(std::move(network), world_.r_c).component_count();
        rec_.samples.push_back(s);
    }

  private:
    RunRecord& rec_;
    const SimWorld& world_;
    const SimConfig& cfg_;
};

inline NodeRecord mover_record(int id, NodeKind kind, const Point2& pos, int status) {
    return {id, kind, pos, status, false};
}

// Draw a spawn position inside the box that is also in free space; falls back
// to the base position (always free) if the box is fully walled.
inline Point2 free_spawn(RngStream& rng, const WorldMap& map, const Point2& base,
                         double half_extent) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Point2 p = spawn_in_box(rng, base, half_extent);
        if (map.in_free_space(p)) return p;
    }
    return base;
}

inline RunResult finish(const ScenarioSpec& spec, std::uint64_t seed, SimWorld& world,
                        RunRecord& rec, std::vector<NodeRecord> movers) {
    RunResult out;
    rec.scenario = spec.name;
    rec.seed = seed;
    rec.algo = spec.algorithm;
    out.record = std::move(rec);
    out.events = std::move(world.events);
    out.final_nodes = world.net.nodes();
    out.final_nodes.insert(out.final_nodes.end(), movers.begin(), movers.end());
    out.bounds = spec.bounds;
    out.obstacles = spec.obstacles;
    out.r_c = spec.r_c;
    return out;
}

inline RunResult run_agent_assisted(const ScenarioSpec& spec, std::uint64_t seed) {
    const SimConfig& cfg = spec.sim;
    const TriangularStrategy strategy = spec.effective_strategy();
    SimWorld world(spec);
    RunRecord rec;
    MetricsRecorder recorder(rec, world, cfg);

    int next_id = world.n_bases;
    std::vector<ArdAgent> agents;
    const int n_agents = world.n_bases * spec.agents_per_base;
    // Unlimited by default; a finite pool is split evenly, low ids first.
    for (int b = 0; b < world.n_bases; ++b) {
        for (int k = 0; k < spec.agents_per_base; ++k) {
            ArdAgent a;
            a.id = next_id++;
            a.status = b;
            a.current_reference = b;
            a.rng = RngStream(seed, static_cast<std::uint64_t>(a.id));
            a.pose.position = spec.base_positions[b];
            a.pose.heading = a.rng.angle();
            agents.push_back(std::move(a));
        }
    }
    if (spec.total_routers == 0) {
        for (ArdAgent& a : agents) a.routers_remaining = std::numeric_limits<long>::max();
    } else {
        const long share = n_agents > 0 ? spec.total_routers / n_agents : 0;
        long extra = n_agents > 0 ? spec.total_routers % n_agents : 0;
        for (ArdAgent& a : agents) {
            a.routers_remaining = share + (extra > 0 ? 1 : 0);
            if (extra > 0) --extra;
        }
    }

    struct Transit {
        int id;
        int status;
        Pose pose;
        Point2 goal;
        GotoState gs;
        bool disabled_flag;
        int ref_a, ref_b;
    };
    std::vector<Transit> transits;

    auto mover_nodes = [&]() {
        std::vector<NodeRecord> out;
        for (const Transit& t : transits)
            out.push_back(mover_record(t.id, NodeKind::Router, t.pose.position, t.status));
        return out;
    };

    long step = 0;
    for (;;) {
        const bool idle = agents.empty() && transits.empty();
        const bool done = world.grid.fraction() >= cfg.coverage_target ||
                          step >= cfg.max_steps || idle;
        if (recorder.due(step) || done) recorder.sample(step, mover_nodes());
        if (done) break;

        // Phase 1: transits move (map-only reads; the net snapshot is intact).
        struct Resolved { std::size_t idx; bool blocked; };
        std::vector<Resolved> resolved;
        for (std::size_t i = 0; i < transits.size(); ++i) {
            Transit& t = transits[i];
            const GotoResult res = step_goto(t.pose, t.gs, t.goal, world.map,
                                             cfg.router_speed, cfg);
            if (res != GotoResult::Moving) resolved.push_back({i, res == GotoResult::Blocked});
        }

        // Phase 2: agents read the snapshot and decide.
        std::vector<AgentTickOutcome> outcomes;
        outcomes.reserve(agents.size());
        for (ArdAgent& a : agents)
            outcomes.push_back(tick_agent(a, world.net, world.map, cfg, world.r_c, strategy));

        // Phase 3: commit. Transit arrivals first (their ids are oldest),
        // then agent decisions in agent id order.
        for (const Resolved& r : resolved) {
            const Transit& t = transits[r.idx];
            world.settle(step, t.id, t.pose.position, t.status, t.disabled_flag,
                         EventKind::TriangleResolved, t.ref_a, t.ref_b,
                         r.blocked ? "blocked" : "reached");
        }
        for (std::size_t i = resolved.size(); i-- > 0;)
            transits.erase(transits.begin() + static_cast<long>(resolved[i].idx));

        for (std::size_t i = 0; i < agents.size(); ++i) {
            ArdAgent& a = agents[i];
            const AgentTickOutcome& o = outcomes[i];
            if (o.switched_reference)
                world.events.push_back({step, EventKind::ReferenceSwitched, a.id,
                                        o.previous_reference, a.current_reference, ""});
            if (o.adopted_status)
                world.events.push_back({step, EventKind::StatusAdopted, a.id,
                                        o.previous_status, a.status, ""});
            if (o.triangle.deploy) {
                Transit t;
                t.id = next_id++;
                t.status = world.net.node(o.triangle.old_ref).status;
                t.pose.position = o.triangle_release;
                t.goal = o.triangle.goal;
                t.disabled_flag = (strategy == TriangularStrategy::Local);
                t.ref_a = o.triangle.old_ref;
                t.ref_b = o.triangle.new_ref;
                ++world.routers_spawned;
                world.events.push_back({step, EventKind::TriangleDeployed, t.id,
                                        t.ref_a, t.ref_b, ""});
                if (strategy == TriangularStrategy::Local) {
                    world.net.set_disabled(o.triangle.old_ref);
                    world.net.set_disabled(o.triangle.new_ref);
                }
                transits.push_back(std::move(t));
            }
            if (o.greedy) {
                const int id = next_id++;
                ++world.routers_spawned;
                world.settle(step, id, o.greedy_position, a.status, false,
                             EventKind::GreedyPlaced, o.greedy_reference, -1, "");
                a.current_reference = id;
            }
            if (o.depleted && !a.depletion_logged) {
                a.depletion_logged = true;
                world.events.push_back({step, EventKind::RouterDepleted, a.id, -1, -1, ""});
            }
        }
        ++step;
    }

    std::vector<NodeRecord> movers = mover_nodes();
    for (const ArdAgent& a : agents)
        movers.push_back(mover_record(a.id, NodeKind::Agent, a.pose.position, a.status));
    return finish(spec, seed, world, rec, std::move(movers));
}

inline RunResult run_self_spreading(const ScenarioSpec& spec, std::uint64_t seed) {
    const SimConfig& cfg = spec.sim;
    const TriangularStrategy strategy = spec.effective_strategy();
    SimWorld world(spec);
    RunRecord rec;
    MetricsRecorder recorder(rec, world, cfg);

    int next_id = world.n_bases;
    std::vector<SpreadRouter> routers;
    const long n_routers = spec.total_routers;
    // Split the pool across bases, low base indexes first.
    for (int b = 0; b < world.n_bases; ++b) {
        long quota = n_routers / world.n_bases +
                     (b < static_cast<int>(n_routers % world.n_bases) ? 1 : 0);
        const double max_corner =
            std::hypot(spec.spawn_half_extent, spec.spawn_half_extent);
        if (quota > 0 && max_corner > world.r_c)
            world.events.push_back({0, EventKind::InitWarning, b, -1, -1,
                                    "spawn box reaches beyond the base reference radius"});
        for (long k = 0; k < quota; ++k) {
            SpreadRouter r;
            r.id = next_id++;
            r.rng = RngStream(seed, static_cast<std::uint64_t>(r.id));
            r.pose.position =
                free_spawn(r.rng, world.map, spec.base_positions[b], spec.spawn_half_extent);
            r.pose.heading = r.rng.angle();
            routers.push_back(std::move(r));
            ++world.routers_spawned;
        }
    }

    auto mover_nodes = [&]() {
        std::vector<NodeRecord> out;
        for (const SpreadRouter& r : routers)
            if (r.mode != SpreadMode::Reference)
                out.push_back(mover_record(r.id, NodeKind::Router, r.pose.position, r.status));
        return out;
    };

    std::vector<std::uint8_t> settled(routers.size(), 0);
    long n_settled = 0;

    long step = 0;
    for (;;) {
        const bool quiet = n_settled == static_cast<long>(routers.size());
        const bool done = world.grid.fraction() >= cfg.coverage_target ||
                          step >= cfg.max_steps || quiet;
        if (recorder.due(step) || done) recorder.sample(step, mover_nodes());
        if (done) break;

        std::vector<std::pair<std::size_t, SpreadTickOutcome>> to_commit;
        for (std::size_t i = 0; i < routers.size(); ++i) {
            if (settled[i]) continue;
            SpreadTickOutcome o =
                tick_spread_router(routers[i], world.net, world.map, cfg, world.r_c, strategy);
            if (o.froze || o.triangle.deploy || o.triangle_resolved) to_commit.push_back({i, o});
        }
        for (const auto& [i, o] : to_commit) {
            SpreadRouter& r = routers[i];
            if (o.froze) {
                settled[i] = 1;
                ++n_settled;
                world.settle(step, r.id, r.pose.position, r.status, r.disabled_flag,
                             EventKind::Frozen, -1, -1, "");
            } else if (o.triangle_resolved) {
                settled[i] = 1;
                ++n_settled;
                world.settle(step, r.id, r.pose.position, r.status, r.disabled_flag,
                             EventKind::TriangleResolved, -1, -1,
                             o.resolved_blocked ? "blocked" : "reached");
            } else if (o.triangle.deploy) {
                world.events.push_back({step, EventKind::TriangleDeployed, r.id,
                                        o.triangle.old_ref, o.triangle.new_ref, ""});
                if (strategy == TriangularStrategy::Local) {
                    world.net.set_disabled(o.triangle.old_ref);
                    world.net.set_disabled(o.triangle.new_ref);
                    r.disabled_flag = true;
                }
            }
        }
        ++step;
    }

    return finish(spec, seed, world, rec, mover_nodes());
}

inline RunResult run_force_baseline(const ScenarioSpec& spec, std::uint64_t seed) {
    const SimConfig& cfg = spec.sim;
    const ForceParams& par = spec.force;
    SimWorld world(spec);
    RunRecord rec;
    MetricsRecorder recorder(rec, world, cfg);

    const double r_s = par.r_s_factor * world.r_c;
    // Expected density from the DSSA papers' formula, over the free area.
    const double mu2 = static_cast<double>(spec.total_routers) * std::numbers::pi * r_s * r_s /
                       world.map.free_area();

    struct Body {
        int id;
        Point2 pos;
        Vec2 vel;
        int still = 0;
        bool frozen = false;
        RngStream rng;
    };
    int next_id = world.n_bases;
    std::vector<Body> bodies;
    for (int b = 0; b < world.n_bases; ++b) {
        long quota = spec.total_routers / world.n_bases +
                     (b < static_cast<int>(spec.total_routers % world.n_bases) ? 1 : 0);
        for (long k = 0; k < quota; ++k) {
            Body body;
            body.id = next_id++;
            body.rng = RngStream(seed, static_cast<std::uint64_t>(body.id));
            body.pos = free_spawn(body.rng, world.map, spec.base_positions[b],
                                  spec.spawn_half_extent);
            bodies.push_back(std::move(body));
            ++world.routers_spawned;
        }
    }

    auto mover_nodes = [&]() {
        std::vector<NodeRecord> out;
        for (const Body& b : bodies)
            if (!b.frozen)
                out.push_back(mover_record(b.id, NodeKind::Router, b.pos, 0));
        return out;
    };

    // Snapshot of every network node position (bases + all routers).
    std::vector<Point2> snapshot(world.n_bases + bodies.size());
    long n_frozen = 0;

    long step = 0;
    for (;;) {
        const bool quiet = n_frozen == static_cast<long>(bodies.size());
        const bool done = world.grid.fraction() >= cfg.coverage_target ||
                          step >= cfg.max_steps || quiet;
        if (recorder.due(step) || done) recorder.sample(step, mover_nodes());
        if (done) break;

        for (int b = 0; b < world.n_bases; ++b) snapshot[b] = spec.base_positions[b];
        for (std::size_t i = 0; i < bodies.size(); ++i)
            snapshot[world.n_bases + i] = bodies[i].pos;

        for (std::size_t i = 0; i < bodies.size(); ++i) {
            Body& body = bodies[i];
            if (body.frozen) continue;
            const std::size_t self = world.n_bases + i;
            // Neighbor set: every network node within r_c in the snapshot.
            int degree = 0;
            for (std::size_t j = 0; j < snapshot.size(); ++j)
                if (j != self && in_range(body.pos, snapshot[j], world.r_c)) ++degree;
            Vec2 f;
            for (std::size_t j = 0; j < snapshot.size(); ++j) {
                if (j == self || !in_range(body.pos, snapshot[j], world.r_c)) continue;
                if (spec.algorithm == Algorithm::Potential) {
                    f += force_cover(body.pos, snapshot[j], par, body.rng);
                    f += force_connect(body.pos, snapshot[j], degree, par, world.r_c, body.rng);
                } else {
                    f += force_dssa(body.pos, snapshot[j], degree + 1, mu2, world.r_c, par,
                                    body.rng);
                }
            }
            f += obstacle_force(world.map, body.pos, r_s, par, body.rng);
            const double moved =
                step_force(body.pos, body.vel, f, world.map, par, cfg.router_speed, cfg.dt);
            if (moved < par.freeze_disp * world.r_c)
                ++body.still;
            else
                body.still = 0;
            if (body.still >= par.freeze_steps) {
                body.frozen = true;
                ++n_frozen;
                world.settle(step, body.id, body.pos, 0, false, EventKind::Frozen, -1, -1, "");
            }
        }
        ++step;
    }

    return finish(spec, seed, world, rec, mover_nodes());
}

}  // namespace detail

// Execute one run of the scenario with the given seed.
inline RunResult run_scenario(const ScenarioSpec& spec, std::uint64_t seed) {
    spec.validate();
    switch (spec.algorithm) {
        case Algorithm::AgentAssisted: return detail::run_agent_assisted(spec, seed);
        case Algorithm::SelfSpreading: return detail::run_self_spreading(spec, seed);
        case Algorithm::Potential:
        case Algorithm::Dssa: return detail::run_force_baseline(spec, seed);
    }
    throw std::invalid_argument("run_scenario: bad algorithm");
}

}  // namespace amronet
