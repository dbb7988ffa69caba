// Agent-assisted deployment: anchoring, edge-triggered cross-network
// encounters, status adoption, the greedy release rule in closed loop, and a
// frozen single-seed regression of the full pipeline.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "amronet/deploy/agent_assisted.hpp"
#include "amronet/deploy/core.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/config.hpp"
#include "amronet/sim/engine.hpp"

using namespace amronet;
using Catch::Approx;

namespace {

ArdAgent make_agent(int id, int status, const Point2& pos, long budget = 1000) {
    ArdAgent a;
    a.id = id;
    a.status = status;
    a.pose.position = pos;
    a.routers_remaining = budget;
    a.rng = RngStream(1u, static_cast<std::uint64_t>(id));
    return a;
}

}  // namespace

TEST_CASE("agent anchors on the nearest reference and keeps a stale anchor") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0});
    const SimConfig cfg;
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);
    net.add(1, NodeKind::Router, {13.0, 10.0}, 0);

    ArdAgent a = make_agent(100, 0, {12.5, 10.0});
    AgentTickOutcome out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    CHECK(a.current_reference == 1);  // nearer than the base
    CHECK(out.switched_reference);
    CHECK(out.previous_reference == -1);
    CHECK_FALSE(out.adopted_status);

    // Way out of range: the anchor persists as last-known.
    a.pose.position = {30.0, 30.0};
    out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    CHECK(a.current_reference == 1);
    CHECK_FALSE(out.switched_reference);
    CHECK(a.in_range_prev.empty());
}

TEST_CASE("cross-network encounters are edge-triggered") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0});
    SimConfig cfg;
    cfg.p_turn = 0.0;
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);
    net.add(1, NodeKind::BaseStation, {16.0, 10.0}, 1);  // separate network

    ArdAgent a = make_agent(100, 0, {13.0, 10.0});
    a.current_reference = 0;
    a.in_range_prev = {0};  // the foreign base 1 is *entering* range now

    AgentTickOutcome out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    REQUIRE(out.triangle.deploy);
    CHECK(out.triangle.old_ref == 0);
    CHECK(out.triangle.new_ref == 1);
    CHECK(distance(out.triangle.goal, net.node(0).position) == Approx(4.0));
    CHECK(distance(out.triangle.goal, net.node(1).position) == Approx(4.0));
    // The agent joins the encountered network and re-anchors on it.
    CHECK(out.adopted_status);
    CHECK(out.previous_status == 0);
    CHECK(a.status == 1);
    CHECK(a.current_reference == 1);
    CHECK(std::binary_search(a.in_range_prev.begin(), a.in_range_prev.end(), 1));

    // Both bases still in range next tick (nearer to its own base 1, so the
    // anchor holds): the foreign reference is no longer *new*, so no second
    // bridge fires even though the components are still separate.
    a.pose.position = {14.0, 10.0};
    out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    CHECK_FALSE(out.triangle.deploy);
    CHECK_FALSE(out.adopted_status);
    CHECK(a.status == 1);
}

TEST_CASE("an encounter without an own-status endpoint still flips the agent") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0});
    const SimConfig cfg;
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);

    // The agent belongs to network 7 but only network 0's base is in range.
    ArdAgent a = make_agent(100, 7, {12.0, 10.0});
    const long before = a.routers_remaining;
    const AgentTickOutcome out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    CHECK_FALSE(out.triangle.deploy);   // no own-status endpoint to bridge from
    CHECK_FALSE(out.depleted);
    CHECK(a.routers_remaining == before);
    CHECK(out.adopted_status);
    CHECK(a.status == 0);
    CHECK(a.current_reference == 0);
}

TEST_CASE("agent status always tracks its current reference's network") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0});
    const SimConfig cfg;
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);
    net.add(1, NodeKind::BaseStation, {15.0, 10.0}, 1);

    ArdAgent a = make_agent(100, 0, {11.0, 10.0});
    a.current_reference = 0;
    // Both bases were already in range before; the agent drifts toward base 1
    // until it is the nearest. No encounter fires (nothing entered), but the
    // status follows the anchor.
    a.in_range_prev = {0, 1};
    a.pose.position = {13.0, 10.0};  // base 1 at distance 2, base 0 at 3
    const AgentTickOutcome out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    CHECK_FALSE(out.triangle.deploy);
    CHECK(a.current_reference == 1);
    CHECK(out.switched_reference);
    CHECK(out.adopted_status);
    CHECK(a.status == net.node(a.current_reference).status);
}

TEST_CASE("greedy release fires in the outer shell with the back-off applied") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0});
    const SimConfig cfg;  // release at 0.9 * 4.0 = 3.6, back-off 0.1
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);

    ArdAgent near = make_agent(100, 0, {13.5, 10.0});
    CHECK_FALSE(tick_agent(near, net, map, cfg, 4.0, TriangularStrategy::Global).greedy);

    ArdAgent far = make_agent(101, 0, {13.7, 10.0});
    const AgentTickOutcome out = tick_agent(far, net, map, cfg, 4.0, TriangularStrategy::Global);
    REQUIRE(out.greedy);
    CHECK(out.greedy_reference == 0);
    CHECK(out.greedy_position.x == Approx(13.6));
    CHECK(out.greedy_position.y == Approx(10.0));
    CHECK(far.routers_remaining == 999);
}

TEST_CASE("a back-off landing inside an obstacle falls back to the agent position") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0}, {{13.55, 9.5, 13.65, 10.5}});
    const SimConfig cfg;
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);

    ArdAgent a = make_agent(100, 0, {13.7, 10.0});
    const AgentTickOutcome out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    REQUIRE(out.greedy);
    CHECK(out.greedy_position.x == Approx(13.7));  // (13.6, 10) is walled off
}

TEST_CASE("an empty router budget reports depletion instead of placing") {
    const WorldMap map({0.0, 0.0, 40.0, 40.0});
    const SimConfig cfg;
    StationaryNet net(4.0);
    net.add(0, NodeKind::BaseStation, {10.0, 10.0}, 0);

    ArdAgent a = make_agent(100, 0, {13.7, 10.0}, 0);
    const AgentTickOutcome out = tick_agent(a, net, map, cfg, 4.0, TriangularStrategy::Global);
    CHECK_FALSE(out.greedy);
    CHECK(out.depleted);
}

TEST_CASE("closed-loop chain keeps consecutive spacings near (theta - delta/r_c) r_c") {
    // A non-turning agent walking a straight corridor drops a bead chain:
    // every release happens the first tick the last reference passes 3.6, and
    // the bead lands 0.1 back, so consecutive spacing is 3.5 (+ at most one
    // 0.04 step of overshoot).
    const WorldMap map({0.0, 0.0, 200.0, 10.0});
    SimConfig cfg;
    cfg.p_turn = 0.0;
    const double r_c = 4.0;
    StationaryNet net(r_c);
    net.add(0, NodeKind::BaseStation, {1.0, 5.0}, 0);

    ArdAgent a = make_agent(100, 0, {1.0, 5.0});
    a.pose.heading = 0.0;  // straight +x, far from any wall
    int next_id = 1;
    for (int step = 0; step < 4000 && a.pose.position.x < 180.0; ++step) {
        const AgentTickOutcome out = tick_agent(a, net, map, cfg, r_c, TriangularStrategy::Global);
        REQUIRE_FALSE(out.triangle.deploy);  // single network: greedy only
        if (out.greedy) {
            net.add(next_id, NodeKind::Router, out.greedy_position, a.status);
            a.current_reference = next_id;
            ++next_id;
        }
    }
    REQUIRE(next_id > 40);  // ~50 beads over 180 m
    const std::vector<NodeRecord>& nodes = net.nodes();
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double d = distance(nodes[i].position, nodes[i - 1].position);
        CHECK(d >= 3.5 - 1e-9);
        CHECK(d <= 3.5 + 0.05);
    }
    CHECK(net.component_count() == 1);
}

TEST_CASE("full-run regression: one agent, one base, empty benchmark box") {
    ScenarioSpec spec;
    spec.name = "regression";
    spec.bounds = {0.0, 0.0, 32.0, 32.0};
    spec.base_positions = {{16.0, 16.0}};
    spec.agents_per_base = 1;
    spec.algorithm = Algorithm::AgentAssisted;
    spec.r_c = 4.0;
    spec.seeds = {1};

    const RunResult run = run_scenario(spec, 1u);
    const RunSample& last = run.record.final_sample();
    CHECK(last.step == 78177);
    CHECK(last.n_routers == 65);
    CHECK(last.n_deployed == 65);
    CHECK(last.n_components == 1);
    CHECK(last.coverage == Approx(0.990906).margin(1e-5));
    CHECK(last.stationary_coverage >= 0.99);
    CHECK(last.per_status_components == 1);

    // Release geometry guarantees stationary nodes never stack closer than
    // theta*r_c - delta anywhere, not just along one chain.
    double min_pair = 1e9;
    std::vector<Point2> fixed;
    for (const NodeRecord& n : run.final_nodes)
        if (n.kind != NodeKind::Agent && n.is_reference) fixed.push_back(n.position);
    for (std::size_t i = 0; i < fixed.size(); ++i)
        for (std::size_t j = i + 1; j < fixed.size(); ++j)
            min_pair = std::min(min_pair, distance(fixed[i], fixed[j]));
    CHECK(min_pair >= 3.5 - 1e-6);
    CHECK(min_pair == Approx(3.5011).margin(1e-3));

    // Greedy events account for every non-base node.
    CHECK(count_events(run.events, EventKind::GreedyPlaced) == 64);
    CHECK(count_events(run.events, EventKind::TriangleDeployed) == 0);
}
