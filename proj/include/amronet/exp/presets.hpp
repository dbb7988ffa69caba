#pragma once

// Canned experiment suites mirroring the studies the CSV outputs feed:
//   fig5  — router count to cover an empty 32x32 region, r_c and agent sweep
//   fig7  — deployment count vs number of base stations and agents per base
//   fig10 — self-spreading vs force baselines, empty 6x6 arena
//   fig11 — the same arena with the committed obstacle layout
// fig5_obstacles repeats fig5 on a scaled copy of that layout.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "amronet/sim/scenario.hpp"

namespace amronet {

// Obstacle layout for the 6x6 arena: four 1.5 x 0.6 bars, 10% of the area,
// leaving every corridor connected.
inline std::vector<Rect> arena_obstacles(double scale = 1.0) {
    std::vector<Rect> out = {
        {-2.4, -1.8, -0.9, -1.2},
        {0.9, -1.8, 2.4, -1.2},
        {-2.4, 1.2, -0.9, 1.8},
        {0.9, 1.2, 2.4, 1.8},
    };
    for (Rect& r : out) {
        r.x0 *= scale;
        r.y0 *= scale;
        r.x1 *= scale;
        r.y1 *= scale;
    }
    return out;
}

namespace detail {

inline std::vector<std::uint64_t> seed_range(int n) {
    std::vector<std::uint64_t> s;
    for (int i = 1; i <= n; ++i) s.push_back(static_cast<std::uint64_t>(i));
    return s;
}

// Base stations near the corners of a square region, inset 1 m.
inline std::vector<Point2> corner_bases(const Rect& b, int n) {
    const std::vector<Point2> all = {{b.x0 + 1.0, b.y0 + 1.0},
                                     {b.x1 - 1.0, b.y1 - 1.0},
                                     {b.x0 + 1.0, b.y1 - 1.0},
                                     {b.x1 - 1.0, b.y0 + 1.0}};
    return {all.begin(), all.begin() + n};
}

inline ScenarioSpec ard_region_spec(const std::string& name, double r_c, int agents) {
    ScenarioSpec s;
    s.name = name;
    s.bounds = {0.0, 0.0, 32.0, 32.0};
    s.base_positions = {{16.0, 16.0}};
    s.agents_per_base = agents;
    s.algorithm = Algorithm::AgentAssisted;
    s.r_c = r_c;
    s.sim.sample_interval = 200;
    s.seeds = seed_range(5);
    return s;
}

inline ScenarioSpec arena_spec(const std::string& name, Algorithm algo, bool obstacles) {
    ScenarioSpec s;
    s.name = name;
    s.bounds = {-3.0, -3.0, 3.0, 3.0};
    if (obstacles) s.obstacles = arena_obstacles();
    s.base_positions = {{0.0, 0.0}};
    s.agents_per_base = 0;
    s.total_routers = 30;
    s.spawn_half_extent = 0.5;
    s.algorithm = algo;
    s.r_c = 1.0;
    s.sim.coverage_target = 1.01;  // never: runs end on quiescence or the cap
    s.sim.max_steps = 50000;
    s.sim.sample_interval = 250;
    s.seeds = seed_range(50);
    return s;
}

}  // namespace detail

inline std::vector<ScenarioSpec> preset(const std::string& name) {
    std::vector<ScenarioSpec> out;
    if (name == "fig5" || name == "fig5_obstacles") {
        const bool with_obstacles = (name == "fig5_obstacles");
        for (double r_c : {4.0, 6.0, 8.0, 10.0}) {
            for (int agents = 1; agents <= 4; ++agents) {
                ScenarioSpec s = detail::ard_region_spec(
                    name + "_rc" + std::to_string(static_cast<int>(r_c)) + "_na" +
                        std::to_string(agents),
                    r_c, agents);
                if (with_obstacles) {
                    // The arena layout is centered on the origin; recenter the
                    // scaled copy on the 32x32 region.
                    std::vector<Rect> obs = arena_obstacles(32.0 / 6.0);
                    for (Rect& r : obs) {
                        r.x0 += 16.0;
                        r.y0 += 16.0;
                        r.x1 += 16.0;
                        r.y1 += 16.0;
                    }
                    s.obstacles = std::move(obs);
                }
                out.push_back(std::move(s));
            }
        }
    } else if (name == "fig7") {
        for (int bases = 1; bases <= 4; ++bases) {
            for (int apb = 1; apb <= 3; ++apb) {
                ScenarioSpec s;
                s.name = "fig7_n" + std::to_string(bases) + "_apb" + std::to_string(apb);
                s.bounds = {0.0, 0.0, 32.0, 32.0};
                s.base_positions = detail::corner_bases(s.bounds, bases);
                s.agents_per_base = apb;
                s.algorithm = Algorithm::AgentAssisted;
                s.r_c = 4.0;
                s.sim.sample_interval = 200;
                s.seeds = detail::seed_range(10);
                out.push_back(std::move(s));
            }
        }
    } else if (name == "fig10" || name == "fig11") {
        const bool obstacles = (name == "fig11");
        for (Algorithm a : {Algorithm::SelfSpreading, Algorithm::Potential, Algorithm::Dssa}) {
            out.push_back(detail::arena_spec(name + "_" + algorithm_name(a), a, obstacles));
        }
    } else {
        throw std::invalid_argument("preset: unknown name '" + name +
                                    "' (expected fig5, fig5_obstacles, fig7, fig10, fig11)");
    }
    return out;
}

}  // namespace amronet
