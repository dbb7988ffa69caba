#pragma once

// Simulation-wide knobs shared by all algorithms. Defaults model small indoor
// swarm robots: slow movers with short-range IR proximity sensing and a
// longer-range forward sonar.

#include <stdexcept>

namespace amronet {

struct SimConfig {
    double dt = 0.1;               // seconds per step
    double agent_speed = 0.4;      // m/s, exploring agents
    double router_speed = 0.1;     // m/s, relocating routers
    double sonar_range = 2.0;      // m, forward wall sensing while wandering
    double ir_range = 0.14;        // m, proximity probe for goal-directed moves
    double p_turn = 0.02;          // per-step spontaneous heading resample
    int max_avoid_steps = 20;      // goal-seeking gives up after this many dodges
    double release_factor = 0.9;   // theta: release when refs are >= theta*r_c away
    double place_back_off = 0.1;   // m, placement offset back toward the reference
    double coverage_target = 0.99; // stationary coverage that ends a run
    long max_steps = 200000;       // hard step cap
    long sample_interval = 100;    // record a metrics row every this many steps

    void validate() const {
        if (dt <= 0.0) throw std::invalid_argument("SimConfig: dt must be positive");
        if (agent_speed <= 0.0 || router_speed <= 0.0)
            throw std::invalid_argument("SimConfig: speeds must be positive");
        if (sonar_range <= 0.0 || ir_range <= 0.0)
            throw std::invalid_argument("SimConfig: sensor ranges must be positive");
        if (p_turn < 0.0 || p_turn > 1.0)
            throw std::invalid_argument("SimConfig: p_turn must be in [0,1]");
        if (max_avoid_steps < 1)
            throw std::invalid_argument("SimConfig: max_avoid_steps must be >= 1");
        if (release_factor <= 0.0 || release_factor > 1.0)
            throw std::invalid_argument("SimConfig: release_factor must be in (0,1]");
        if (place_back_off < 0.0)
            throw std::invalid_argument("SimConfig: place_back_off must be >= 0");
        if (max_steps < 1) throw std::invalid_argument("SimConfig: max_steps must be >= 1");
        if (sample_interval < 1)
            throw std::invalid_argument("SimConfig: sample_interval must be >= 1");
    }
};

}  // namespace amronet
