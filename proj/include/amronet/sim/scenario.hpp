#pragma once

// Everything that defines one experiment condition: world, population,
// algorithm, its knobs, and the replicate seed list.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amronet/deploy/core.hpp"
#include "amronet/geometry.hpp"
#include "amronet/sim/config.hpp"

namespace amronet {

enum class Algorithm { AgentAssisted, SelfSpreading, Potential, Dssa };

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::AgentAssisted: return "agent_assisted";
        case Algorithm::SelfSpreading: return "self_spreading";
        case Algorithm::Potential: return "potential";
        case Algorithm::Dssa: return "dssa";
    }
    return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(const std::string& s) {
    if (s == "agent_assisted") return Algorithm::AgentAssisted;
    if (s == "self_spreading") return Algorithm::SelfSpreading;
    if (s == "potential") return Algorithm::Potential;
    if (s == "dssa") return Algorithm::Dssa;
    return std::nullopt;
}

// Knobs of the potential-field baseline. The source constants are not
// published, so these are inputs; comparisons against it are ordinal.
struct ForceParams {
    double k_cover = 1.0;      // inverse-square neighbor repulsion constant
    double k_degree = 1.0;     // connectivity attraction constant
    int critical_degree = 1;   // attraction active while degree <= this
    double damping = 0.25;
    double safety = 0.8;
    double r_s_factor = 0.5;   // sensing radius r_s as a fraction of r_c
    double force_cap = 1000.0; // per-term magnitude cap (poles, coincidence)
    bool literal_signs = false;  // flip pairwise terms to the printed-sign variant
    double freeze_disp = 1e-3;   // fraction of r_c below which a step counts as still
    int freeze_steps = 50;       // consecutive still steps before a node settles

    void validate() const {
        if (k_cover <= 0.0 || k_degree <= 0.0)
            throw std::invalid_argument("ForceParams: force constants must be positive");
        if (critical_degree < 1) throw std::invalid_argument("ForceParams: critical_degree >= 1");
        if (damping <= 0.0 || damping > 1.0 || safety <= 0.0 || safety > 1.0)
            throw std::invalid_argument("ForceParams: damping/safety must be in (0,1]");
        if (r_s_factor <= 0.0) throw std::invalid_argument("ForceParams: r_s_factor must be positive");
        if (force_cap <= 0.0) throw std::invalid_argument("ForceParams: force_cap must be positive");
        if (freeze_disp <= 0.0 || freeze_steps < 1)
            throw std::invalid_argument("ForceParams: bad freeze rule");
    }
};

struct ScenarioSpec {
    std::string name = "scenario";
    Rect bounds{0.0, 0.0, 32.0, 32.0};
    std::vector<Rect> obstacles;
    std::vector<Point2> base_positions{{1.0, 1.0}};
    int agents_per_base = 1;     // agent-assisted only
    long total_routers = 0;      // 0 = unlimited (agent-assisted); pool size otherwise
    double spawn_half_extent = 0.5;  // spreading/forces start in a box base +- this
    Algorithm algorithm = Algorithm::AgentAssisted;
    TriangularStrategy strategy = TriangularStrategy::Global;
    bool strategy_set = false;   // false = use the algorithm's default
    SimConfig sim;
    double r_c = 4.0;
    ForceParams force;
    std::vector<std::uint64_t> seeds{1};

    TriangularStrategy effective_strategy() const {
        if (strategy_set) return strategy;
        // Agent-assisted defaults to the global gate; self-spreading is a
        // local-information algorithm and defaults to local flags.
        return algorithm == Algorithm::SelfSpreading ? TriangularStrategy::Local
                                                     : TriangularStrategy::Global;
    }

    void validate() const {
        sim.validate();
        force.validate();
        if (r_c <= 0.0) throw std::invalid_argument("ScenarioSpec: r_c must be positive");
        if (sim.place_back_off >= r_c)
            throw std::invalid_argument("ScenarioSpec: placement back-off must be < r_c");
        WorldMap map(bounds, obstacles);  // validates geometry
        if (base_positions.empty())
            throw std::invalid_argument("ScenarioSpec: at least one base station required");
        for (std::size_t i = 0; i < base_positions.size(); ++i) {
            if (!map.in_free_space(base_positions[i]))
                throw std::invalid_argument("ScenarioSpec: base station " + std::to_string(i) +
                                            " is not in free space");
        }
        if (agents_per_base < 0)
            throw std::invalid_argument("ScenarioSpec: agents_per_base must be >= 0");
        if (total_routers < 0)
            throw std::invalid_argument("ScenarioSpec: total_routers must be >= 0");
        if (spawn_half_extent <= 0.0)
            throw std::invalid_argument("ScenarioSpec: spawn_half_extent must be positive");
        if (seeds.empty()) throw std::invalid_argument("ScenarioSpec: seed list is empty");
        if (algorithm != Algorithm::AgentAssisted && total_routers == 0)
            throw std::invalid_argument(
                "ScenarioSpec: this algorithm needs an explicit router pool (total_routers)");
    }
};

}  // namespace amronet
